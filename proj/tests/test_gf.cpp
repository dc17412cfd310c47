#include <doctest.h>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "wdist/error.hpp"
#include "wdist/gf.hpp"

using namespace wdist;
using gf::FieldElem;

namespace {

gf::FieldCtx builtin(std::uint32_t p, unsigned m) { return gf::build_field(p, m, *gf::builtin_modulus(p, m)); }

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("build_field: small fields and validation errors") {
    const auto f3 = gf::build_field(3, 1, {1, 1});  // x + 1
    CHECK(f3.pi() == FieldElem::from_index(2));
    CHECK(f3.order() == 3);

    const auto f9 = gf::build_field(3, 2, {2, 2, 1});
    FieldElem x = f9.one();
    for (int i = 1; i <= 8; ++i) {
        x = f9.mul(x, f9.pi());
        CHECK((x == f9.one()) == (i == 8));
    }

    CHECK(code_of([] { gf::build_field(3, 2, {1, 0, 1}); }) == ErrorCode::NotPrimitive);
    CHECK(code_of([] { gf::build_field(3, 2, {2, 0, 1}); }) == ErrorCode::NotIrreducible);  // x^2 - 1
    CHECK(code_of([] { gf::build_field(9, 1, {1, 1}); }) == ErrorCode::NotPrime);
    CHECK(code_of([] { gf::build_field(3, 26, std::vector<std::uint32_t>(27, 1)); }) == ErrorCode::TooLarge);
    CHECK(code_of([] { gf::build_field(3, 2, {2, 2, 2}); }) == ErrorCode::InvalidParameters);
    CHECK(code_of([] { gf::build_field(3, 2, {2, 2}); }) == ErrorCode::InvalidParameters);
}

TEST_CASE("builtin moduli are primitive for p in {3,5,7}, m <= 8") {
    for (std::uint32_t p : {3u, 5u, 7u}) {
        for (unsigned m = 1; m <= 8; ++m) {
            auto mod = gf::builtin_modulus(p, m);
            REQUIRE(mod.has_value());
            if (oracle::power(p, m) > (1u << 24)) continue;
            CHECK_NOTHROW(gf::build_field(p, m, *mod));
        }
    }
    CHECK_FALSE(gf::builtin_modulus(11, 2).has_value());
}

TEST_CASE("arithmetic agrees with the naive oracle field") {
    for (auto [p, m] : {std::pair{3u, 2u}, {3u, 4u}, {5u, 3u}, {7u, 2u}, {3u, 6u}}) {
        const auto ctx = builtin(p, m);
        const oracle::NaiveField nf{p, m, ctx.modulus()};
        std::mt19937_64 rng(p * 100 + m);
        std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order() - 1);
        CHECK(nf.to_index(nf.x()) == ctx.pi().index());
        for (int trial = 0; trial < 300; ++trial) {
            const auto a = pick(rng), b = pick(rng);
            const auto A = FieldElem::from_index(a), B = FieldElem::from_index(b);
            CHECK(ctx.mul(A, B).index() == nf.to_index(nf.mul(nf.from_index(a), nf.from_index(b))));
            CHECK(ctx.add(A, B).index() == nf.to_index(nf.add(nf.from_index(a), nf.from_index(b))));
            CHECK(ctx.trace(A) == nf.trace(nf.from_index(a)));
            const std::uint64_t e = pick(rng);
            CHECK(ctx.pow(A, static_cast<std::int64_t>(e)).index() == nf.to_index(nf.pow(nf.from_index(a), e)));
        }
    }
}

TEST_CASE("field operation examples") {
    const auto f9 = gf::build_field(3, 2, {2, 2, 1});
    CHECK(f9.mul(f9.pi(), f9.pi()) == f9.add(f9.pi(), f9.one()));
    CHECK(f9.trace(f9.pi()) == 1);
    CHECK(f9.trace(f9.zero()) == 0);

    const auto ctx = builtin(5, 3);
    for (std::uint64_t i = 1; i < ctx.order(); ++i) {
        const auto a = FieldElem::from_index(i);
        CHECK(ctx.pow(a, static_cast<std::int64_t>(ctx.group_order())) == ctx.one());
        CHECK(ctx.add(a, ctx.zero()) == a);
        CHECK(ctx.mul(a, ctx.inv(a)) == ctx.one());
        CHECK(ctx.pow(a, -1) == ctx.inv(a));
        CHECK(ctx.exp(ctx.log(a)) == a);
        CHECK(ctx.add(a, ctx.neg(a)) == ctx.zero());
    }
    for (std::int64_t c = 0; c < 5; ++c) CHECK(ctx.trace(ctx.constant(c)) == (3 * c) % 5);
    CHECK(code_of([&] { ctx.inv(ctx.zero()); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([&] { ctx.log(ctx.zero()); }) == ErrorCode::DivisionByZero);
}

TEST_CASE("log is a bijection onto Z_n and u_p generates F_p^*") {
    for (auto [p, m] : {std::pair{3u, 4u}, {5u, 2u}, {7u, 3u}}) {
        const auto ctx = builtin(p, m);
        std::vector<bool> seen(ctx.group_order(), false);
        for (std::uint64_t i = 1; i < ctx.order(); ++i) {
            const auto l = ctx.log(FieldElem::from_index(i));
            REQUIRE(l < ctx.group_order());
            CHECK_FALSE(seen[l]);
            seen[l] = true;
        }
        CHECK(ctx.u_p().index() < p);
        FieldElem u = ctx.one();
        for (unsigned i = 1; i < p; ++i) {
            u = ctx.mul(u, ctx.u_p());
            CHECK((u == ctx.one()) == (i == p - 1));
        }
    }
}

TEST_CASE("trace: linearity, Frobenius invariance and balance (exhaustive to 3^6)") {
    for (auto [p, m] : {std::pair{3u, 6u}, {5u, 3u}, {7u, 2u}}) {
        const auto ctx = builtin(p, m);
        const std::uint64_t q = ctx.order();
        std::vector<std::uint64_t> hist(p, 0);
        std::mt19937_64 rng(q);
        std::uniform_int_distribution<std::uint64_t> pick(0, q - 1);
        for (std::uint64_t i = 0; i < q; ++i) {
            const auto x = FieldElem::from_index(i);
            ++hist[ctx.trace(x)];
            CHECK(ctx.trace(ctx.frobenius(x, 1)) == ctx.trace(x));
            const auto y = FieldElem::from_index(pick(rng));
            const std::uint32_t a = static_cast<std::uint32_t>(i % p), b = static_cast<std::uint32_t>((i / p) % p);
            const auto lhs = ctx.trace(ctx.add(ctx.mul(ctx.constant(a), x), ctx.mul(ctx.constant(b), y)));
            CHECK(lhs == (a * ctx.trace(x) + b * ctx.trace(y)) % p);
        }
        for (auto c : hist) CHECK(c == q / p);
    }
}

TEST_CASE("trace_of_power matches trace of exp") {
    const auto ctx = builtin(3, 6);
    for (std::uint64_t e = 0; e < 2 * ctx.group_order(); e += 7) CHECK(ctx.trace_of_power(e) == ctx.trace(ctx.exp(e)));
}

TEST_CASE("trace_intermediate") {
    const auto ctx = builtin(3, 6);
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order() - 1);
    for (int trial = 0; trial < 100; ++trial) {
        const auto x = FieldElem::from_index(pick(rng));
        CHECK(ctx.trace_intermediate(x, 6) == x);
        CHECK(ctx.trace_intermediate(x, 1) == ctx.constant(ctx.trace(x)));
        for (unsigned l : {2u, 3u}) {
            const auto y = ctx.trace_intermediate(x, l);
            CHECK(ctx.frobenius(y, l) == y);
            // Tr_1^l on the subfield is the sum of its l conjugates.
            FieldElem acc = ctx.zero(), c = y;
            for (unsigned j = 0; j < l; ++j) {
                acc = ctx.add(acc, c);
                c = ctx.frobenius(c, 1);
            }
            CHECK(acc == ctx.constant(ctx.trace(x)));
        }
    }
    CHECK(code_of([&] { ctx.trace_intermediate(ctx.one(), 4); }) == ErrorCode::NotADivisor);
}

TEST_CASE("quadratic character") {
    for (auto [p, m] : {std::pair{3u, 4u}, {5u, 3u}, {3u, 1u}}) {
        const auto ctx = builtin(p, m);
        CHECK(ctx.quad_character(ctx.zero()) == 0);
        CHECK(ctx.quad_character(ctx.pi()) == -1);
        std::uint64_t plus = 0;
        for (std::uint64_t i = 1; i < ctx.order(); ++i) {
            const auto x = FieldElem::from_index(i);
            const int eta = ctx.quad_character(x);
            plus += eta == 1;
            CHECK(ctx.quad_character(ctx.mul(x, x)) == 1);
            for (std::uint64_t j = 1; j < ctx.order(); j += 5) {
                const auto y = FieldElem::from_index(j);
                CHECK(ctx.quad_character(ctx.mul(x, y)) == eta * ctx.quad_character(y));
            }
        }
        CHECK(plus == ctx.group_order() / 2);
    }
}

TEST_CASE("large field without tables still does arithmetic") {
    const auto ctx = gf::build_field(7, 9, {2, 1, 1, 0, 0, 0, 0, 0, 0, 1});
    CHECK_FALSE(ctx.has_tables());
    const oracle::NaiveField nf{7, 9, ctx.modulus()};
    const auto a = FieldElem::from_index(123456), b = FieldElem::from_index(7654321);
    CHECK(ctx.mul(a, b).index() == nf.to_index(nf.mul(nf.from_index(123456), nf.from_index(7654321))));
    CHECK(ctx.trace(a) == nf.trace(nf.from_index(123456)));
    CHECK(ctx.pow(ctx.pi(), static_cast<std::int64_t>(ctx.group_order())) == ctx.one());
    CHECK(code_of([&] { ctx.log(a); }) == ErrorCode::TooLarge);
}

TEST_CASE("modulus config parsing and resolution") {
    std::istringstream in("# comment\n3 2 2 2 1\n\n5 1 3 1  # trailing\n");
    const auto entries = gf::parse_modulus_config(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].p == 3);
    CHECK(entries[0].coeffs == std::vector<std::uint32_t>{2, 2, 1});
    CHECK(entries[1].coeffs == std::vector<std::uint32_t>{3, 1});

    std::istringstream bad("3 2 2 x 1\n");
    CHECK(code_of([&] { gf::parse_modulus_config(bad); }) == ErrorCode::ParseError);
    std::istringstream short_line("3 2 2 2\n");
    CHECK(code_of([&] { gf::parse_modulus_config(short_line); }) == ErrorCode::ParseError);

    CHECK(gf::resolve_modulus(3, 4, std::nullopt) == *gf::builtin_modulus(3, 4));
    CHECK(code_of([] { gf::resolve_modulus(11, 2, std::nullopt); }) == ErrorCode::InvalidParameters);
    CHECK(gf::render_poly(std::vector<std::uint32_t>{2, 2, 1}) == "x^2 + 2*x + 2");
}
