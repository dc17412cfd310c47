#include <doctest.h>

#include <random>
#include <set>

#include "oracle.hpp"
#include "wdist/codes.hpp"
#include "wdist/error.hpp"
#include "wdist/gf.hpp"

using namespace wdist;
using namespace wdist::codes;
using gf::FieldElem;

namespace {

gf::FieldCtx builtin(std::uint32_t p, unsigned m) { return gf::build_field(p, m, *gf::builtin_modulus(p, m)); }

WeightDistribution make(std::uint64_t n, unsigned dim, std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> rows) {
    WeightDistribution d{{}, n, dim};
    for (auto [w, a] : rows) d.entries[w] = a;
    return d;
}

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no exception");
    return ErrorCode::ParseError;
}

const WeightDistribution kExample1 =
    make(728, 12, {{0, 1}, {216, 364}, {252, 1092}, {432, 33124}, {468, 198744}, {504, 298116}});
const WeightDistribution kExample2 = make(80, 8, {{0, 1}, {24, 120}, {36, 40}, {48, 3600}, {60, 2400}, {72, 400}});
const WeightDistribution kExample3 = make(124, 6, {{0, 1}, {50, 248}, {100, 15376}});
const WeightDistribution kExample4 =
    make(728, 12, {{0, 1}, {234, 728}, {252, 728}, {468, 132496}, {486, 264992}, {504, 132496}});

}  // namespace

TEST_CASE("codewords follow the trace formula") {
    const auto ctx = builtin(3, 4);
    const oracle::NaiveField nf{3, 4, ctx.modulus()};
    const std::uint64_t t = 2;
    const auto x = nf.x();
    const auto pit = nf.pow(x, t);
    const auto neg_pit = nf.mul(nf.from_index(2), pit);  // -1 = 2 in F_3
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order() - 1);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = pick(rng), b = pick(rng);
        const auto cw = codeword(ctx, t, FieldElem::from_index(a), FieldElem::from_index(b));
        REQUIRE(cw.symbols.size() == 80);
        for (std::uint64_t i = 0; i < 80; ++i) {
            const auto term = nf.add(nf.mul(nf.from_index(a), nf.pow(pit, i)), nf.mul(nf.from_index(b), nf.pow(neg_pit, i)));
            CHECK(cw.symbols[i] == nf.trace(term));
        }
    }
    const auto zero = codeword(ctx, t, ctx.zero(), ctx.zero());
    CHECK(hamming_weight(zero.symbols) == 0);
    CHECK(code_of([&] { codeword(builtin(3, 2), 2, ctx.one(), ctx.one()); }) == ErrorCode::InadmissibleT);
}

TEST_CASE("cyclic closure: shift of c(a,b) is c(a pi^t, -b pi^t) (exhaustive at (3,4))") {
    const auto ctx = builtin(3, 4);
    const CodeTables tables(ctx, 2);
    const auto pit = ctx.exp(2);
    for (std::uint64_t a = 0; a < ctx.order(); ++a) {
        for (std::uint64_t b = 0; b < ctx.order(); ++b) {
            const auto A = FieldElem::from_index(a), B = FieldElem::from_index(b);
            const auto c = codeword(ctx, tables, A, B);
            const auto shifted = codeword(ctx, tables, ctx.mul(A, pit), ctx.neg(ctx.mul(B, pit)));
            CHECK(shift_left(c.symbols) == shifted.symbols);
        }
    }
}

TEST_CASE("all p^(2m) codewords are distinct at (3,4)") {
    const auto ctx = builtin(3, 4);
    const CodeTables tables(ctx, 2);
    std::set<std::vector<std::uint32_t>> words;
    for (std::uint64_t a = 0; a < ctx.order(); ++a)
        for (std::uint64_t b = 0; b < ctx.order(); ++b)
            words.insert(codeword(ctx, tables, FieldElem::from_index(a), FieldElem::from_index(b)).symbols);
    CHECK(words.size() == 6561);
}

TEST_CASE("weight_direct equals weight_fast on all pairs at (3,4,1)") {
    const auto ctx = builtin(3, 4);
    for (std::uint64_t t : {2u, 6u, 42u, 18u}) {
        const auto spec = structure::make_code_spec(3, 4, t);
        const FastWeigher fast(ctx, spec);
        std::uint64_t mismatches = 0;
        for (std::uint64_t a = 0; a < ctx.order(); ++a) {
            for (std::uint64_t b = 0; b < ctx.order(); ++b) {
                const auto A = FieldElem::from_index(a), B = FieldElem::from_index(b);
                const auto w = weight_direct(ctx, t, A, B);
                mismatches += w != fast(A, B);
                if (a % 9 == 0 && b % 9 == 0) CHECK(weight_fast(ctx, spec, A, B) == w);
            }
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("weight_direct equals weight_fast on random pairs at (3,6)") {
    const auto ctx = builtin(3, 6);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::uint64_t> pick(0, ctx.order() - 1);
    for (std::uint64_t t : {2u, 6u, 366u, 5u, 15u}) {
        const auto spec = structure::make_code_spec(3, 6, t);
        const FastWeigher fast(ctx, spec);
        const CodeTables tables(ctx, t);
        const int trials = t == 2 ? 10000 : 1000;
        std::uint64_t mismatches = 0;
        for (int i = 0; i < trials; ++i) {
            const auto A = FieldElem::from_index(pick(rng)), B = FieldElem::from_index(pick(rng));
            mismatches += hamming_weight(codeword(ctx, tables, A, B).symbols) != fast(A, B);
        }
        CHECK(mismatches == 0);
    }
}

TEST_CASE("weight from sums") {
    const auto ctx = builtin(3, 6);
    CHECK(weight_from_sum(ctx, cyclo::CycInt::integer(3, 2 * 2 * 729)) == 0);
    CHECK(weight_from_sum(ctx, cyclo::CycInt::integer(3, -108)) == 504);
    CHECK(weight_from_sum(ctx, cyclo::CycInt::integer(3, 1620)) == 216);
    CHECK(code_of([&] { weight_from_sum(ctx, cyclo::CycInt::integer(3, 1)); }) == ErrorCode::NonRationalSum);
    CHECK(code_of([&] { weight_from_sum(ctx, cyclo::gauss_sum(3)); }) == ErrorCode::NonRationalSum);
}

TEST_CASE("weight distributions of the worked examples") {
    const auto f36 = builtin(3, 6), f34 = builtin(3, 4), f53 = builtin(5, 3);
    CHECK(weight_distribution(f36, 2, Method::Fast, 1) == kExample1);
    CHECK(weight_distribution(f34, 2, Method::Direct) == kExample2);
    CHECK(weight_distribution(f34, 2, Method::Fast) == kExample2);
    CHECK(weight_distribution(f53, 3, Method::Direct) == kExample3);
    CHECK(weight_distribution(f53, 3, Method::Fast) == kExample3);
    CHECK(weight_distribution(f36, 5, Method::Auto) == kExample4);

    CHECK(weight_enumerator(kExample3) == "1+248X^50+15376X^100");
    CHECK(weight_enumerator(kExample4) == "1+728X^234+728X^252+132496X^468+264992X^486+132496X^504");
    CHECK(weight_enumerator(make(4, 0, {{0, 1}})) == "1");
    CHECK(minimum_distance(kExample1) == 216);
    CHECK(minimum_distance(kExample2) == 24);
    CHECK(minimum_distance(kExample4) == 234);
    CHECK(code_of([] { minimum_distance(make(4, 0, {{0, 1}})); }) == ErrorCode::DegenerateCode);
}

TEST_CASE("distribution invariants") {
    for (auto [p, m, t] : {std::tuple{3u, 4u, 2u}, {5u, 3u, 3u}, {3u, 4u, 1u}, {3u, 3u, 1u}, {7u, 2u, 1u}}) {
        const auto ctx = builtin(p, m);
        const auto d = weight_distribution(ctx, t, Method::Direct);
        const std::uint64_t q = ctx.order(), n = ctx.group_order();
        CHECK(total_count(d) == q * q);
        CHECK(d.entries.at(0) == 1);
        CHECK(d.entries.rbegin()->first <= n);
        CHECK(first_moment(d) == static_cast<UInt128>(n) * (p - 1) * q * q / p);
        CHECK(d.dimension == 2 * m);
        CHECK(weight_distribution(ctx, t, Method::Fast) == d);
    }
}

TEST_CASE("exponent equivalence over the orbit of 2 at (3,4)") {
    const auto ctx = builtin(3, 4);
    const auto ref = weight_distribution(ctx, 2, Method::Direct);
    const auto orbit = structure::equivalent_exponents(3, 4, 2);
    CHECK(orbit.size() == 8);
    for (auto e : orbit) {
        CHECK(weight_distribution(ctx, e, Method::Direct) == ref);
        CHECK(weight_distribution(ctx, e, Method::Fast) == ref);
    }
}

TEST_CASE("worker count does not change results") {
    const auto ctx = builtin(3, 4);
    const auto one = weight_distribution(ctx, 2, Method::Direct, 1);
    for (unsigned w : {2u, 3u, 8u}) CHECK(weight_distribution(ctx, 2, Method::Direct, w) == one);
    const auto f36 = builtin(3, 6);
    CHECK(weight_distribution(f36, 2, Method::Fast, 1) == weight_distribution(f36, 2, Method::Fast, 4));
}

TEST_CASE("unmatched exponents can still be enumerated") {
    const auto ctx = builtin(3, 4);
    const auto d = weight_distribution(ctx, 7, Method::Direct);
    CHECK(total_count(d) == 6561);
    CHECK(weight_distribution(ctx, 7, Method::Fast) == d);
}

TEST_CASE("method resolution and guards") {
    const auto f36 = builtin(3, 6);
    CHECK(resolve_method(f36, 2, Method::Auto) == Method::Fast);
    CHECK(resolve_method(f36, 5, Method::Auto) == Method::Direct);
    CHECK(resolve_method(f36, 5, Method::Fast) == Method::Fast);
    const auto f38 = builtin(3, 8);
    CHECK(code_of([&] { resolve_method(f38, 1, Method::Direct); }) == ErrorCode::TooLarge);
    CHECK(code_of([&] { resolve_method(f38, 1, Method::Auto); }) == ErrorCode::TooLarge);
    CHECK(resolve_method(f38, 2, Method::Auto) == Method::Fast);
    CHECK(code_of([] { weight_distribution(builtin(3, 2), 2, Method::Direct); }) == ErrorCode::InadmissibleT);
    CHECK(method_from_string("fast") == Method::Fast);
    CHECK_FALSE(method_from_string("slow").has_value());
    CHECK(dimension_of(3, 6561) == 8);
    CHECK(dimension_of(3, 6560) == 0);
}
