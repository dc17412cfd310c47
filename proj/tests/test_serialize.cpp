#include <doctest.h>

#include "wdist/error.hpp"
#include "wdist/gf.hpp"
#include "wdist/serialize.hpp"

using namespace wdist;
using namespace wdist::serialize;

namespace {

gf::FieldCtx builtin(std::uint32_t p, unsigned m) { return gf::build_field(p, m, *gf::builtin_modulus(p, m)); }

}  // namespace

TEST_CASE("CycInt JSON") {
    const auto g = cyclo::gauss_sum(5);
    CHECK(cyc_to_json(g).dump() == "[-1,0,-2,-2,0]");  // canonical: c_4 = 0
    CHECK(cyc_from_json(5, cyc_to_json(g)) == g);
    CHECK(cyc_from_json(3, json(-54)) == cyclo::CycInt::integer(3, -54));
    CHECK_THROWS_AS(cyc_from_json(5, json::parse("[1,2]")), Error);
    CHECK_THROWS_AS(cyc_to_json(cyclo::CycInt::integer(3, static_cast<Int128>(1) << 70)), Error);
}

TEST_CASE("distribution records round-trip") {
    const auto ctx = builtin(3, 4);
    const auto spec = structure::make_code_spec(3, 4, 2);
    DistributionRecord r{3, 4, 2, spec.k, spec.tau, spec.case_tag, ctx.modulus(),
                         codes::weight_distribution(ctx, 2, codes::Method::Direct)};
    const auto j = to_json(r);
    CHECK(j["case"] == "EVEN_LT");
    CHECK(j["distribution"][1] == json::array({24, 120}));
    CHECK(distribution_from_json(json::parse(j.dump())) == r);

    DistributionRecord unmatched{3, 4, 7, std::nullopt, std::nullopt, std::nullopt, ctx.modulus(), r.dist};
    CHECK(to_json(unmatched)["k"].is_null());
    CHECK(distribution_from_json(to_json(unmatched)) == unmatched);

    CHECK_THROWS_AS(distribution_from_json(json::parse(R"({"p":3})")), Error);
}

TEST_CASE("report records round-trip") {
    const auto ctx = builtin(5, 3);
    const auto report = predict::verify(ctx, 3);
    const auto rec = make_report_record(report, ctx.modulus());
    const auto j = to_json(rec);
    CHECK(j["status"] == "PASS");
    CHECK(j["diff"].empty());
    CHECK(report_from_json(json::parse(j.dump())) == rec);

    auto failing = rec;
    failing.pass = false;
    failing.diff.push_back({50, 248, 247});
    CHECK(report_from_json(to_json(failing)) == failing);
}

TEST_CASE("sum, coset and minpoly records round-trip") {
    const auto ctx = builtin(5, 3);
    SumRecord s{5, 3, 1, "t_alpha", ctx.modulus(), expsums::t_alpha_distribution(ctx, 1)};
    CHECK(sum_from_json(json::parse(to_json(s).dump())) == s);

    const auto f36 = builtin(3, 6);
    SumRecord r{3, 6, 1, "r_alpha", f36.modulus(), expsums::make_r_table(f36, 1).distribution()};
    CHECK(to_json(r)["entries"][0] == json::array({-54, 546}));
    CHECK(sum_from_json(to_json(r)) == r);

    CosetRecord c{3, 4, 1, {1, 3, 9, 27}};
    CHECK(coset_from_json(to_json(c)) == c);

    MinpolyRecord mp{3, 6, 2, f36.modulus(), {1, 1, 0, 2, 0, 0, 1}, {1, 2, 0, 1, 0, 0, 1}};
    CHECK(minpoly_from_json(to_json(mp)) == mp);
}

TEST_CASE("CSV") {
    codes::WeightDistribution d{{{0, 1}, {50, 248}, {100, 15376}}, 124, 6};
    const auto text = to_csv(d);
    CHECK(text == "weight,frequency\n0,1\n50,248\n100,15376\n");
    CHECK(distribution_from_csv(text, 124, 6) == d);
    CHECK_THROWS_AS(distribution_from_csv("w,f\n", 1, 1), Error);
    CHECK_THROWS_AS(distribution_from_csv("weight,frequency\n1;2\n", 1, 1), Error);

    expsums::SumDistribution s;
    s.add(cyclo::CycInt::integer(3, -54), 546);
    s.add(cyclo::gauss_sum(3), 2);
    CHECK(to_csv(s) == "value,count\n-54,546\n[1 2 0],2\n");
}
