#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "wdist/codes.hpp"
#include "wdist/cyclo.hpp"
#include "wdist/expsums.hpp"
#include "wdist/predict.hpp"

namespace wdist::serialize {

using nlohmann::json;

/// Integer array of canonical coefficients. Coefficients must fit in 64 bits.
json cyc_to_json(const cyclo::CycInt& value);
cyclo::CycInt cyc_from_json(std::uint32_t p, const json& j);

/// A weight distribution together with the parameters that produced it.
struct DistributionRecord {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint64_t t = 0;
    std::optional<unsigned> k;
    std::optional<unsigned> tau;
    std::optional<structure::CaseTag> case_tag;
    std::vector<std::uint32_t> modulus;
    codes::WeightDistribution dist;

    friend bool operator==(const DistributionRecord&, const DistributionRecord&) = default;
};

json to_json(const DistributionRecord& r);
DistributionRecord distribution_from_json(const json& j);

struct ReportRecord {
    bool pass = false;
    DistributionRecord predicted;
    DistributionRecord computed;
    std::vector<predict::DiffEntry> diff;

    friend bool operator==(const ReportRecord&, const ReportRecord&) = default;
};

ReportRecord make_report_record(const predict::VerifyReport& report, const std::vector<std::uint32_t>& modulus);
json to_json(const ReportRecord& r);
ReportRecord report_from_json(const json& j);

/// Value multiset of an exponential sum. Rational values are written as
/// integers, the rest as coefficient arrays.
struct SumRecord {
    std::uint32_t p = 0;
    unsigned m = 0;
    unsigned k = 0;
    std::string which;
    std::vector<std::uint32_t> modulus;
    expsums::SumDistribution sums;

    friend bool operator==(const SumRecord&, const SumRecord&) = default;
};

json to_json(const SumRecord& r);
SumRecord sum_from_json(const json& j);

struct CosetRecord {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint64_t i = 0;
    std::vector<std::uint64_t> coset;

    friend bool operator==(const CosetRecord&, const CosetRecord&) = default;
};

json to_json(const CosetRecord& r);
CosetRecord coset_from_json(const json& j);

/// Minimal polynomials of pi^(-t) and -pi^(-t), constant term first.
struct MinpolyRecord {
    std::uint32_t p = 0;
    unsigned m = 0;
    std::uint64_t t = 0;
    std::vector<std::uint32_t> modulus;
    std::vector<std::uint32_t> h1;
    std::vector<std::uint32_t> h2;

    friend bool operator==(const MinpolyRecord&, const MinpolyRecord&) = default;
};

json to_json(const MinpolyRecord& r);
MinpolyRecord minpoly_from_json(const json& j);

/// "weight,frequency" header and one row per weight.
std::string to_csv(const codes::WeightDistribution& dist);
codes::WeightDistribution distribution_from_csv(const std::string& text, std::uint64_t n, unsigned dimension);

/// "value,count" rows; non-rational values are written as "[c0 c1 ...]".
std::string to_csv(const expsums::SumDistribution& sums);

}  // namespace wdist::serialize
