#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wdist/codes.hpp"
#include "wdist/gf.hpp"
#include "wdist/structure.hpp"

namespace wdist::predict {

struct CaseInfo {
    structure::CaseTag case_tag;
    unsigned d;  // gcd(m, k)
    unsigned s;  // m / d
    std::optional<std::uint64_t> p_half;    // p^(m/2), m even
    std::optional<std::uint64_t> p_half_d;  // p^(m/2 + d), s even
};

CaseInfo classify(std::uint32_t p, unsigned m, unsigned k);

/// One row of a closed-form table before equal weights are merged.
struct TableRow {
    UInt128 weight;
    UInt128 frequency;
};

/// The raw table for (p, m, k), weight 0 row first. No admissibility check.
std::vector<TableRow> table_rows(std::uint32_t p, unsigned m, unsigned k);

/// Closed-form weight distribution of the family member with this k.
/// Throws InvalidParameters for bad (p, m, k) or when (p^k+1)/2 is
/// inadmissible, TooLarge when frequencies would not fit 64 bits.
codes::WeightDistribution predicted_distribution(std::uint32_t p, unsigned m, unsigned k);

struct DiffEntry {
    std::uint64_t weight;
    std::uint64_t predicted;
    std::uint64_t computed;
    friend bool operator==(const DiffEntry&, const DiffEntry&) = default;
};

struct VerifyReport {
    bool pass;
    structure::CodeSpec spec;
    codes::Method method;
    codes::WeightDistribution predicted;
    codes::WeightDistribution computed;
    std::vector<DiffEntry> diff;  // only the weights that disagree
};

std::vector<DiffEntry> diff_distributions(const codes::WeightDistribution& predicted,
                                          const codes::WeightDistribution& computed);

/// Enumerates C_t and compares with the table for its matched k.
/// Throws InadmissibleT, NoMatch, TooLarge.
VerifyReport verify(const gf::FieldCtx& ctx, std::uint64_t t, codes::Method method = codes::Method::Auto,
                    unsigned workers = 0);

}  // namespace wdist::predict
