#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wdist/cyclo.hpp"
#include "wdist/gf.hpp"
#include "wdist/structure.hpp"

namespace wdist::expsums {

using cyclo::CycInt;

/// Multiset of exponential-sum values.
struct SumDistribution {
    std::map<CycInt, std::uint64_t, cyclo::CycIntOrder> entries;
    std::uint64_t total = 0;

    void add(const CycInt& value, std::uint64_t count = 1);
    void merge(const SumDistribution& other);
    /// Count of a rational value, 0 when absent.
    std::uint64_t count_of(const CycInt& value) const;

    friend bool operator==(const SumDistribution&, const SumDistribution&) = default;
};

/// counts[r] = #{x in F_{p^m} : Tr(alpha x^exponent) = r}. x = 0 always lands in
/// bucket 0.
std::vector<std::uint64_t> power_trace_histogram(const gf::FieldCtx& ctx, gf::FieldElem alpha,
                                                 std::uint64_t exponent);

/// Replaces a histogram c_r by the histogram of u*r over u in F_p^*, so that
/// from_counts of the result is sum_{u != 0} sum_r c_r zeta^(u r).
std::vector<std::uint64_t> expand_over_units(std::uint32_t p, std::span<const std::uint64_t> counts);

/// T_alpha = sum_x zeta^Tr(alpha x^(p^k+1)).
CycInt t_alpha(const gf::FieldCtx& ctx, unsigned k, gf::FieldElem alpha);

/// R_alpha = sum_{u != 0} sum_x zeta^(u Tr(alpha x^(p^k+1))).
CycInt r_alpha(const gf::FieldCtx& ctx, unsigned k, gf::FieldElem alpha);

/// Value multiset of T_alpha over every alpha (exhaustive).
SumDistribution t_alpha_distribution(const gf::FieldCtx& ctx, unsigned k, unsigned workers = 0);

struct TAlphaLemmaReport {
    structure::CaseTag case_tag;
    /// Gauss form eta(alpha) (-1)^(m-1) G^m was checked per alpha (v2(k) >= v2(m)).
    bool gauss_form;
    SumDistribution observed;
    SumDistribution expected;
};

/// Checks T_alpha against the closed forms for every alpha. Throws
/// LemmaViolation naming the offending alpha or value.
TAlphaLemmaReport check_t_alpha_lemma(const gf::FieldCtx& ctx, unsigned k, unsigned workers = 0);

/// Table of S(alpha) = sum_{u != 0} sum_x zeta^(u Tr(alpha x^E)) for every alpha.
/// S(alpha y^E) = S(alpha), so the table holds one value per class of
/// log(alpha) mod gcd(E, p^m - 1) plus a slot for alpha = 0.
class PowerSumTable {
public:
    PowerSumTable(const gf::FieldCtx& ctx, std::uint64_t exponent, unsigned workers = 0);

    const CycInt& operator()(gf::FieldElem alpha) const;
    /// Value for alpha = pi^log.
    const CycInt& by_log(std::uint64_t log) const { return by_class_[log % classes_]; }
    const CycInt& at_zero() const { return zero_; }
    std::uint64_t classes() const { return classes_; }

    /// Multiset of S(alpha) over all alpha.
    SumDistribution distribution() const;

private:
    const gf::FieldCtx* ctx_;
    std::uint64_t classes_;
    CycInt zero_;
    std::vector<CycInt> by_class_;
};

/// R_alpha table for x^(p^k+1).
PowerSumTable make_r_table(const gf::FieldCtx& ctx, unsigned k, unsigned workers = 0);

struct IdentityReport {
    std::uint64_t checked = 0;
};

/// R_alpha == (p-1) T_alpha and T_alpha == T_{-alpha} for every alpha.
/// Requires v2(m) > v2(k) (PreconditionViolation); throws IdentityViolation.
IdentityReport check_r_identity(const gf::FieldCtx& ctx, unsigned k, unsigned workers = 0);

/// Multiset of R_alpha over all alpha. Requires v2(m) > v2(k).
SumDistribution r_distribution(const gf::FieldCtx& ctx, unsigned k, unsigned workers = 0);

/// The closed-form R table for the even-s cases (three rows).
SumDistribution r_distribution_expected(std::uint32_t p, unsigned m, unsigned k);

/// T(a,b) = R_{a+b} + R_{(a-b) pi^((p^k+1)/2)} for the code C_{(p^k+1)/2}.
CycInt t_ab(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, gf::FieldElem a, gf::FieldElem b);

/// Multiset of T(a,b) over all p^(2m) pairs, built as the self-convolution of
/// r_distribution. Throws CaseNotCovered for odd s.
SumDistribution t_distribution(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, unsigned workers = 0);

/// The six-row closed-form table of T(a,b) for the even-s cases.
SumDistribution t_distribution_expected(std::uint32_t p, unsigned m, unsigned k);

/// Delta_t(a,b) = sum_{u != 0} sum_x (zeta^(u Tr((a+b) x^2t)) + zeta^(u Tr((a-b) pi^t x^2t))),
/// evaluated directly from trace histograms.
CycInt delta_general(const gf::FieldCtx& ctx, std::uint64_t t, gf::FieldElem a, gf::FieldElem b);

/// Multiset of delta_general over all pairs; O(p^(3m)).
SumDistribution delta_distribution(const gf::FieldCtx& ctx, std::uint64_t t, unsigned workers = 0);

/// True when {x^e1} and {x^e2} agree as multisets over F_{p^m}.
bool same_power_image(const gf::FieldCtx& ctx, std::uint64_t e1, std::uint64_t e2);

}  // namespace wdist::expsums
