#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wdist/arith.hpp"
#include "wdist/expsums.hpp"
#include "wdist/gf.hpp"
#include "wdist/structure.hpp"

namespace wdist::codes {

/// Work bound for the direct method, counted as p^(2m) * n symbol evaluations.
inline constexpr std::uint64_t kDirectWorkLimit = std::uint64_t{1} << 34;
/// Field-order bound for the per-pair Delta method (O(p^(3m))).
inline constexpr std::uint64_t kPairDeltaLimit = 729;

/// Position tables of C_t: u_i = pi^(t i) and v_i = (-pi^t)^i for i < p^m - 1,
/// built by repeated field multiplication.
class CodeTables {
public:
    /// Throws InadmissibleT.
    CodeTables(const gf::FieldCtx& ctx, std::uint64_t t);

    std::uint64_t t() const { return t_; }
    std::uint64_t length() const { return u_.size(); }
    const std::vector<gf::FieldElem>& u() const { return u_; }
    const std::vector<gf::FieldElem>& v() const { return v_; }

private:
    std::uint64_t t_;
    std::vector<gf::FieldElem> u_;
    std::vector<gf::FieldElem> v_;
};

struct Codeword {
    std::vector<std::uint32_t> symbols;
    gf::FieldElem a;
    gf::FieldElem b;
};

/// c(a,b)_i = Tr(a pi^(t i) + b (-pi^t)^i).
Codeword codeword(const gf::FieldCtx& ctx, const CodeTables& tables, gf::FieldElem a, gf::FieldElem b);
Codeword codeword(const gf::FieldCtx& ctx, std::uint64_t t, gf::FieldElem a, gf::FieldElem b);

/// Rotates left by one: (c_1, ..., c_{n-1}, c_0).
std::vector<std::uint32_t> shift_left(const std::vector<std::uint32_t>& symbols);

std::uint64_t hamming_weight(const std::vector<std::uint32_t>& symbols);

/// Hamming weight by scanning the codeword.
std::uint64_t weight_direct(const gf::FieldCtx& ctx, std::uint64_t t, gf::FieldElem a, gf::FieldElem b);

/// wt = p^m - p^(m-1) - T / (2p) for a T value of the code; throws
/// NonRationalSum when T is not rational or the division is not exact.
std::uint64_t weight_from_sum(const gf::FieldCtx& ctx, const cyclo::CycInt& sum);

/// Weight through the R decomposition. For t = ((p^k+1)/2) p^tau + l (p^m-1)/2,
/// Delta_t(a,b) = T(s(a), s(b)) with s(x) = x^(p^(m-tau)), so this holds for
/// every member of the family, not just t = (p^k+1)/2.
std::uint64_t weight_fast(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, gf::FieldElem a, gf::FieldElem b);

/// weight_fast with the R table precomputed once; use for many pairs.
class FastWeigher {
public:
    FastWeigher(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, unsigned workers = 0);
    std::uint64_t operator()(gf::FieldElem a, gf::FieldElem b) const;

private:
    Int128 r_value(gf::FieldElem alpha, std::uint64_t extra_log) const;

    const gf::FieldCtx* ctx_;
    structure::CodeSpec spec_;
    std::uint64_t twist_log_;  // log pi^((p^k+1)/2)
    unsigned undo_tau_;        // m - tau mod m
    Int128 r_zero_;
    std::vector<Int128> r_class_;
};

enum class Method { Direct, Fast, Auto };

std::string_view to_string(Method m);
std::optional<Method> method_from_string(std::string_view s);

struct WeightDistribution {
    std::map<std::uint64_t, std::uint64_t> entries;  // weight -> A_w
    std::uint64_t n = 0;
    unsigned dimension = 0;

    friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

std::uint64_t total_count(const WeightDistribution& dist);
/// sum_w w A_w.
UInt128 first_moment(const WeightDistribution& dist);
/// log_p of the total count; 0 when the total is not a power of p.
unsigned dimension_of(std::uint32_t p, std::uint64_t total);

/// The concrete method weight_distribution will run, after guards.
/// Throws InadmissibleT or TooLarge.
Method resolve_method(const gf::FieldCtx& ctx, std::uint64_t t, Method requested);

/// Frequencies over all (a, b) in F_{p^m}^2.
/// Direct: scan every codeword. Fast: T(a,b) convolution for even s, else
/// Delta_t per pair.
WeightDistribution weight_distribution(const gf::FieldCtx& ctx, std::uint64_t t, Method method, unsigned workers = 0);

/// "1+248X^50+15376X^100".
std::string weight_enumerator(const WeightDistribution& dist);

/// Least nonzero weight; DegenerateCode for the zero code.
std::uint64_t minimum_distance(const WeightDistribution& dist);

}  // namespace wdist::codes
