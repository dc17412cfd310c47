#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string_view>
#include <vector>

#include "wdist/gf.hpp"

namespace wdist::structure {

/// The four-way split on (v2(m), v2(k)).
enum class CaseTag {
    EvenEq,  // v2(k) + 1 == v2(m)
    EvenLt,  // v2(k) + 1 <  v2(m)
    OddM,    // v2(m) == 0
    OddS,    // 1 <= v2(m) <= v2(k)
};

std::string_view to_string(CaseTag tag);
std::optional<CaseTag> case_tag_from_string(std::string_view s);
/// True for the two cases where s = m / gcd(m, k) is even.
inline bool is_even_s(CaseTag tag) { return tag == CaseTag::EvenEq || tag == CaseTag::EvenLt; }

unsigned v2(std::int64_t j);

CaseTag case_tag(unsigned m, unsigned k);

/// p^m - 1, guarded by the field size limit.
std::uint64_t group_order(std::uint32_t p, unsigned m);

/// gcd(p^k + 1, p^m - 1) from the closed form: p^gcd(k,m) + 1 when v2(m) > v2(k), else 2.
std::uint64_t gcd_pk_plus_1(std::uint32_t p, unsigned k, unsigned m);

/// {i p^j mod p^m - 1 : j < m}, sorted.
std::vector<std::uint64_t> cyclotomic_coset(std::uint32_t p, unsigned m, std::uint64_t i);

/// Monic minimal polynomial of beta over F_p, constant term first.
std::vector<std::uint32_t> minimal_polynomial(const gf::FieldCtx& ctx, gf::FieldElem beta);

struct Admissibility {
    bool admissible;
    std::optional<unsigned> witness;  // the i with t p^i == t + (p^m-1)/2
};

/// (pi^t)^(p^i) != -pi^t for all i < m, checked on exponents.
Admissibility check_admissible(std::uint32_t p, unsigned m, std::uint64_t t);

struct ExponentMatch {
    unsigned k;
    unsigned tau;
    friend bool operator==(const ExponentMatch&, const ExponentMatch&) = default;
};

/// Smallest (k, tau), k in [1, 2m], tau in [0, m), with t = ((p^k+1)/2) p^tau mod (p^m-1)/2.
std::optional<ExponentMatch> match_exponent(std::uint32_t p, unsigned m, std::uint64_t t);

/// Every k in [1, 2m] that matches t for some tau (used to check that the case
/// split does not depend on which k is picked).
std::vector<unsigned> all_matching_k(std::uint32_t p, unsigned m, std::uint64_t t);

/// Orbit of t under e -> e p mod (p^m-1)/2 and e -> e + (p^m-1)/2, as residues mod p^m - 1.
std::set<std::uint64_t> equivalent_exponents(std::uint32_t p, unsigned m, std::uint64_t t);

/// (p^k + 1) / 2 reduced mod p^m - 1.
std::uint64_t half_pk_plus_1(std::uint32_t p, unsigned m, unsigned k);

/// Validated parameters of one code C_t of the family. Exponents are taken
/// modulo p^m - 1.
struct CodeSpec {
    std::uint32_t p;
    unsigned m;
    std::uint64_t t;
    unsigned k;
    unsigned tau;
    unsigned d;
    unsigned s;
    CaseTag case_tag;
};

/// Throws InadmissibleT or NoMatch.
CodeSpec make_code_spec(std::uint32_t p, unsigned m, std::uint64_t t);

}  // namespace wdist::structure
