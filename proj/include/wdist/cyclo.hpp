#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wdist/arith.hpp"

namespace wdist::cyclo {

using Coeff = Int128;

/// Exact element of Z[zeta_p], stored as sum c_j zeta^j over j < p in the
/// canonical form c_{p-1} = 0 (reduced with 1 + zeta + ... + zeta^{p-1} = 0).
/// Canonical vectors are unique, so == is coefficientwise.
class CycInt {
public:
    explicit CycInt(std::uint32_t p);
    /// Any length-p vector; the result is canonicalized.
    CycInt(std::uint32_t p, std::vector<Coeff> coeffs);

    static CycInt integer(std::uint32_t p, Coeff value);

    std::uint32_t p() const { return p_; }
    std::span<const Coeff> coeffs() const { return c_; }

    /// The value when it is a rational integer, empty otherwise.
    std::optional<Coeff> as_rational_integer() const;
    bool is_rational() const { return as_rational_integer().has_value(); }

    CycInt& operator+=(const CycInt& o);
    CycInt& operator-=(const CycInt& o);
    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }
    friend CycInt operator*(const CycInt& a, const CycInt& b);
    CycInt operator-() const { return scaled(-1); }
    CycInt scaled(Coeff n) const;

    /// Image under the automorphism zeta -> zeta^g, gcd(g, p) = 1.
    CycInt galois(std::uint32_t g) const;

    friend bool operator==(const CycInt&, const CycInt&) = default;

    /// "c0 + c1*z + ..." with zero terms dropped.
    std::string to_string() const;

private:
    void canonicalize();

    std::uint32_t p_;
    std::vector<Coeff> c_;
};

/// Rational integers first (by value), then other elements by coefficients.
struct CycIntOrder {
    bool operator()(const CycInt& a, const CycInt& b) const;
};

inline CycInt cyc_add(const CycInt& a, const CycInt& b) { return a + b; }
inline CycInt cyc_mul(const CycInt& a, const CycInt& b) { return a * b; }
inline CycInt cyc_scale(const CycInt& a, Coeff n) { return a.scaled(n); }
CycInt cyc_pow(CycInt a, unsigned e);

/// zeta^j with j reduced mod p.
CycInt zeta_pow(std::uint32_t p, std::int64_t j);

/// sum_j counts[j] zeta^j; counts.size() must equal p.
CycInt from_counts(std::uint32_t p, std::span<const std::uint64_t> counts);

/// G = sum_{u in F_p} zeta^(u^2); G^2 = (-1)^((p-1)/2) p.
CycInt gauss_sum(std::uint32_t p);

}  // namespace wdist::cyclo
