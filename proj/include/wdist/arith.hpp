#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "wdist/error.hpp"

namespace wdist {

using Int128 = __int128;
using UInt128 = unsigned __int128;

inline Int128 checked_add(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "128-bit addition");
    return r;
}

inline Int128 checked_sub(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "128-bit subtraction");
    return r;
}

inline Int128 checked_mul(Int128 a, Int128 b) {
    Int128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "128-bit multiplication");
    return r;
}

/// base^exp, throwing Overflow instead of wrapping.
inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r)) throw Error(ErrorCode::Overflow, "integer power");
    }
    return r;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t mod) {
    return static_cast<std::uint64_t>(static_cast<UInt128>(a) * b % mod);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    if (mod == 1) return 0;
    std::uint64_t r = 1;
    base %= mod;
    while (exp != 0) {
        if (exp & 1U) r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1U;
    }
    return r;
}

inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

/// Distinct prime factors in increasing order (trial division).
inline std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

inline std::string to_string(Int128 v) {
    if (v == 0) return "0";
    const bool neg = v < 0;
    UInt128 u = neg ? static_cast<UInt128>(-(v + 1)) + 1 : static_cast<UInt128>(v);
    std::string s;
    while (u != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return {s.rbegin(), s.rend()};
}

}  // namespace wdist
