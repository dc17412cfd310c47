#include "wdist/structure.hpp"

#include <algorithm>
#include <numeric>

#include "wdist/arith.hpp"
#include "wdist/error.hpp"

namespace wdist::structure {

std::string_view to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::EvenEq: return "EVEN_EQ";
        case CaseTag::EvenLt: return "EVEN_LT";
        case CaseTag::OddM: return "ODD_M";
        case CaseTag::OddS: return "ODD_S";
    }
    return "?";
}

std::optional<CaseTag> case_tag_from_string(std::string_view s) {
    for (auto tag : {CaseTag::EvenEq, CaseTag::EvenLt, CaseTag::OddM, CaseTag::OddS}) {
        if (to_string(tag) == s) return tag;
    }
    return std::nullopt;
}

unsigned v2(std::int64_t j) {
    if (j <= 0) throw Error(ErrorCode::NonPositive, "v2 needs a positive integer, got " + std::to_string(j));
    return static_cast<unsigned>(__builtin_ctzll(static_cast<unsigned long long>(j)));
}

CaseTag case_tag(unsigned m, unsigned k) {
    const unsigned vm = v2(m), vk = v2(k);
    if (vm > vk) return vk + 1 == vm ? CaseTag::EvenEq : CaseTag::EvenLt;
    return vm == 0 ? CaseTag::OddM : CaseTag::OddS;
}

std::uint64_t group_order(std::uint32_t p, unsigned m) {
    if (m == 0) throw Error(ErrorCode::InvalidParameters, "m must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (__builtin_mul_overflow(q, std::uint64_t{p}, &q) || q > gf::kMaxFieldOrder) {
            throw Error(ErrorCode::TooLarge, "p^m exceeds 2^40");
        }
    }
    return q - 1;
}

std::uint64_t gcd_pk_plus_1(std::uint32_t p, unsigned k, unsigned m) {
    if (k == 0 || m == 0) throw Error(ErrorCode::NonPositive, "k and m must be positive");
    if (v2(m) > v2(k)) return ipow(p, std::gcd(k, m)) + 1;
    return 2;
}

std::vector<std::uint64_t> cyclotomic_coset(std::uint32_t p, unsigned m, std::uint64_t i) {
    const std::uint64_t n = group_order(p, m);
    if (i >= n) throw Error(ErrorCode::InvalidParameters, "coset representative must be < p^m - 1");
    std::vector<std::uint64_t> out;
    std::uint64_t x = i;
    for (unsigned j = 0; j < m; ++j) {
        out.push_back(x);
        x = mulmod(x, p, n);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::uint32_t> minimal_polynomial(const gf::FieldCtx& ctx, gf::FieldElem beta) {
    if (beta.is_zero()) throw Error(ErrorCode::InvalidParameters, "minimal polynomial of 0 is not used");
    // Product of (X - c) over the distinct conjugates, coefficients in F_{p^m}.
    std::vector<gf::FieldElem> poly{ctx.one()};
    gf::FieldElem conj = beta;
    do {
        std::vector<gf::FieldElem> next(poly.size() + 1, ctx.zero());
        const gf::FieldElem minus_c = ctx.neg(conj);
        for (std::size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] = ctx.add(next[i + 1], poly[i]);
            next[i] = ctx.add(next[i], ctx.mul(poly[i], minus_c));
        }
        poly = std::move(next);
        conj = ctx.frobenius(conj, 1);
    } while (conj != beta);

    std::vector<std::uint32_t> out;
    out.reserve(poly.size());
    for (auto c : poly) {
        if (c.index() >= ctx.p()) throw Error(ErrorCode::InvalidParameters, "minimal polynomial left F_p");
        out.push_back(static_cast<std::uint32_t>(c.index()));
    }
    return out;
}

Admissibility check_admissible(std::uint32_t p, unsigned m, std::uint64_t t) {
    const std::uint64_t n = group_order(p, m);
    t %= n;
    const std::uint64_t target = (t + n / 2) % n;
    std::uint64_t x = t;
    for (unsigned i = 0; i < m; ++i) {
        if (x == target) return {false, i};
        x = mulmod(x, p, n);
    }
    return {true, std::nullopt};
}

std::uint64_t half_pk_plus_1(std::uint32_t p, unsigned m, unsigned k) {
    const std::uint64_t n = group_order(p, m);
    // Reduce p^k mod 2n so that halving stays exact modulo n.
    return ((powmod(p, k, 2 * n) + 1) / 2) % n;
}

namespace {

template <class Fn>
void for_each_match(std::uint32_t p, unsigned m, std::uint64_t t, Fn&& fn) {
    const std::uint64_t half = group_order(p, m) / 2;
    const std::uint64_t target = t % half;
    for (unsigned k = 1; k <= 2 * m; ++k) {
        std::uint64_t x = half_pk_plus_1(p, m, k) % half;
        for (unsigned tau = 0; tau < m; ++tau) {
            if (x == target && !fn(ExponentMatch{k, tau})) return;
            x = mulmod(x, p, half);
        }
    }
}

}  // namespace

std::optional<ExponentMatch> match_exponent(std::uint32_t p, unsigned m, std::uint64_t t) {
    std::optional<ExponentMatch> found;
    for_each_match(p, m, t, [&](ExponentMatch em) {
        found = em;
        return false;
    });
    return found;
}

std::vector<unsigned> all_matching_k(std::uint32_t p, unsigned m, std::uint64_t t) {
    std::vector<unsigned> ks;
    for_each_match(p, m, t, [&](ExponentMatch em) {
        if (ks.empty() || ks.back() != em.k) ks.push_back(em.k);
        return true;
    });
    return ks;
}

std::set<std::uint64_t> equivalent_exponents(std::uint32_t p, unsigned m, std::uint64_t t) {
    const std::uint64_t n = group_order(p, m);
    const std::uint64_t half = n / 2;
    std::set<std::uint64_t> out;
    std::uint64_t x = t % half;
    for (unsigned j = 0; j < m; ++j) {
        out.insert(x);
        out.insert(x + half);
        x = mulmod(x, p, half);
    }
    return out;
}

CodeSpec make_code_spec(std::uint32_t p, unsigned m, std::uint64_t t) {
    const std::uint64_t n = group_order(p, m);
    t %= n;
    const auto adm = check_admissible(p, m, t);
    if (!adm.admissible) {
        throw Error(ErrorCode::InadmissibleT, "t=" + std::to_string(t) + " fails at i=" + std::to_string(*adm.witness) +
                                                  ": (pi^t)^(p^i) = -pi^t");
    }
    const auto match = match_exponent(p, m, t);
    if (!match) {
        throw Error(ErrorCode::NoMatch, "t=" + std::to_string(t) + " is not congruent to ((p^k+1)/2) p^tau mod (p^m-1)/2");
    }
    const unsigned d = std::gcd(m, match->k);
    return CodeSpec{p, m, t, match->k, match->tau, d, m / d, case_tag(m, match->k)};
}

}  // namespace wdist::structure
