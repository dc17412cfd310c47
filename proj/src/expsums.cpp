#include "wdist/expsums.hpp"

#include <limits>
#include <numeric>

#include "parallel.hpp"
#include "wdist/arith.hpp"
#include "wdist/error.hpp"

namespace wdist::expsums {

using structure::CaseTag;

namespace {

std::uint64_t to_count(UInt128 v) {
    if (v > std::numeric_limits<std::uint64_t>::max()) throw Error(ErrorCode::Overflow, "frequency exceeds 64 bits");
    return static_cast<std::uint64_t>(v);
}

struct EvenParams {
    CaseTag tag;
    std::uint32_t p;
    unsigned d;
    Int128 q;    // p^m
    Int128 h;    // p^(m/2)
    Int128 hd;   // p^(m/2 + d)
    UInt128 n1;  // (p^m - 1) / (p^d + 1)
    UInt128 n2;  // p^d n1
};

EvenParams even_params(std::uint32_t p, unsigned m, unsigned k) {
    const CaseTag tag = structure::case_tag(m, k);
    if (!structure::is_even_s(tag)) {
        throw Error(ErrorCode::PreconditionViolation, "needs v2(m) > v2(k); got m=" + std::to_string(m) + ", k=" + std::to_string(k));
    }
    const unsigned d = std::gcd(m, k);
    const std::uint64_t n = structure::group_order(p, m);
    const std::uint64_t pd = ipow(p, d);
    EvenParams e{tag, p, d, static_cast<Int128>(n) + 1, ipow(p, m / 2), ipow(p, m / 2 + d), n / (pd + 1), 0};
    e.n2 = e.n1 * pd;
    return e;
}

void guard_tables(const gf::FieldCtx& ctx) {
    if (!ctx.has_tables()) throw Error(ErrorCode::TooLarge, "exponential sums need a tabulated field");
}

}  // namespace

void SumDistribution::add(const CycInt& value, std::uint64_t count) {
    if (count == 0) return;
    entries[value] += count;
    total += count;
}

void SumDistribution::merge(const SumDistribution& other) {
    for (const auto& [v, c] : other.entries) add(v, c);
}

std::uint64_t SumDistribution::count_of(const CycInt& value) const {
    auto it = entries.find(value);
    return it == entries.end() ? 0 : it->second;
}

std::vector<std::uint64_t> power_trace_histogram(const gf::FieldCtx& ctx, gf::FieldElem alpha, std::uint64_t exponent) {
    const std::uint64_t n = ctx.group_order();
    std::vector<std::uint64_t> counts(ctx.p(), 0);
    counts[0] = 1;
    if (alpha.is_zero()) {
        counts[0] += n;
        return counts;
    }
    const std::uint64_t step = exponent % n;
    std::uint64_t e = ctx.log(alpha);
    for (std::uint64_t j = 0; j < n; ++j) {
        ++counts[ctx.trace_of_power(e)];
        e += step;
        if (e >= n) e -= n;
    }
    return counts;
}

std::vector<std::uint64_t> expand_over_units(std::uint32_t p, std::span<const std::uint64_t> counts) {
    std::vector<std::uint64_t> out(p, 0);
    for (std::uint64_t r = 0; r < p; ++r) {
        if (counts[r] == 0) continue;
        for (std::uint64_t u = 1; u < p; ++u) out[u * r % p] += counts[r];
    }
    return out;
}

namespace {

std::uint64_t pk_plus_1(const gf::FieldCtx& ctx, unsigned k) {
    if (k == 0) throw Error(ErrorCode::InvalidParameters, "k must be >= 1");
    const std::uint64_t n = ctx.group_order();
    return (powmod(ctx.p(), k, n) + 1) % n;
}

CycInt unit_sum(const gf::FieldCtx& ctx, gf::FieldElem alpha, std::uint64_t exponent) {
    const auto h = power_trace_histogram(ctx, alpha, exponent);
    return cyclo::from_counts(ctx.p(), expand_over_units(ctx.p(), h));
}

}  // namespace

CycInt t_alpha(const gf::FieldCtx& ctx, unsigned k, gf::FieldElem alpha) {
    guard_tables(ctx);
    return cyclo::from_counts(ctx.p(), power_trace_histogram(ctx, alpha, pk_plus_1(ctx, k)));
}

CycInt r_alpha(const gf::FieldCtx& ctx, unsigned k, gf::FieldElem alpha) {
    guard_tables(ctx);
    return unit_sum(ctx, alpha, pk_plus_1(ctx, k));
}

SumDistribution t_alpha_distribution(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    guard_tables(ctx);
    const std::uint64_t e = pk_plus_1(ctx, k);
    auto parts = detail::map_chunks(ctx.order(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        SumDistribution part;
        for (std::uint64_t i = lo; i < hi; ++i) {
            part.add(cyclo::from_counts(ctx.p(), power_trace_histogram(ctx, gf::FieldElem::from_index(i), e)));
        }
        return part;
    });
    SumDistribution out;
    for (auto& part : parts) out.merge(part);
    return out;
}

TAlphaLemmaReport check_t_alpha_lemma(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    guard_tables(ctx);
    const std::uint32_t p = ctx.p();
    const unsigned m = ctx.m();
    const CaseTag tag = structure::case_tag(m, k);
    const std::uint64_t q = ctx.order();
    const std::uint64_t e = pk_plus_1(ctx, k);

    TAlphaLemmaReport report{tag, !structure::is_even_s(tag), {}, {}};
    report.expected.add(CycInt::integer(p, static_cast<Int128>(q)));
    if (report.gauss_form) {
        CycInt plus = cyclo::cyc_pow(cyclo::gauss_sum(p), m);
        if (m % 2 == 0) plus = -plus;  // (-1)^(m-1)
        report.expected.add(plus, (q - 1) / 2);
        report.expected.add(-plus, (q - 1) / 2);

        auto parts = detail::map_chunks(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
            SumDistribution part;
            for (std::uint64_t i = lo; i < hi; ++i) {
                const auto alpha = gf::FieldElem::from_index(i);
                const CycInt value = cyclo::from_counts(p, power_trace_histogram(ctx, alpha, e));
                if (!alpha.is_zero()) {
                    const CycInt want = ctx.quad_character(alpha) > 0 ? plus : -plus;
                    if (value != want) {
                        throw Error(ErrorCode::LemmaViolation, "alpha index " + std::to_string(i) + ": T_alpha = " +
                                                                   value.to_string() + ", expected " + want.to_string());
                    }
                }
                part.add(value);
            }
            return part;
        });
        for (auto& part : parts) report.observed.merge(part);
    } else {
        const EvenParams ep = even_params(p, m, k);
        const Int128 sign = tag == CaseTag::EvenEq ? 1 : -1;
        report.expected.add(CycInt::integer(p, sign * ep.hd), to_count(ep.n1));
        report.expected.add(CycInt::integer(p, -sign * ep.h), to_count(ep.n2));
        report.observed = t_alpha_distribution(ctx, k, workers);
        if (report.observed != report.expected) {
            for (std::uint64_t i = 0; i < q; ++i) {
                const CycInt value = t_alpha(ctx, k, gf::FieldElem::from_index(i));
                if (!report.expected.entries.contains(value)) {
                    throw Error(ErrorCode::LemmaViolation, "alpha index " + std::to_string(i) + ": T_alpha = " +
                                                               value.to_string() + " is outside the predicted value set");
                }
            }
            throw Error(ErrorCode::LemmaViolation, "T_alpha value frequencies differ from the predicted table");
        }
    }
    if (report.observed != report.expected) {
        throw Error(ErrorCode::LemmaViolation, "T_alpha multiset differs from the predicted one");
    }
    return report;
}

PowerSumTable::PowerSumTable(const gf::FieldCtx& ctx, std::uint64_t exponent, unsigned workers)
    : ctx_(&ctx), classes_(0), zero_(ctx.p()) {
    guard_tables(ctx);
    const std::uint64_t n = ctx.group_order();
    const std::uint64_t e = exponent % n;
    classes_ = e == 0 ? n : std::gcd(e, n);
    zero_ = unit_sum(ctx, ctx.zero(), e);
    auto parts = detail::map_chunks(classes_, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<CycInt> part;
        part.reserve(hi - lo);
        for (std::uint64_t c = lo; c < hi; ++c) part.push_back(unit_sum(ctx, ctx.exp(c), e));
        return part;
    });
    by_class_.reserve(classes_);
    for (auto& part : parts) {
        for (auto& v : part) by_class_.push_back(std::move(v));
    }
}

const CycInt& PowerSumTable::operator()(gf::FieldElem alpha) const {
    if (alpha.is_zero()) return zero_;
    return by_log(ctx_->log(alpha));
}

SumDistribution PowerSumTable::distribution() const {
    SumDistribution out;
    out.add(zero_);
    const std::uint64_t per_class = ctx_->group_order() / classes_;
    for (const auto& v : by_class_) out.add(v, per_class);
    return out;
}

PowerSumTable make_r_table(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    return PowerSumTable(ctx, pk_plus_1(ctx, k), workers);
}

IdentityReport check_r_identity(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    guard_tables(ctx);
    (void)even_params(ctx.p(), ctx.m(), k);
    const std::uint64_t e = pk_plus_1(ctx, k);
    const std::uint32_t p = ctx.p();
    auto parts = detail::map_chunks(ctx.order(), workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) {
            const auto alpha = gf::FieldElem::from_index(i);
            const CycInt t = cyclo::from_counts(p, power_trace_histogram(ctx, alpha, e));
            const CycInt r = unit_sum(ctx, alpha, e);
            if (r != t.scaled(p - 1)) {
                throw Error(ErrorCode::IdentityViolation, "alpha index " + std::to_string(i) + ": R_alpha = " + r.to_string() +
                                                              " but (p-1) T_alpha = " + t.scaled(p - 1).to_string());
            }
            const CycInt t_neg = cyclo::from_counts(p, power_trace_histogram(ctx, ctx.neg(alpha), e));
            if (t_neg != t) {
                throw Error(ErrorCode::IdentityViolation, "alpha index " + std::to_string(i) + ": T_alpha != T_{-alpha}");
            }
        }
        return hi - lo;
    });
    IdentityReport report;
    for (auto c : parts) report.checked += c;
    return report;
}

SumDistribution r_distribution(const gf::FieldCtx& ctx, unsigned k, unsigned workers) {
    (void)even_params(ctx.p(), ctx.m(), k);
    return make_r_table(ctx, k, workers).distribution();
}

SumDistribution r_distribution_expected(std::uint32_t p, unsigned m, unsigned k) {
    const EvenParams ep = even_params(p, m, k);
    const Int128 sign = ep.tag == CaseTag::EvenEq ? 1 : -1;
    const Int128 pm1 = p - 1;
    SumDistribution out;
    out.add(CycInt::integer(p, pm1 * ep.q));
    out.add(CycInt::integer(p, sign * pm1 * ep.hd), to_count(ep.n1));
    out.add(CycInt::integer(p, -sign * pm1 * ep.h), to_count(ep.n2));
    return out;
}

CycInt t_ab(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, gf::FieldElem a, gf::FieldElem b) {
    guard_tables(ctx);
    const std::uint64_t half = structure::half_pk_plus_1(ctx.p(), ctx.m(), spec.k);
    const gf::FieldElem twisted = ctx.mul(ctx.sub(a, b), ctx.exp(half));
    return r_alpha(ctx, spec.k, ctx.add(a, b)) + r_alpha(ctx, spec.k, twisted);
}

SumDistribution t_distribution(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, unsigned workers) {
    if (!structure::is_even_s(spec.case_tag)) {
        throw Error(ErrorCode::CaseNotCovered, "T(a,b) convolution only covers even s; case is " +
                                                   std::string(structure::to_string(spec.case_tag)));
    }
    // (a, b) -> (a + b, (a - b) pi^((p^k+1)/2)) is a bijection of F^2, so the
    // multiset of T is the self-convolution of the R multiset.
    const SumDistribution r = r_distribution(ctx, spec.k, workers);
    SumDistribution out;
    for (const auto& [v1, c1] : r.entries) {
        for (const auto& [v2, c2] : r.entries) out.add(v1 + v2, to_count(static_cast<UInt128>(c1) * c2));
    }
    return out;
}

SumDistribution t_distribution_expected(std::uint32_t p, unsigned m, unsigned k) {
    const EvenParams ep = even_params(p, m, k);
    const Int128 s = ep.tag == CaseTag::EvenEq ? 1 : -1;
    const Int128 pm1 = p - 1;
    SumDistribution out;
    out.add(CycInt::integer(p, 2 * pm1 * ep.q));
    out.add(CycInt::integer(p, pm1 * (ep.q + s * ep.hd)), to_count(2 * ep.n1));
    out.add(CycInt::integer(p, pm1 * (ep.q - s * ep.h)), to_count(2 * ep.n2));
    out.add(CycInt::integer(p, s * pm1 * (ep.hd - ep.h)), to_count(2 * ep.n1 * ep.n2));
    out.add(CycInt::integer(p, s * 2 * pm1 * ep.hd), to_count(ep.n1 * ep.n1));
    out.add(CycInt::integer(p, -s * 2 * pm1 * ep.h), to_count(ep.n2 * ep.n2));
    return out;
}

CycInt delta_general(const gf::FieldCtx& ctx, std::uint64_t t, gf::FieldElem a, gf::FieldElem b) {
    guard_tables(ctx);
    const std::uint64_t n = ctx.group_order();
    const std::uint64_t e = mulmod(2, t % n, n);
    auto h = power_trace_histogram(ctx, ctx.add(a, b), e);
    const auto h2 = power_trace_histogram(ctx, ctx.mul(ctx.sub(a, b), ctx.exp(t)), e);
    for (std::size_t r = 0; r < h.size(); ++r) h[r] += h2[r];
    return cyclo::from_counts(ctx.p(), expand_over_units(ctx.p(), h));
}

SumDistribution delta_distribution(const gf::FieldCtx& ctx, std::uint64_t t, unsigned workers) {
    guard_tables(ctx);
    const std::uint64_t q = ctx.order();
    auto parts = detail::map_chunks(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        SumDistribution part;
        for (std::uint64_t a = lo; a < hi; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                part.add(delta_general(ctx, t, gf::FieldElem::from_index(a), gf::FieldElem::from_index(b)));
            }
        }
        return part;
    });
    SumDistribution out;
    for (auto& part : parts) out.merge(part);
    return out;
}

bool same_power_image(const gf::FieldCtx& ctx, std::uint64_t e1, std::uint64_t e2) {
    const std::uint64_t n = ctx.group_order();
    auto image = [&](std::uint64_t e) {
        std::vector<std::uint64_t> hits(n, 0);
        for (std::uint64_t j = 0; j < n; ++j) ++hits[mulmod(j, e, n)];
        return hits;
    };
    // x = 0 maps to 0 under both positive powers.
    return image(e1) == image(e2);
}

}  // namespace wdist::expsums
