#include "wdist/codes.hpp"

#include "parallel.hpp"
#include "wdist/error.hpp"

namespace wdist::codes {

using gf::FieldElem;

namespace {

void require_admissible(const gf::FieldCtx& ctx, std::uint64_t t) {
    const auto adm = structure::check_admissible(ctx.p(), ctx.m(), t);
    if (!adm.admissible) {
        throw Error(ErrorCode::InadmissibleT, "t=" + std::to_string(t) + " fails at i=" + std::to_string(*adm.witness));
    }
}

std::optional<structure::CodeSpec> try_spec(const gf::FieldCtx& ctx, std::uint64_t t) {
    try {
        return structure::make_code_spec(ctx.p(), ctx.m(), t);
    } catch (const Error& e) {
        if (e.code() == ErrorCode::NoMatch) return std::nullopt;
        throw;
    }
}

std::uint64_t direct_work(const gf::FieldCtx& ctx) {
    const UInt128 q = ctx.order();
    const UInt128 work = q * q * (q - 1);
    return work > kDirectWorkLimit ? kDirectWorkLimit + 1 : static_cast<std::uint64_t>(work);
}

}  // namespace

CodeTables::CodeTables(const gf::FieldCtx& ctx, std::uint64_t t) : t_(t % ctx.group_order()) {
    require_admissible(ctx, t_);
    const std::uint64_t n = ctx.group_order();
    const FieldElem step_u = ctx.pow(ctx.pi(), static_cast<std::int64_t>(t_));
    const FieldElem step_v = ctx.neg(step_u);
    u_.reserve(n);
    v_.reserve(n);
    FieldElem u = ctx.one(), v = ctx.one();
    for (std::uint64_t i = 0; i < n; ++i) {
        u_.push_back(u);
        v_.push_back(v);
        u = ctx.mul(u, step_u);
        v = ctx.mul(v, step_v);
    }
}

Codeword codeword(const gf::FieldCtx& ctx, const CodeTables& tables, FieldElem a, FieldElem b) {
    Codeword c{std::vector<std::uint32_t>(tables.length()), a, b};
    for (std::uint64_t i = 0; i < tables.length(); ++i) {
        c.symbols[i] = ctx.trace(ctx.add(ctx.mul(a, tables.u()[i]), ctx.mul(b, tables.v()[i])));
    }
    return c;
}

Codeword codeword(const gf::FieldCtx& ctx, std::uint64_t t, FieldElem a, FieldElem b) {
    return codeword(ctx, CodeTables(ctx, t), a, b);
}

std::vector<std::uint32_t> shift_left(const std::vector<std::uint32_t>& symbols) {
    std::vector<std::uint32_t> out(symbols.begin() + (symbols.empty() ? 0 : 1), symbols.end());
    if (!symbols.empty()) out.push_back(symbols.front());
    return out;
}

std::uint64_t hamming_weight(const std::vector<std::uint32_t>& symbols) {
    std::uint64_t w = 0;
    for (auto s : symbols) w += s != 0;
    return w;
}

std::uint64_t weight_direct(const gf::FieldCtx& ctx, std::uint64_t t, FieldElem a, FieldElem b) {
    return hamming_weight(codeword(ctx, t, a, b).symbols);
}

std::uint64_t weight_from_sum(const gf::FieldCtx& ctx, const cyclo::CycInt& sum) {
    const auto value = sum.as_rational_integer();
    if (!value) throw Error(ErrorCode::NonRationalSum, "exponential sum " + sum.to_string() + " is not rational");
    const Int128 two_p = 2 * static_cast<Int128>(ctx.p());
    if (*value % two_p != 0) {
        throw Error(ErrorCode::NonRationalSum, "sum " + wdist::to_string(*value) + " is not divisible by 2p");
    }
    const Int128 q = ctx.order();
    const Int128 w = q - q / ctx.p() - *value / two_p;
    if (w < 0 || w > q - 1) throw Error(ErrorCode::NonRationalSum, "weight " + wdist::to_string(w) + " out of range");
    return static_cast<std::uint64_t>(w);
}

std::uint64_t weight_fast(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, FieldElem a, FieldElem b) {
    const unsigned undo = (ctx.m() - spec.tau) % ctx.m();
    return weight_from_sum(ctx, expsums::t_ab(ctx, spec, ctx.frobenius(a, undo), ctx.frobenius(b, undo)));
}

FastWeigher::FastWeigher(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, unsigned workers)
    : ctx_(&ctx),
      spec_(spec),
      twist_log_(structure::half_pk_plus_1(ctx.p(), ctx.m(), spec.k)),
      undo_tau_((ctx.m() - spec.tau) % ctx.m()) {
    const auto table = expsums::make_r_table(ctx, spec.k, workers);
    auto rational = [](const cyclo::CycInt& v) {
        const auto r = v.as_rational_integer();
        if (!r) throw Error(ErrorCode::NonRationalSum, "R value " + v.to_string() + " is not rational");
        return *r;
    };
    r_zero_ = rational(table.at_zero());
    r_class_.reserve(table.classes());
    for (std::uint64_t c = 0; c < table.classes(); ++c) r_class_.push_back(rational(table.by_log(c)));
}

Int128 FastWeigher::r_value(FieldElem alpha, std::uint64_t extra_log) const {
    if (alpha.is_zero()) return r_zero_;
    return r_class_[(ctx_->log(alpha) + extra_log) % r_class_.size()];
}

std::uint64_t FastWeigher::operator()(FieldElem a, FieldElem b) const {
    const auto& ctx = *ctx_;
    const FieldElem sa = ctx.frobenius(a, undo_tau_);
    const FieldElem sb = ctx.frobenius(b, undo_tau_);
    const Int128 t = r_value(ctx.add(sa, sb), 0) + r_value(ctx.sub(sa, sb), twist_log_);
    return weight_from_sum(ctx, cyclo::CycInt::integer(ctx.p(), t));
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::Direct: return "direct";
        case Method::Fast: return "fast";
        case Method::Auto: return "auto";
    }
    return "?";
}

std::optional<Method> method_from_string(std::string_view s) {
    for (auto m : {Method::Direct, Method::Fast, Method::Auto}) {
        if (to_string(m) == s) return m;
    }
    return std::nullopt;
}

std::uint64_t total_count(const WeightDistribution& dist) {
    std::uint64_t total = 0;
    for (const auto& [w, a] : dist.entries) total += a;
    return total;
}

UInt128 first_moment(const WeightDistribution& dist) {
    UInt128 s = 0;
    for (const auto& [w, a] : dist.entries) s += static_cast<UInt128>(w) * a;
    return s;
}

unsigned dimension_of(std::uint32_t p, std::uint64_t total) {
    unsigned dim = 0;
    while (total > 1 && total % p == 0) {
        total /= p;
        ++dim;
    }
    return total == 1 ? dim : 0;
}

Method resolve_method(const gf::FieldCtx& ctx, std::uint64_t t, Method requested) {
    require_admissible(ctx, t);
    if (!ctx.has_tables()) throw Error(ErrorCode::TooLarge, "field too large to enumerate");
    const auto spec = try_spec(ctx, t);
    const bool convolution = spec && structure::is_even_s(spec->case_tag);
    const bool direct_ok = direct_work(ctx) <= kDirectWorkLimit;
    const bool pair_ok = ctx.order() <= kPairDeltaLimit;
    switch (requested) {
        case Method::Direct:
            if (!direct_ok) throw Error(ErrorCode::TooLarge, "direct enumeration exceeds 2^34 work units");
            return Method::Direct;
        case Method::Fast:
            if (!convolution && !pair_ok) {
                throw Error(ErrorCode::TooLarge, "per-pair Delta enumeration needs p^m <= 729");
            }
            return Method::Fast;
        case Method::Auto:
            if (convolution) return Method::Fast;
            if (direct_ok) return Method::Direct;
            if (pair_ok) return Method::Fast;
            throw Error(ErrorCode::TooLarge, "no enumeration method fits the resource guards");
    }
    return requested;
}

namespace {

WeightDistribution enumerate_direct(const gf::FieldCtx& ctx, std::uint64_t t, unsigned workers) {
    const CodeTables tables(ctx, t);
    const std::uint64_t q = ctx.order(), n = tables.length();
    const std::uint32_t p = ctx.p();

    // rows[x][i] = Tr(x u_i); neg_rows[y][i] = -Tr(y v_i). A symbol of c(a,b)
    // vanishes exactly where rows[a] and neg_rows[b] agree.
    std::vector<std::uint8_t> rows(q * n), neg_rows(q * n);
    detail::map_chunks(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t x = lo; x < hi; ++x) {
            const FieldElem e = FieldElem::from_index(x);
            for (std::uint64_t i = 0; i < n; ++i) {
                rows[x * n + i] = static_cast<std::uint8_t>(ctx.trace(ctx.mul(e, tables.u()[i])));
                neg_rows[x * n + i] = static_cast<std::uint8_t>((p - ctx.trace(ctx.mul(e, tables.v()[i]))) % p);
            }
        }
        return 0;
    });

    auto parts = detail::map_chunks(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> hist(n + 1, 0);
        for (std::uint64_t a = lo; a < hi; ++a) {
            const std::uint8_t* ra = &rows[a * n];
            for (std::uint64_t b = 0; b < q; ++b) {
                const std::uint8_t* rb = &neg_rows[b * n];
                std::uint64_t w = 0;
                for (std::uint64_t i = 0; i < n; ++i) w += ra[i] != rb[i];
                ++hist[w];
            }
        }
        return hist;
    });
    WeightDistribution dist{{}, n, 0};
    for (std::uint64_t w = 0; w <= n; ++w) {
        std::uint64_t a = 0;
        for (const auto& h : parts) a += h[w];
        if (a != 0) dist.entries[w] = a;
    }
    return dist;
}

WeightDistribution enumerate_pair_delta(const gf::FieldCtx& ctx, std::uint64_t t, unsigned workers) {
    const std::uint64_t q = ctx.order(), n = ctx.group_order();
    auto parts = detail::map_chunks(q, workers, [&](std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::uint64_t> hist(n + 1, 0);
        for (std::uint64_t a = lo; a < hi; ++a) {
            for (std::uint64_t b = 0; b < q; ++b) {
                const auto delta = expsums::delta_general(ctx, t, FieldElem::from_index(a), FieldElem::from_index(b));
                ++hist[weight_from_sum(ctx, delta)];
            }
        }
        return hist;
    });
    WeightDistribution dist{{}, n, 0};
    for (std::uint64_t w = 0; w <= n; ++w) {
        std::uint64_t a = 0;
        for (const auto& h : parts) a += h[w];
        if (a != 0) dist.entries[w] = a;
    }
    return dist;
}

WeightDistribution enumerate_convolution(const gf::FieldCtx& ctx, const structure::CodeSpec& spec, unsigned workers) {
    const auto sums = expsums::t_distribution(ctx, spec, workers);
    WeightDistribution dist{{}, ctx.group_order(), 0};
    for (const auto& [value, count] : sums.entries) dist.entries[weight_from_sum(ctx, value)] += count;
    return dist;
}

}  // namespace

WeightDistribution weight_distribution(const gf::FieldCtx& ctx, std::uint64_t t, Method method, unsigned workers) {
    t %= ctx.group_order();
    const Method used = resolve_method(ctx, t, method);
    WeightDistribution dist;
    if (used == Method::Direct) {
        dist = enumerate_direct(ctx, t, workers);
    } else if (auto spec = try_spec(ctx, t); spec && structure::is_even_s(spec->case_tag)) {
        dist = enumerate_convolution(ctx, *spec, workers);
    } else {
        dist = enumerate_pair_delta(ctx, t, workers);
    }
    dist.dimension = dimension_of(ctx.p(), total_count(dist));
    return dist;
}

std::string weight_enumerator(const WeightDistribution& dist) {
    std::string out;
    for (const auto& [w, a] : dist.entries) {
        if (!out.empty()) out += "+";
        if (w == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += "X^" + std::to_string(w);
    }
    return out.empty() ? "0" : out;
}

std::uint64_t minimum_distance(const WeightDistribution& dist) {
    for (const auto& [w, a] : dist.entries) {
        if (w > 0 && a > 0) return w;
    }
    throw Error(ErrorCode::DegenerateCode, "the code has no nonzero codeword");
}

}  // namespace wdist::codes
