#include "wdist/predict.hpp"

#include <limits>
#include <numeric>

#include "wdist/arith.hpp"
#include "wdist/error.hpp"

namespace wdist::predict {

using structure::CaseTag;

namespace {

void validate(std::uint32_t p, unsigned m, unsigned k) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::InvalidParameters, "p must be an odd prime");
    if (m == 0) throw Error(ErrorCode::InvalidParameters, "m must be >= 1");
    if (k == 0) throw Error(ErrorCode::InvalidParameters, "k must be >= 1");
}

UInt128 upow(std::uint64_t b, unsigned e) {
    UInt128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

CaseInfo classify(std::uint32_t p, unsigned m, unsigned k) {
    validate(p, m, k);
    const CaseTag tag = structure::case_tag(m, k);
    const unsigned d = std::gcd(m, k);
    CaseInfo info{tag, d, m / d, std::nullopt, std::nullopt};
    if (tag == CaseTag::OddS && m % 2 != 0) throw Error(ErrorCode::InvalidParameters, "ODD_S requires even m");
    if (m % 2 == 0) info.p_half = ipow(p, m / 2);
    if (structure::is_even_s(tag)) info.p_half_d = ipow(p, m / 2 + d);
    return info;
}

std::vector<TableRow> table_rows(std::uint32_t p, unsigned m, unsigned k) {
    const CaseInfo info = classify(p, m, k);
    if (m > 40) throw Error(ErrorCode::TooLarge, "m too large");
    const UInt128 q = upow(p, m), n = q - 1;
    const UInt128 pm1 = p - 1, half = (p - 1) / 2;
    const UInt128 big = upow(p, m - 1);  // p^(m-1)
    std::vector<TableRow> rows{{0, 1}};

    switch (info.case_tag) {
        case CaseTag::EvenEq:
        case CaseTag::EvenLt: {
            const UInt128 h = upow(p, m / 2 - 1);             // p^(m/2-1)
            const UInt128 hd = upow(p, m / 2 + info.d - 1);   // p^(m/2+d-1)
            const UInt128 pd = upow(p, info.d);
            const UInt128 n1 = n / (pd + 1), n2 = pd * n1;
            if (info.case_tag == CaseTag::EvenEq) {
                rows.push_back({half * (big - hd), 2 * n1});
                rows.push_back({half * (big + h), 2 * n2});
                rows.push_back({half * (2 * big - hd + h), 2 * n1 * n2});
                rows.push_back({pm1 * (big - hd), n1 * n1});
                rows.push_back({pm1 * (big + h), n2 * n2});
            } else {
                rows.push_back({half * (big + hd), 2 * n1});
                rows.push_back({half * (big - h), 2 * n2});
                rows.push_back({half * (2 * big + hd - h), 2 * n1 * n2});
                rows.push_back({pm1 * (big + hd), n1 * n1});
                rows.push_back({pm1 * (big - h), n2 * n2});
            }
            break;
        }
        case CaseTag::OddM:
            rows.push_back({half * big, 2 * n});
            rows.push_back({pm1 * big, q * q - 2 * q + 1});
            break;
        case CaseTag::OddS: {
            const UInt128 h = upow(p, m / 2 - 1);
            if ((n * n) % 4 != 0) throw Error(ErrorCode::InvalidParameters, "(p^m-1)^2 not divisible by 4");
            rows.push_back({pm1 * big, n * n / 2});
            rows.push_back({pm1 * (big + h), n * n / 4});
            rows.push_back({pm1 * (big - h), n * n / 4});
            rows.push_back({half * (big + h), n});
            rows.push_back({half * (big - h), n});
            break;
        }
    }
    return rows;
}

codes::WeightDistribution predicted_distribution(std::uint32_t p, unsigned m, unsigned k) {
    validate(p, m, k);
    const std::uint64_t n = structure::group_order(p, m);
    if (n + 1 > (std::uint64_t{1} << 31)) throw Error(ErrorCode::TooLarge, "p^m > 2^31: frequencies overflow 64 bits");
    const std::uint64_t e = structure::half_pk_plus_1(p, m, k);
    const auto adm = structure::check_admissible(p, m, e);
    if (!adm.admissible) {
        throw Error(ErrorCode::InvalidParameters, "(p^k+1)/2 = " + std::to_string(e) +
                                                      " is inadmissible (i=" + std::to_string(*adm.witness) +
                                                      "); the two zeros coincide and no table applies");
    }

    codes::WeightDistribution dist{{}, n, 2 * m};
    UInt128 total = 0, moment = 0;
    for (const auto& row : table_rows(p, m, k)) {
        dist.entries[static_cast<std::uint64_t>(row.weight)] += static_cast<std::uint64_t>(row.frequency);
        total += row.frequency;
        moment += row.weight * row.frequency;
    }
    const UInt128 q = static_cast<UInt128>(n) + 1;
    if (total != q * q || moment != static_cast<UInt128>(n) * (p - 1) * q * q / p) {
        throw Error(ErrorCode::IdentityViolation, "table for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                                                      ", k=" + std::to_string(k) + " fails its moment identities");
    }
    return dist;
}

std::vector<DiffEntry> diff_distributions(const codes::WeightDistribution& predicted,
                                          const codes::WeightDistribution& computed) {
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> merged;
    for (const auto& [w, a] : predicted.entries) merged[w].first = a;
    for (const auto& [w, a] : computed.entries) merged[w].second = a;
    std::vector<DiffEntry> out;
    for (const auto& [w, pc] : merged) {
        if (pc.first != pc.second) out.push_back({w, pc.first, pc.second});
    }
    return out;
}

VerifyReport verify(const gf::FieldCtx& ctx, std::uint64_t t, codes::Method method, unsigned workers) {
    const structure::CodeSpec spec = structure::make_code_spec(ctx.p(), ctx.m(), t);
    const codes::Method used = codes::resolve_method(ctx, spec.t, method);
    VerifyReport report{false, spec, used, predicted_distribution(ctx.p(), ctx.m(), spec.k),
                        codes::weight_distribution(ctx, spec.t, used, workers), {}};
    report.diff = diff_distributions(report.predicted, report.computed);
    report.pass = report.diff.empty() && report.predicted.n == report.computed.n;
    return report;
}

}  // namespace wdist::predict
