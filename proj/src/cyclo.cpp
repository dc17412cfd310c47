#include "wdist/cyclo.hpp"

#include <algorithm>

#include "wdist/error.hpp"

namespace wdist::cyclo {

namespace {

void require_same(const CycInt& a, const CycInt& b) {
    if (a.p() != b.p()) {
        throw Error(ErrorCode::MixedModulus,
                    "operands live in Z[zeta_" + std::to_string(a.p()) + "] and Z[zeta_" + std::to_string(b.p()) + "]");
    }
}

}  // namespace

CycInt::CycInt(std::uint32_t p) : p_(p), c_(p, 0) {
    if (p < 2) throw Error(ErrorCode::InvalidParameters, "cyclotomic order must be >= 2");
}

CycInt::CycInt(std::uint32_t p, std::vector<Coeff> coeffs) : p_(p), c_(std::move(coeffs)) {
    if (p < 2) throw Error(ErrorCode::InvalidParameters, "cyclotomic order must be >= 2");
    if (c_.size() != p) throw Error(ErrorCode::InvalidParameters, "coefficient vector must have length p");
    canonicalize();
}

CycInt CycInt::integer(std::uint32_t p, Coeff value) {
    CycInt r(p);
    r.c_[0] = value;
    return r;
}

void CycInt::canonicalize() {
    const Coeff top = c_[p_ - 1];
    if (top == 0) return;
    for (auto& c : c_) c = checked_sub(c, top);
}

std::optional<Coeff> CycInt::as_rational_integer() const {
    for (std::uint32_t j = 1; j < p_; ++j) {
        if (c_[j] != 0) return std::nullopt;
    }
    return c_[0];
}

CycInt& CycInt::operator+=(const CycInt& o) {
    require_same(*this, o);
    for (std::uint32_t j = 0; j < p_; ++j) c_[j] = checked_add(c_[j], o.c_[j]);
    return *this;
}

CycInt& CycInt::operator-=(const CycInt& o) {
    require_same(*this, o);
    for (std::uint32_t j = 0; j < p_; ++j) c_[j] = checked_sub(c_[j], o.c_[j]);
    return *this;
}

CycInt operator*(const CycInt& a, const CycInt& b) {
    require_same(a, b);
    const std::uint32_t p = a.p_;
    std::vector<Coeff> r(p, 0);
    for (std::uint32_t i = 0; i < p; ++i) {
        if (a.c_[i] == 0) continue;
        for (std::uint32_t j = 0; j < p; ++j) {
            if (b.c_[j] == 0) continue;
            auto& slot = r[(i + j) % p];
            slot = checked_add(slot, checked_mul(a.c_[i], b.c_[j]));
        }
    }
    return CycInt(p, std::move(r));
}

CycInt CycInt::scaled(Coeff n) const {
    CycInt r = *this;
    for (auto& c : r.c_) c = checked_mul(c, n);
    return r;
}

CycInt CycInt::galois(std::uint32_t g) const {
    if (g % p_ == 0) throw Error(ErrorCode::InvalidParameters, "Galois exponent must be prime to p");
    std::vector<Coeff> r(p_, 0);
    for (std::uint32_t j = 0; j < p_; ++j) {
        r[static_cast<std::uint64_t>(j) * g % p_] = c_[j];
    }
    return CycInt(p_, std::move(r));
}

std::string CycInt::to_string() const {
    std::string out;
    for (std::uint32_t j = 0; j < p_; ++j) {
        const Coeff c = c_[j];
        if (c == 0) continue;
        const bool neg = c < 0;
        const Coeff mag = neg ? -c : c;
        if (out.empty()) {
            if (neg) out += "-";
        } else {
            out += neg ? " - " : " + ";
        }
        if (j == 0) {
            out += wdist::to_string(mag);
            continue;
        }
        if (mag != 1) out += wdist::to_string(mag) + "*";
        out += "z";
        if (j > 1) out += "^" + std::to_string(j);
    }
    return out.empty() ? "0" : out;
}

bool CycIntOrder::operator()(const CycInt& a, const CycInt& b) const {
    if (a.p() != b.p()) return a.p() < b.p();
    const auto ra = a.as_rational_integer();
    const auto rb = b.as_rational_integer();
    if (ra && rb) return *ra < *rb;
    if (ra || rb) return ra.has_value();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(), b.coeffs().end());
}

CycInt cyc_pow(CycInt a, unsigned e) {
    CycInt r = CycInt::integer(a.p(), 1);
    while (e != 0) {
        if (e & 1U) r = r * a;
        e >>= 1U;
        if (e != 0) a = a * a;
    }
    return r;
}

CycInt zeta_pow(std::uint32_t p, std::int64_t j) {
    const std::int64_t pp = p;
    std::vector<Coeff> c(p, 0);
    c[static_cast<std::size_t>(((j % pp) + pp) % pp)] = 1;
    return CycInt(p, std::move(c));
}

CycInt from_counts(std::uint32_t p, std::span<const std::uint64_t> counts) {
    if (counts.size() != p) throw Error(ErrorCode::InvalidParameters, "histogram must have p buckets");
    std::vector<Coeff> c(counts.begin(), counts.end());
    return CycInt(p, std::move(c));
}

CycInt gauss_sum(std::uint32_t p) {
    if (p < 3 || !is_prime(p)) throw Error(ErrorCode::NotPrime, "Gauss sums need an odd prime");
    std::vector<std::uint64_t> counts(p, 0);
    for (std::uint64_t u = 0; u < p; ++u) ++counts[u * u % p];
    return from_counts(p, counts);
}

}  // namespace wdist::cyclo
