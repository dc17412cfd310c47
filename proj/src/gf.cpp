#include "wdist/gf.hpp"

#include <fstream>
#include <istream>
#include <map>
#include <sstream>
#include <utility>

#include "wdist/arith.hpp"
#include "wdist/error.hpp"

namespace wdist::gf {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    return static_cast<std::uint32_t>(powmod(a, p - 2, p));
}

// a mod b over F_p; b nonzero.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    trim(a);
    const std::uint64_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) {
            a[shift + j] = static_cast<std::uint32_t>((a[shift + j] + (p - c) * b[j]) % p);
        }
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

const std::map<std::pair<std::uint32_t, unsigned>, Poly>& builtin_table() {
    static const std::map<std::pair<std::uint32_t, unsigned>, Poly> table = {
        {{3, 1}, {1, 1}},
        {{3, 2}, {2, 2, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{3, 4}, {2, 0, 0, 2, 1}},
        {{3, 5}, {1, 2, 0, 0, 0, 1}},
        {{3, 6}, {2, 2, 1, 0, 2, 0, 1}},
        {{3, 7}, {1, 0, 2, 0, 0, 0, 0, 1}},
        {{3, 8}, {2, 2, 2, 0, 1, 2, 0, 0, 1}},
        {{5, 1}, {3, 1}},
        {{5, 2}, {2, 4, 1}},
        {{5, 3}, {3, 3, 0, 1}},
        {{5, 4}, {2, 4, 4, 0, 1}},
        {{5, 5}, {3, 4, 0, 0, 0, 1}},
        {{5, 6}, {2, 0, 1, 4, 1, 0, 1}},
        {{5, 7}, {3, 3, 0, 0, 0, 0, 0, 1}},
        {{5, 8}, {2, 4, 3, 0, 1, 0, 0, 0, 1}},
        {{7, 1}, {4, 1}},
        {{7, 2}, {3, 6, 1}},
        {{7, 3}, {4, 0, 6, 1}},
        {{7, 4}, {3, 4, 5, 0, 1}},
        {{7, 5}, {4, 1, 0, 0, 0, 1}},
        {{7, 6}, {3, 6, 4, 5, 1, 0, 1}},
        {{7, 7}, {4, 6, 0, 0, 0, 0, 0, 1}},
        {{7, 8}, {3, 2, 6, 4, 0, 0, 0, 0, 1}},
    };
    return table;
}

}  // namespace

FieldCtx::Digits FieldCtx::unpack(Index i) const {
    Digits d(m_);
    for (unsigned k = 0; k < m_; ++k) {
        d[k] = static_cast<std::uint32_t>(i % p_);
        i /= p_;
    }
    return d;
}

Index FieldCtx::pack(const Digits& d) const {
    Index i = 0;
    for (unsigned k = m_; k-- > 0;) i = i * p_ + d[k];
    return i;
}

FieldElem FieldCtx::constant(std::int64_t c) const {
    const std::int64_t p = p_;
    return FieldElem::from_index(static_cast<Index>(((c % p) + p) % p));
}

std::vector<std::uint32_t> FieldCtx::coeffs(FieldElem x) const { return unpack(x.index()); }

FieldElem FieldCtx::from_coeffs(std::span<const std::uint32_t> coeffs) const {
    if (coeffs.size() != m_) throw Error(ErrorCode::InvalidParameters, "coordinate vector must have length m");
    Digits d(coeffs.begin(), coeffs.end());
    for (auto c : d) {
        if (c >= p_) throw Error(ErrorCode::InvalidParameters, "coordinate out of range");
    }
    return FieldElem::from_index(pack(d));
}

FieldElem FieldCtx::add(FieldElem a, FieldElem b) const {
    Index x = a.index(), y = b.index(), out = 0, place = 1;
    for (unsigned k = 0; k < m_; ++k) {
        out += ((x % p_ + y % p_) % p_) * place;
        x /= p_;
        y /= p_;
        place *= p_;
    }
    return FieldElem::from_index(out);
}

FieldElem FieldCtx::neg(FieldElem a) const {
    Index x = a.index(), out = 0, place = 1;
    for (unsigned k = 0; k < m_; ++k) {
        out += ((p_ - x % p_) % p_) * place;
        x /= p_;
        place *= p_;
    }
    return FieldElem::from_index(out);
}

FieldElem FieldCtx::sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }

FieldElem FieldCtx::poly_mul(FieldElem a, FieldElem b) const {
    const Digits x = unpack(a.index());
    const Digits y = unpack(b.index());
    std::vector<std::uint64_t> r(2 * m_ - 1, 0);
    for (unsigned i = 0; i < m_; ++i) {
        if (x[i] == 0) continue;
        for (unsigned j = 0; j < m_; ++j) r[i + j] = (r[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    }
    for (std::size_t deg = r.size(); deg-- > m_;) {
        const std::uint64_t c = r[deg];
        if (c == 0) continue;
        for (unsigned j = 0; j <= m_; ++j) {
            r[deg - m_ + j] = (r[deg - m_ + j] + (p_ - c) * modulus_[j]) % p_;
        }
    }
    Digits d(m_);
    for (unsigned k = 0; k < m_; ++k) d[k] = static_cast<std::uint32_t>(r[k]);
    return FieldElem::from_index(pack(d));
}

FieldElem FieldCtx::poly_pow(FieldElem a, std::uint64_t e) const {
    FieldElem r = one();
    while (e != 0) {
        if (e & 1U) r = poly_mul(r, a);
        a = poly_mul(a, a);
        e >>= 1U;
    }
    return r;
}

FieldElem FieldCtx::mul(FieldElem a, FieldElem b) const {
    if (!tables_) return poly_mul(a, b);
    if (a.is_zero() || b.is_zero()) return zero();
    const std::uint64_t n = q_ - 1;
    const std::uint64_t e = (std::uint64_t{tables_->log[a.index()]} + tables_->log[b.index()]) % n;
    return FieldElem::from_index(tables_->exp[e]);
}

FieldElem FieldCtx::pow(FieldElem a, std::int64_t e) const {
    if (a.is_zero()) {
        if (e == 0) return one();
        if (e < 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        return zero();
    }
    const auto n = static_cast<std::int64_t>(q_ - 1);
    const auto r = static_cast<std::uint64_t>(((e % n) + n) % n);
    if (!tables_) return poly_pow(a, r);
    return FieldElem::from_index(tables_->exp[mulmod(tables_->log[a.index()], r, q_ - 1)]);
}

FieldElem FieldCtx::inv(FieldElem a) const {
    if (a.is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return pow(a, -1);
}

FieldElem FieldCtx::frobenius(FieldElem x, unsigned j) const {
    if (x.is_zero()) return x;
    return pow(x, static_cast<std::int64_t>(powmod(p_, j, q_ - 1)));
}

FieldElem FieldCtx::exp(std::uint64_t e) const {
    e %= q_ - 1;
    if (tables_) return FieldElem::from_index(tables_->exp[e]);
    return poly_pow(pi_, e);
}

std::uint64_t FieldCtx::log(FieldElem x) const {
    if (x.is_zero()) throw Error(ErrorCode::DivisionByZero, "log of zero");
    if (!tables_) throw Error(ErrorCode::TooLarge, "discrete logs need precomputed tables");
    return tables_->log[x.index()];
}

std::uint32_t FieldCtx::trace_slow(FieldElem x) const {
    const Digits d = unpack(x.index());
    std::uint64_t t = 0;
    for (unsigned i = 0; i < m_; ++i) t = (t + std::uint64_t{d[i]} * basis_trace_[i]) % p_;
    return static_cast<std::uint32_t>(t);
}

std::uint32_t FieldCtx::trace(FieldElem x) const {
    return tables_ ? tables_->trace[x.index()] : trace_slow(x);
}

FieldElem FieldCtx::trace_intermediate(FieldElem x, unsigned l) const {
    if (l == 0 || m_ % l != 0) throw Error(ErrorCode::NotADivisor, "l must divide m");
    FieldElem acc = zero();
    for (unsigned i = 0; i < m_ / l; ++i) acc = add(acc, frobenius(x, l * i));
    return acc;
}

int FieldCtx::quad_character(FieldElem x) const {
    if (x.is_zero()) return 0;
    const FieldElem y = pow(x, static_cast<std::int64_t>((q_ - 1) / 2));
    if (y == one()) return 1;
    if (y == constant(-1)) return -1;
    throw Error(ErrorCode::InvalidParameters, "x^((q-1)/2) is not +-1");
}

FieldCtx build_field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus) {
    if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
    if (p == 2) throw Error(ErrorCode::InvalidParameters, "the characteristic must be odd");
    if (m == 0) throw Error(ErrorCode::InvalidParameters, "extension degree must be >= 1");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        if (__builtin_mul_overflow(q, std::uint64_t{p}, &q) || q > kMaxFieldOrder) {
            throw Error(ErrorCode::TooLarge, "p^m exceeds 2^40");
        }
    }
    if (modulus.size() != m + 1 || modulus.back() != 1) {
        throw Error(ErrorCode::InvalidParameters, "modulus must be monic of degree m");
    }
    for (auto c : modulus) {
        if (c >= p) throw Error(ErrorCode::InvalidParameters, "modulus coefficient out of range");
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.q_ = q;
    ctx.modulus_ = std::move(modulus);
    const std::uint64_t n = q - 1;

    // The class of x: index p for m >= 2, the constant -c_0 when m == 1.
    ctx.pi_ = m == 1 ? FieldElem::from_index((p - ctx.modulus_[0]) % p) : FieldElem::from_index(p);

    if (m > 1) {
        // Rabin: x^(p^m) = x and gcd(x^(p^(m/r)) - x, f) = 1 for each prime r | m.
        auto frob_x = [&](unsigned j) {
            FieldElem y = ctx.pi_;
            for (unsigned i = 0; i < j; ++i) y = ctx.poly_pow(y, p);
            return y;
        };
        if (frob_x(m) != ctx.pi_) throw Error(ErrorCode::NotIrreducible, "x^(p^m) != x mod modulus");
        for (auto r : prime_factors(m)) {
            Poly diff = ctx.unpack(ctx.sub(frob_x(m / static_cast<unsigned>(r)), ctx.pi_).index());
            Poly g = poly_gcd(ctx.modulus_, diff, p);
            if (g.size() != 1) throw Error(ErrorCode::NotIrreducible, "modulus has a factor of degree dividing m/" + std::to_string(r));
        }
    }
    if (ctx.pi_.is_zero()) throw Error(ErrorCode::NotPrimitive, "x is zero modulo the modulus");
    for (auto l : prime_factors(n)) {
        if (ctx.poly_pow(ctx.pi_, n / l) == ctx.one()) {
            throw Error(ErrorCode::NotPrimitive, "order of x divides (p^m-1)/" + std::to_string(l));
        }
    }

    ctx.u_p_ = ctx.poly_pow(ctx.pi_, n / (p - 1));
    ctx.basis_trace_.resize(m);
    for (unsigned i = 0; i < m; ++i) {
        const FieldElem xi = ctx.poly_pow(ctx.pi_, i);
        FieldElem acc = ctx.zero(), conj = xi;
        for (unsigned j = 0; j < m; ++j) {
            acc = ctx.add(acc, conj);
            conj = ctx.poly_pow(conj, p);
        }
        if (acc.index() >= p) throw Error(ErrorCode::NotIrreducible, "trace left the prime field");
        ctx.basis_trace_[i] = static_cast<std::uint32_t>(acc.index());
    }

    if (q <= kTableLimit && p < 256) {
        auto t = std::make_shared<FieldCtx::Tables>();
        t->exp.resize(n);
        t->log.assign(q, 0);
        t->trace.resize(q);
        t->trace_by_log.resize(n);

        // Multiply by x is a shift followed by one reduction step.
        FieldCtx::Digits cur(m, 0);
        cur[0] = 1;
        for (std::uint64_t e = 0; e < n; ++e) {
            const Index idx = ctx.pack(cur);
            t->exp[e] = static_cast<std::uint32_t>(idx);
            t->log[idx] = static_cast<std::uint32_t>(e);
            const std::uint64_t carry = cur[m - 1];
            for (unsigned i = m - 1; i > 0; --i) {
                cur[i] = static_cast<std::uint32_t>((cur[i - 1] + (p - carry) * ctx.modulus_[i]) % p);
            }
            cur[0] = static_cast<std::uint32_t>((p - carry) * ctx.modulus_[0] % p);
        }

        // Mixed-radix counter over all coordinate vectors.
        FieldCtx::Digits d(m, 0);
        std::uint64_t tr = 0;
        for (Index idx = 0; idx < q; ++idx) {
            t->trace[idx] = static_cast<std::uint8_t>(tr);
            for (unsigned i = 0; i < m; ++i) {
                tr = (tr + ctx.basis_trace_[i]) % p;
                if (++d[i] < p) break;
                d[i] = 0;  // p increments of one digit contribute p*Tr(x^i) = 0
            }
        }
        for (std::uint64_t e = 0; e < n; ++e) t->trace_by_log[e] = t->trace[t->exp[e]];
        ctx.tables_ = std::move(t);
    }
    return ctx;
}

std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, unsigned m) {
    const auto& table = builtin_table();
    auto it = table.find({p, m});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

std::vector<ModulusEntry> parse_modulus_config(std::istream& in) {
    std::vector<ModulusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream fields(line);
        std::vector<long long> nums;
        std::string tok;
        while (fields >> tok) {
            try {
                std::size_t used = 0;
                nums.push_back(std::stoll(tok, &used));
                if (used != tok.size()) throw std::invalid_argument(tok);
            } catch (const std::exception&) {
                throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": bad token '" + tok + "'");
            }
        }
        if (nums.empty()) continue;
        if (nums.size() < 4 || nums[0] < 2 || nums[1] < 1 ||
            nums.size() != static_cast<std::size_t>(nums[1]) + 3) {
            throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected 'p m c_0 ... c_m'");
        }
        ModulusEntry e{static_cast<std::uint32_t>(nums[0]), static_cast<unsigned>(nums[1]), {}};
        for (std::size_t i = 2; i < nums.size(); ++i) {
            if (nums[i] < 0) throw Error(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": negative coefficient");
            e.coeffs.push_back(static_cast<std::uint32_t>(nums[i]));
        }
        out.push_back(std::move(e));
    }
    return out;
}

std::vector<ModulusEntry> load_modulus_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open modulus file " + path);
    return parse_modulus_config(in);
}

std::vector<std::uint32_t> resolve_modulus(std::uint32_t p, unsigned m,
                                           const std::optional<std::string>& config_path) {
    if (config_path) {
        for (auto& e : load_modulus_config(*config_path)) {
            if (e.p == p && e.m == m) return e.coeffs;
        }
    }
    if (auto b = builtin_modulus(p, m)) return *b;
    throw Error(ErrorCode::InvalidParameters,
                "no primitive polynomial known for p=" + std::to_string(p) + ", m=" + std::to_string(m) +
                    "; supply one with a modulus file");
}

std::string render_poly(std::span<const std::uint32_t> coeffs, char var) {
    std::string out;
    for (std::size_t i = coeffs.size(); i-- > 0;) {
        const auto c = coeffs[i];
        if (c == 0) continue;
        if (!out.empty()) out += " + ";
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) out += std::to_string(c) + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

}  // namespace wdist::gf
