#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace wdist::gf {

/// Packed element index: the polynomial-basis coordinates read as base-p digits,
/// constant coordinate least significant. Zero is index 0 and every prime-field
/// constant c has index c.
using Index = std::uint64_t;

/// Largest field order accepted by build_field.
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 40;

/// Fields up to this order get discrete-log, power and trace tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 24;

class FieldElem {
public:
    constexpr FieldElem() = default;
    static constexpr FieldElem from_index(Index index) {
        FieldElem e;
        e.index_ = index;
        return e;
    }

    constexpr Index index() const { return index_; }
    constexpr bool is_zero() const { return index_ == 0; }

    friend constexpr auto operator<=>(FieldElem, FieldElem) = default;

private:
    Index index_ = 0;
};

class FieldCtx {
public:
    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    /// q = p^m.
    std::uint64_t order() const { return q_; }
    /// n = p^m - 1, the order of the multiplicative group.
    std::uint64_t group_order() const { return q_ - 1; }
    /// Monic modulus, constant term first.
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    bool has_tables() const { return tables_ != nullptr; }

    FieldElem zero() const { return {}; }
    FieldElem one() const { return FieldElem::from_index(1); }
    /// The primitive element: the class of x.
    FieldElem pi() const { return pi_; }
    /// pi^((p^m-1)/(p-1)), a generator of the prime field's multiplicative group.
    FieldElem u_p() const { return u_p_; }
    /// Embeds c mod p into the field.
    FieldElem constant(std::int64_t c) const;

    std::vector<std::uint32_t> coeffs(FieldElem x) const;
    FieldElem from_coeffs(std::span<const std::uint32_t> coeffs) const;
    bool contains(FieldElem x) const { return x.index() < q_; }

    FieldElem add(FieldElem a, FieldElem b) const;
    FieldElem sub(FieldElem a, FieldElem b) const;
    FieldElem neg(FieldElem a) const;
    FieldElem mul(FieldElem a, FieldElem b) const;
    /// a^e; for nonzero a the exponent is reduced mod p^m - 1, so negative e is fine.
    FieldElem pow(FieldElem a, std::int64_t e) const;
    FieldElem inv(FieldElem a) const;
    /// x^(p^j).
    FieldElem frobenius(FieldElem x, unsigned j) const;

    /// pi^e with e reduced mod p^m - 1.
    FieldElem exp(std::uint64_t e) const;
    /// Discrete log base pi. Throws DivisionByZero for 0.
    std::uint64_t log(FieldElem x) const;

    /// Tr_1^m(x) in [0, p).
    std::uint32_t trace(FieldElem x) const;
    /// Tr_1^m(pi^e); the hot-path form used by all enumerations.
    std::uint32_t trace_of_power(std::uint64_t e) const {
        return tables_ ? tables_->trace_by_log[e % (q_ - 1)] : trace(exp(e));
    }
    /// Tr_l^m(x) for l | m; the result lies in the subfield of order p^l.
    FieldElem trace_intermediate(FieldElem x, unsigned l) const;
    /// 0 for x = 0, +1 for nonzero squares, -1 otherwise.
    int quad_character(FieldElem x) const;

private:
    friend FieldCtx build_field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

    struct Tables {
        std::vector<std::uint32_t> exp;           // log -> index
        std::vector<std::uint32_t> log;           // index -> log (slot 0 unused)
        std::vector<std::uint8_t> trace;          // index -> Tr
        std::vector<std::uint8_t> trace_by_log;   // log -> Tr(pi^log)
    };

    using Digits = std::vector<std::uint32_t>;
    Digits unpack(Index i) const;
    Index pack(const Digits& d) const;
    FieldElem poly_mul(FieldElem a, FieldElem b) const;
    FieldElem poly_pow(FieldElem a, std::uint64_t e) const;
    std::uint32_t trace_slow(FieldElem x) const;

    std::uint32_t p_ = 0;
    unsigned m_ = 0;
    std::uint64_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> basis_trace_;  // Tr(x^i), i < m
    FieldElem pi_;
    FieldElem u_p_;
    std::shared_ptr<const Tables> tables_;
};

/// Validates (p, m, modulus) and builds the field with pi = class of x.
/// Errors: NotPrime, InvalidParameters (malformed modulus), NotIrreducible,
/// NotPrimitive, TooLarge.
FieldCtx build_field(std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

/// Built-in primitive polynomial for p in {3, 5, 7}, m <= 8.
std::optional<std::vector<std::uint32_t>> builtin_modulus(std::uint32_t p, unsigned m);

struct ModulusEntry {
    std::uint32_t p;
    unsigned m;
    std::vector<std::uint32_t> coeffs;
};

/// Parses "p m c_0 ... c_m" lines; '#' starts a comment.
std::vector<ModulusEntry> parse_modulus_config(std::istream& in);
std::vector<ModulusEntry> load_modulus_config(const std::string& path);

/// Picks the modulus from the config file when it has an entry for (p, m),
/// otherwise the built-in table. Throws InvalidParameters when neither has one.
std::vector<std::uint32_t> resolve_modulus(std::uint32_t p, unsigned m,
                                           const std::optional<std::string>& config_path);

/// "x^2 + 2*x + 2" style rendering of a coefficient list (constant first).
std::string render_poly(std::span<const std::uint32_t> coeffs, char var = 'x');

}  // namespace wdist::gf
