#ifndef EXCOMP_FIELD_HPP
#define EXCOMP_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace excomp {

/// Element of F_q in its canonical index encoding: the polynomial-basis
/// coefficients (a_0, ..., a_{m-1}) packed as sum a_i p^i. Index 0 is the
/// additive identity, index 1 the multiplicative identity.
struct Elem {
    std::uint32_t v = 0;

    constexpr auto operator<=>(const Elem&) const = default;
    constexpr bool is_zero() const noexcept { return v == 0; }
};

/// Largest field order accepted by make_field.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

bool is_prime(std::uint64_t n);

/// Finite field F_q, q = p^m, with elements in polynomial basis modulo a
/// monic irreducible of degree m over F_p.
///
/// Field is a cheap handle: copies share one immutable description, so it
/// can be stored by value in every polynomial and sequence. Two handles
/// compare equal when p, m and the modulus agree.
class Field {
public:
    /// Builds and validates F_{p^m}. `modulus` lists the m+1 coefficients of
    /// a monic polynomial, constant term first; it is ignored (and must be
    /// absent or [0, 1]) for m = 1. When absent and m > 1 the smallest monic
    /// irreducible in lexicographic order of (c_0, ..., c_{m-1}) is chosen.
    ///
    /// Throws std::invalid_argument for a non-prime p, m = 0, a reducible or
    /// malformed modulus, and std::length_error when p^m exceeds the cap.
    static Field make(std::uint32_t p, std::uint32_t m = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    /// F_2. Convenience for tests and defaults.
    Field();

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// m+1 coefficients, constant term first; empty for prime fields.
    const std::vector<std::uint32_t>& modulus() const noexcept;
    bool is_prime_field() const noexcept { return degree() == 1; }

    static constexpr Elem zero() noexcept { return Elem{0}; }
    static constexpr Elem one() noexcept { return Elem{1}; }

    /// Checked conversion from an integer index. Throws std::out_of_range.
    Elem element(std::uint64_t index) const;
    bool contains(Elem a) const noexcept { return a.v < order(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    /// Throws std::domain_error on zero.
    Elem inv(Elem a) const;
    /// Throws std::domain_error when b is zero.
    Elem div(Elem a, Elem b) const;
    Elem pow(Elem a, std::uint64_t e) const noexcept;
    /// a^(p^k).
    Elem frobenius(Elem a, std::uint64_t k) const noexcept;

    /// "F_7", "F_2^3[1,0,1,1]".
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// Monic irreducibility over F_p by trial division against every monic
/// polynomial of degree 1..deg/2. Coefficients constant term first.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint32_t p);

/// Lexicographically smallest monic irreducible of degree m over F_p,
/// ordered by (c_0, ..., c_{m-1}). Returns m+1 coefficients.
std::vector<std::uint32_t> default_modulus(std::uint32_t p, std::uint32_t m);

} // namespace excomp

#endif // EXCOMP_FIELD_HPP
