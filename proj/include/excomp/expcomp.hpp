#ifndef EXCOMP_EXPCOMP_HPP
#define EXCOMP_EXPCOMP_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "excomp/lincomp.hpp"
#include "excomp/series.hpp"

namespace excomp {

/// E_N together with a nonzero h of total degree E_N and h(x, G(x)) = 0
/// mod x^N. No witness exactly when the prefix is all zero (E_N = 0).
struct ExpansionWitness {
    std::size_t n = 0;
    std::uint32_t e = 0;
    std::optional<BivariatePoly> h;
    // diagnostics of the decisive degree-E system (N rows, M_E columns)
    std::size_t matrix_rank = 0;
    std::size_t monomial_count = 0;
};

/// Number of monomials x^i y^j with i + j <= d.
constexpr std::size_t monomial_count(std::uint32_t d) noexcept {
    return static_cast<std::size_t>(d + 1) * (d + 2) / 2;
}

/// min{d : (d+1)(d+2)/2 > N}: more columns than rows forces a kernel.
std::uint32_t kernel_degree_bound(std::size_t n) noexcept;

/// Monomials of total degree <= d in the fixed column order (i+j, j, i).
std::vector<Monomial> monomials_up_to(std::uint32_t d);

/// E_N and a minimal witness by null-space search on the coefficient
/// vectors of x^i G(x)^j mod x^N, taken in monomial order. The first
/// column that depends on earlier ones fixes E_N; the witness is that
/// dependency scaled so its first nonzero coefficient is 1.
ExpansionWitness expansion_complexity(const Field& field, std::span<const Elem> prefix);
/// Throws std::invalid_argument unless 1 <= n <= seq.size().
ExpansionWitness expansion_complexity(const Sequence& seq, std::size_t n);

/// E_1..E_{nmax}; throws std::logic_error if growth
/// E_N <= E_{N+1} <= max(E_N, 1) + 1 fails, which would mean a solver defect.
/// The max covers the step out of an all-zero prefix, where E_N = 0 by
/// convention while the least annihilator is y.
std::vector<std::uint32_t> expansion_profile(const Sequence& seq, std::size_t nmax);

/// Largest q^{M_d} the brute-force oracle accepts.
inline constexpr std::uint64_t kBruteForceCap = 1u << 20;

/// Oracle: enumerates every nonzero h of total degree <= d_max and tests it
/// by substitution. Returns nullopt when nothing of degree <= d_max
/// annihilates the prefix. Throws std::length_error past the cap.
std::optional<ExpansionWitness> brute_force_expansion(const Sequence& seq, std::size_t n, std::uint32_t d_max);

/// h = y - sum_{i<N} s_i x^i, giving E_N <= N - 1 for nonconstant prefixes.
BivariatePoly truncation_witness(const Sequence& seq, std::size_t n);

/// Exponent k with p^k <= N-1 < p^{k+1}; N >= 2.
std::uint32_t frobenius_exponent(std::uint32_t p, std::size_t n);
/// floor((N-1)/p^k) p^k.
std::size_t frobenius_bound(std::uint32_t p, std::size_t n);
/// h = y^{p^k} - sum_{i <= (N-1)/p^k} s_i^{p^k} x^{i p^k}. The coefficients
/// are Frobenius images of s_i, which matters only over non-prime fields.
BivariatePoly frobenius_witness(const Sequence& seq, std::size_t n);

} // namespace excomp

#endif // EXCOMP_EXPCOMP_HPP
