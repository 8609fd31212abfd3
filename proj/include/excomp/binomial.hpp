#ifndef EXCOMP_BINOMIAL_HPP
#define EXCOMP_BINOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "excomp/lincomp.hpp"

namespace excomp {

/// The p-periodic sequence a_i = C(i+k, k) mod p, 1 <= k <= p-1.
struct BinomialSpec {
    std::uint32_t p = 3;
    std::uint32_t k = 1;

    /// Throws std::invalid_argument for non-prime p or k outside [1, p-1].
    static BinomialSpec make(std::uint32_t p, std::uint32_t k);
};

/// First `len` terms, one period built by the telescoping product
/// a_{i+1} = a_i (i+k+1)/(i+1) and zero on indices p-k..p-1, then repeated.
/// Declared periodicity (t = 0, T = p).
Sequence generate(const BinomialSpec& spec, std::size_t len);

/// 1 / (1-x)^{k+1}.
RationalForm binomial_gf(const BinomialSpec& spec);

struct LinearPrediction {
    std::size_t L = 0;
    /// min{k+1, ceil(N/2), p-k}
    std::size_t lower_bound(std::size_t n) const noexcept;

    std::size_t k_plus_1 = 0;
    std::size_t p_minus_k = 0;
};

LinearPrediction predicted_linear_complexity(const BinomialSpec& spec);

struct ExpansionPrediction {
    bool exact = false;
    std::uint32_t lo = 0;
    std::uint32_t hi = 0;

    bool admits(std::uint32_t e) const noexcept { return lo <= e && e <= hi; }
};

/// Exact k+2 when (k+1)(k+2) < p, otherwise the interval
/// [ceil(p/(k+2)), max{ceil(p/(k+2)), p mod (k+1)}].
ExpansionPrediction predicted_expansion(const BinomialSpec& spec);

/// h = y^d - (1-x)^{p - d(k+1)} with d = min{floor(p/(k+1)), ceil(p/(k+2))}.
BivariatePoly binomial_witness(const BinomialSpec& spec);

struct Claim {
    std::string id;
    std::string detail;
    bool pass = false;
};

struct BinomialReport {
    BinomialSpec spec;
    std::size_t L = 0;                        // BM over 2p terms
    std::vector<std::size_t> linear_profile;  // N = 1..2p
    std::uint32_t e_p = 0;                    // kernel search at N = p
    LinearPrediction linear;
    ExpansionPrediction expansion;
    std::vector<Claim> claims;

    bool all_pass() const noexcept;
};

BinomialReport analyze(const BinomialSpec& spec);

} // namespace excomp

#endif // EXCOMP_BINOMIAL_HPP
