#ifndef EXCOMP_EXPERIMENTS_HPP
#define EXCOMP_EXPERIMENTS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excomp/field.hpp"

namespace excomp {

enum class ExperimentMode { Exhaustive, MonteCarlo };

/// Largest number of prefixes an exhaustive run may visit.
inline constexpr std::uint64_t kExhaustiveCap = 1u << 20;

inline const std::vector<std::size_t> kDefaultSchedule{16, 25, 36, 49, 64};

struct ExperimentConfig {
    Field field;
    ExperimentMode mode = ExperimentMode::Exhaustive;
    std::size_t n = 8;                    // exhaustive prefix length
    std::vector<std::size_t> schedule = kDefaultSchedule; // montecarlo lengths
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    bool tn_scan = false;
    unsigned workers = 1;

    /// Throws std::length_error when q^N exceeds the exhaustive cap and
    /// std::invalid_argument for an unusable Monte Carlo setup.
    void validate() const;
};

/// Exact fractions eps = num/den used for the sqrt((1-eps)N) thresholds.
struct Epsilon {
    std::uint32_t num;
    std::uint32_t den;
};
inline const std::vector<Epsilon> kEpsilons{{1, 4}, {1, 2}};

struct LowFraction {
    Epsilon eps;
    std::uint64_t count = 0;  // #{E_N < sqrt((1-eps) N)}
    double fraction = 0.0;
};

/// Value histograms for one prefix length. Merging is a per-key sum, so
/// records from any partition of the work combine to the same result.
struct DistributionRecord {
    std::size_t n = 0;
    std::uint64_t total = 0;
    std::map<std::uint32_t, std::uint64_t> e_counts;
    std::map<std::uint32_t, std::uint64_t> l_counts;
    std::map<std::uint32_t, std::uint64_t> tn_counts;

    void merge(const DistributionRecord& other);

    // statistics of E_N / sqrt(N)
    double mean_ratio() const;
    /// Lower median.
    double median_ratio() const;
    double min_ratio() const;
    std::vector<LowFraction> low_fractions() const;
};

struct ExhaustiveResult {
    DistributionRecord dist;
    std::uint64_t checks = 0;
    std::uint64_t violations = 0;
    std::map<std::string, std::uint64_t> violations_by_claim;
    /// Up to a handful of failing prefixes, as element indices.
    std::vector<std::vector<std::uint32_t>> violating_prefixes;
};

/// Every q^N prefix in lexicographic order: L_N, t_N (canonical
/// Berlekamp-Massey), E_N and all theorem checkers on the profiles.
ExhaustiveResult enumerate_all(const ExperimentConfig& cfg);

/// E_N histogram only, without checkers.
DistributionRecord enumerate_distribution(const ExperimentConfig& cfg);

struct LowExpansionCount {
    std::size_t n = 0;
    std::uint32_t b = 0;
    std::uint64_t count = 0;             // #{prefixes with E_N <= b}
    std::optional<std::uint64_t> bound;  // q^{b^2} when it fits in 64 bits
    double bound_log2 = 0.0;
    double ratio = 0.0;                  // count / q^{b^2}
    bool within_bound = false;
};

/// Exploratory comparison of #{E_N <= b} against q^{b^2}; nothing asserted.
LowExpansionCount count_low_expansion(const ExperimentConfig& cfg, std::uint32_t b);
LowExpansionCount count_low_expansion(const DistributionRecord& dist, std::uint32_t q, std::uint32_t b);

struct MonteCarloResult {
    std::vector<DistributionRecord> per_n;  // in schedule order
    std::uint64_t kernel_bound_violations = 0;
};

/// Uniform random sequences; term i of sample j is a deterministic function
/// of (seed, j, i), so results do not depend on the worker count.
MonteCarloResult monte_carlo(const ExperimentConfig& cfg);
/// The first `len` terms of Monte Carlo sample j.
std::vector<Elem> sample_sequence(const Field& field, std::uint64_t seed, std::uint64_t index, std::size_t len);

struct AmbiguityScan {
    std::size_t n = 0;
    std::uint64_t prefixes = 0;
    std::uint64_t not_applicable = 0;      // zero prefixes
    std::uint64_t unique_tn = 0;           // one attainable t_N
    std::uint64_t ambiguous_tn = 0;
    std::uint64_t unique_when_n_ge_2l = 0; // prefixes with N >= 2 L_N
    std::uint64_t ambiguous_when_n_ge_2l = 0;
    std::uint64_t holds_for_all = 0;       // T4 bounds under every shortest recurrence
    std::uint64_t holds_for_some = 0;      // under some but not all
    std::uint64_t holds_for_none = 0;
    std::uint64_t holds_for_canonical = 0;
    /// Prefixes where some choice of recurrence breaks the bounds.
    std::vector<std::vector<std::uint32_t>> exceptions;
};

/// For q^(2N) <= 2^20: enumerates all shortest recurrences of each prefix,
/// the attainable t_N values, and re-checks both T4 bounds per choice.
AmbiguityScan tn_ambiguity_scan(const ExperimentConfig& cfg);

struct ChiSquareResult {
    double statistic = 0.0;
    std::size_t dof = 0;
    double p_value = 1.0;
    std::size_t bins = 0;
};

/// Pearson goodness of fit of observed counts against reference counts
/// (rescaled to the observed total). Adjacent values are pooled until every
/// bin expects at least 5 observations.
ChiSquareResult chi_square_test(const std::map<std::uint32_t, std::uint64_t>& observed,
                                const std::map<std::uint32_t, std::uint64_t>& reference);

} // namespace excomp

#endif // EXCOMP_EXPERIMENTS_HPP
