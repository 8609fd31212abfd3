#ifndef EXCOMP_THEOREMS_HPP
#define EXCOMP_THEOREMS_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "excomp/lincomp.hpp"

namespace excomp {

enum class Relation {
    AtMost,   // observed <= expected[0]
    AtLeast,  // observed >= expected[0]
    Equal,    // observed == expected[0]
    Between,  // expected[0] <= observed <= expected[1]
    OneOf,    // observed in expected
};

enum class Outcome { Pass, Fail, NotApplicable };

const char* to_string(Relation r) noexcept;
const char* to_string(Outcome o) noexcept;

/// One checked inequality or equality. The outcome is a function of the
/// stored relation, expected values and observation only; evaluate()
/// recomputes it, so a report can be audited without the inputs that
/// produced it.
struct BoundReport {
    std::string claim;  // T1.lower, T1.upper, T1.remark, P2, L3, T4.lower, ...
    std::map<std::string, std::int64_t> inputs;
    Relation relation = Relation::AtMost;
    std::vector<std::int64_t> expected;
    std::int64_t observed = 0;
    Outcome outcome = Outcome::NotApplicable;
    std::string note;   // reason for NotApplicable, or how the bound was adapted

    /// Relation applied to the stored numbers; nullopt for NotApplicable.
    std::optional<bool> evaluate() const;
};

BoundReport make_report(std::string claim, std::map<std::string, std::int64_t> inputs, Relation rel,
                        std::vector<std::int64_t> expected, std::int64_t observed);
BoundReport not_applicable(std::string claim, std::map<std::string, std::int64_t> inputs, std::string why);

/// Lower bound shared by the periodic and the aperiodic theorem: with
/// m = min{1, t-1}, L-t+1 when N > (L-t)(L-m), else ceil(N/(L-m)).
std::int64_t periodic_lower_bound(std::int64_t L, std::int64_t t, std::int64_t n);
/// L + max{-1, 1-t}.
std::int64_t periodic_upper_bound(std::int64_t L, std::int64_t t);

// All checkers take values computed elsewhere; none of them recomputes
// E_N or L_N, so a solver bug cannot cancel out inside a check.

/// Ultimately periodic sequence with linear complexity L, preperiod t and
/// G != 0. Returns {T1.lower, T1.upper}; throws std::invalid_argument for L = 0.
std::vector<BoundReport> check_theorem1(std::size_t L, std::size_t t, std::size_t n, std::uint32_t e);
/// E_N = L-t+1 when t <= 2 and N > (L-t)(L-t+1); NotApplicable otherwise.
BoundReport check_theorem1_remark(std::size_t L, std::size_t t, std::size_t n, std::uint32_t e);
/// {T4.lower, T4.upper} from (L_N, t_N) of a nonzero prefix, N >= 2.
/// Throws std::invalid_argument when the prefix is zero (L_N = 0) or N < 2.
std::vector<BoundReport> check_theorem4(std::size_t L, std::size_t tn, std::size_t n, std::uint32_t e);
/// Per-N growth laws: P2 on consecutive E values and L3 on consecutive L
/// values. profile_l[i] and profile_e[i] belong to N = i+1.
std::vector<BoundReport> check_growth(const std::vector<std::size_t>& profile_l,
                                      const std::vector<std::uint32_t>& profile_e);
/// For N = profile_e.size() >= 2: R.simple (min{floor((N+3)/2), N-1}),
/// R.kernel, R.frobenius (characteristic p) and one R.subadd per split
/// N = N1 + N2, N1 <= N2, whose shorter part has a nonzero prefix.
/// `valuation` is the index of the first nonzero term (nullopt when the
/// prefix is zero).
std::vector<BoundReport> check_misc_upper(const std::vector<std::uint32_t>& profile_e, std::uint32_t p,
                                          std::optional<std::size_t> valuation);

/// Runs every applicable checker on the first n terms: growth over the
/// profiles up to n, T4 and the upper-bound remarks at n, plus T1 and its
/// remark when the sequence declares its periodicity.
std::vector<BoundReport> verify_prefix(const Sequence& seq, std::size_t n);

std::size_t count_failures(const std::vector<BoundReport>& reports) noexcept;

} // namespace excomp

#endif // EXCOMP_THEOREMS_HPP
