#ifndef EXCOMP_REPORT_HPP
#define EXCOMP_REPORT_HPP

#include <string>

#include <json.hpp>

#include "excomp/binomial.hpp"
#include "excomp/expcomp.hpp"
#include "excomp/experiments.hpp"
#include "excomp/theorems.hpp"

namespace excomp {

// Machine-readable forms of the result types. Objects serialize with
// sorted keys; every count and bound is an exact integer, and the only
// floating-point members are ratios, fractions, p-values and timing, whose
// key names say so.

nlohmann::json field_json(const Field& f);
nlohmann::json bound_json(const BoundReport& r);
nlohmann::json bounds_json(const std::vector<BoundReport>& reports);
/// Monomial list [[i, j, coeffIndex], ...] in monomial order.
nlohmann::json witness_json(const BivariatePoly& h);
nlohmann::json fit_json(const LinearFit& fit);
nlohmann::json distribution_json(const DistributionRecord& d);
nlohmann::json exhaustive_json(const ExhaustiveResult& r);
nlohmann::json monte_carlo_json(const MonteCarloResult& r);
nlohmann::json low_count_json(const LowExpansionCount& c);
nlohmann::json ambiguity_json(const AmbiguityScan& s);
nlohmann::json binomial_json(const BinomialReport& r);

/// "value,count" rows of the E_N histogram, ascending by value.
std::string distribution_csv(const DistributionRecord& d);

/// Rebuilds a witness from its monomial list; throws std::invalid_argument.
BivariatePoly witness_from_json(const Field& f, const nlohmann::json& j);

} // namespace excomp

#endif // EXCOMP_REPORT_HPP
