#include "excomp/report.hpp"

#include <sstream>

namespace excomp {

using nlohmann::json;

json field_json(const Field& f) {
    return json{{"p", f.characteristic()}, {"m", f.degree()}, {"q", f.order()}, {"modulus", f.modulus()}};
}

json bound_json(const BoundReport& r) {
    json j{{"claim", r.claim},
           {"inputs", r.inputs},
           {"outcome", to_string(r.outcome)}};
    if (r.outcome == Outcome::NotApplicable) {
        j["note"] = r.note;
    } else {
        j["relation"] = to_string(r.relation);
        j["expected"] = r.expected;
        j["observed"] = r.observed;
    }
    return j;
}

json bounds_json(const std::vector<BoundReport>& reports) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(bound_json(r));
    return arr;
}

json witness_json(const BivariatePoly& h) {
    json arr = json::array();
    for (const auto& [mono, c] : h.terms()) arr.push_back({mono.x, mono.y, c.v});
    return arr;
}

BivariatePoly witness_from_json(const Field& f, const json& j) {
    if (!j.is_array()) throw std::invalid_argument("witness: expected an array of [i, j, coeff]");
    BivariatePoly h(f);
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 3) throw std::invalid_argument("witness: malformed monomial");
        h.add_term(Monomial{term[0].get<std::uint32_t>(), term[1].get<std::uint32_t>()},
                   f.element(term[2].get<std::uint64_t>()));
    }
    return h;
}

json fit_json(const LinearFit& fit) {
    std::vector<std::uint32_t> c;
    for (Elem e : fit.coeffs) c.push_back(e.v);
    return json{{"N", fit.n}, {"L_N", fit.L}, {"t_N", fit.tn}, {"coeffs", c}};
}

namespace {

json histogram(const std::map<std::uint32_t, std::uint64_t>& counts) {
    json arr = json::array();
    for (const auto& [v, c] : counts) arr.push_back({v, c});
    return arr;
}

json prefixes_json(const std::vector<std::vector<std::uint32_t>>& prefixes) {
    json arr = json::array();
    for (const auto& p : prefixes) arr.push_back(p);
    return arr;
}

} // namespace

json distribution_json(const DistributionRecord& d) {
    json low = json::array();
    for (const auto& lf : d.low_fractions())
        low.push_back({{"epsilon", std::to_string(lf.eps.num) + "/" + std::to_string(lf.eps.den)},
                       {"count", lf.count},
                       {"fraction", lf.fraction}});
    return json{{"N", d.n},
                {"total", d.total},
                {"E_counts", histogram(d.e_counts)},
                {"L_counts", histogram(d.l_counts)},
                {"t_N_counts", histogram(d.tn_counts)},
                {"E_over_sqrtN_mean", d.mean_ratio()},
                {"E_over_sqrtN_median", d.median_ratio()},
                {"E_over_sqrtN_min", d.min_ratio()},
                {"low_E_fractions", low}};
}

json exhaustive_json(const ExhaustiveResult& r) {
    return json{{"distribution", distribution_json(r.dist)},
                {"checks", r.checks},
                {"violations", r.violations},
                {"violations_by_claim", r.violations_by_claim},
                {"violating_prefixes", prefixes_json(r.violating_prefixes)}};
}

json monte_carlo_json(const MonteCarloResult& r) {
    json per = json::array();
    for (const auto& d : r.per_n) per.push_back(distribution_json(d));
    return json{{"per_N", per}, {"kernel_bound_violations", r.kernel_bound_violations}};
}

json low_count_json(const LowExpansionCount& c) {
    json j{{"N", c.n},
           {"b", c.b},
           {"count", c.count},
           {"bound_log2", c.bound_log2},
           {"ratio", c.ratio},
           {"within_bound", c.within_bound},
           {"exploratory", true}};
    j["bound"] = c.bound ? json(*c.bound) : json(nullptr);
    return j;
}

json ambiguity_json(const AmbiguityScan& s) {
    return json{{"N", s.n},
                {"prefixes", s.prefixes},
                {"not_applicable", s.not_applicable},
                {"unique_t_N", s.unique_tn},
                {"ambiguous_t_N", s.ambiguous_tn},
                {"unique_when_N_ge_2L", s.unique_when_n_ge_2l},
                {"ambiguous_when_N_ge_2L", s.ambiguous_when_n_ge_2l},
                {"T4_holds_for_all", s.holds_for_all},
                {"T4_holds_for_some", s.holds_for_some},
                {"T4_holds_for_none", s.holds_for_none},
                {"T4_holds_for_canonical", s.holds_for_canonical},
                {"exceptions", prefixes_json(s.exceptions)}};
}

json binomial_json(const BinomialReport& r) {
    json claims = json::array();
    for (const auto& c : r.claims) claims.push_back({{"id", c.id}, {"detail", c.detail}, {"pass", c.pass}});
    return json{{"p", r.spec.p},
                {"k", r.spec.k},
                {"L", r.L},
                {"L_profile", r.linear_profile},
                {"E_p", r.e_p},
                {"predicted_L", r.linear.L},
                {"predicted_E", {{"exact", r.expansion.exact}, {"lo", r.expansion.lo}, {"hi", r.expansion.hi}}},
                {"claims", claims},
                {"all_pass", r.all_pass()}};
}

std::string distribution_csv(const DistributionRecord& d) {
    std::ostringstream os;
    os << "value,count\n";
    for (const auto& [v, c] : d.e_counts) os << v << "," << c << "\n";
    return os.str();
}

} // namespace excomp
