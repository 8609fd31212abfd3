#include "excomp/theorems.hpp"

#include <algorithm>
#include <stdexcept>

#include "excomp/expcomp.hpp"

namespace excomp {

const char* to_string(Relation r) noexcept {
    switch (r) {
    case Relation::AtMost: return "at_most";
    case Relation::AtLeast: return "at_least";
    case Relation::Equal: return "equal";
    case Relation::Between: return "between";
    case Relation::OneOf: return "one_of";
    }
    return "?";
}

const char* to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Fail: return "fail";
    case Outcome::NotApplicable: return "not_applicable";
    }
    return "?";
}

std::optional<bool> BoundReport::evaluate() const {
    if (outcome == Outcome::NotApplicable) return std::nullopt;
    switch (relation) {
    case Relation::AtMost: return observed <= expected.at(0);
    case Relation::AtLeast: return observed >= expected.at(0);
    case Relation::Equal: return observed == expected.at(0);
    case Relation::Between: return expected.at(0) <= observed && observed <= expected.at(1);
    case Relation::OneOf: return std::find(expected.begin(), expected.end(), observed) != expected.end();
    }
    return false;
}

BoundReport make_report(std::string claim, std::map<std::string, std::int64_t> inputs, Relation rel,
                        std::vector<std::int64_t> expected, std::int64_t observed) {
    BoundReport r{std::move(claim), std::move(inputs), rel, std::move(expected), observed, Outcome::Pass, {}};
    r.outcome = *r.evaluate() ? Outcome::Pass : Outcome::Fail;
    return r;
}

BoundReport not_applicable(std::string claim, std::map<std::string, std::int64_t> inputs, std::string why) {
    BoundReport r;
    r.claim = std::move(claim);
    r.inputs = std::move(inputs);
    r.outcome = Outcome::NotApplicable;
    r.note = std::move(why);
    return r;
}

std::int64_t periodic_lower_bound(std::int64_t L, std::int64_t t, std::int64_t n) {
    const std::int64_t m = std::min<std::int64_t>(1, t - 1);
    const std::int64_t denom = L - m;
    if (denom <= 0) throw std::invalid_argument("lower bound: L - min{1, t-1} must be positive");
    if (n > (L - t) * denom) return L - t + 1;
    return (n + denom - 1) / denom;
}

std::int64_t periodic_upper_bound(std::int64_t L, std::int64_t t) { return L + std::max<std::int64_t>(-1, 1 - t); }

std::vector<BoundReport> check_theorem1(std::size_t L, std::size_t t, std::size_t n, std::uint32_t e) {
    if (L == 0) throw std::invalid_argument("theorem1: generating function is zero");
    const auto Li = static_cast<std::int64_t>(L), ti = static_cast<std::int64_t>(t), ni = static_cast<std::int64_t>(n);
    std::map<std::string, std::int64_t> in{{"L", Li}, {"t", ti}, {"N", ni}, {"E_N", e}};
    return {make_report("T1.lower", in, Relation::AtLeast, {periodic_lower_bound(Li, ti, ni)}, e),
            make_report("T1.upper", in, Relation::AtMost, {periodic_upper_bound(Li, ti)}, e)};
}

BoundReport check_theorem1_remark(std::size_t L, std::size_t t, std::size_t n, std::uint32_t e) {
    const auto Li = static_cast<std::int64_t>(L), ti = static_cast<std::int64_t>(t), ni = static_cast<std::int64_t>(n);
    std::map<std::string, std::int64_t> in{{"L", Li}, {"t", ti}, {"N", ni}, {"E_N", e}};
    if (L == 0) return not_applicable("T1.remark", in, "zero generating function");
    if (t > 2) return not_applicable("T1.remark", in, "preperiod above 2");
    if (ni <= (Li - ti) * (Li - ti + 1)) return not_applicable("T1.remark", in, "N <= (L-t)(L-t+1)");
    return make_report("T1.remark", in, Relation::Equal, {Li - ti + 1}, e);
}

std::vector<BoundReport> check_theorem4(std::size_t L, std::size_t tn, std::size_t n, std::uint32_t e) {
    if (L == 0) throw std::invalid_argument("theorem4: prefix is zero");
    if (n < 2) throw std::invalid_argument("theorem4: N must be at least 2");
    const auto Li = static_cast<std::int64_t>(L), ti = static_cast<std::int64_t>(tn), ni = static_cast<std::int64_t>(n);
    std::map<std::string, std::int64_t> in{{"L_N", Li}, {"t_N", ti}, {"N", ni}, {"E_N", e}};
    const std::int64_t upper = std::min(periodic_upper_bound(Li, ti), ni - Li + 2);
    return {make_report("T4.lower", in, Relation::AtLeast, {periodic_lower_bound(Li, ti, ni)}, e),
            make_report("T4.upper", in, Relation::AtMost, {upper}, e)};
}

std::vector<BoundReport> check_growth(const std::vector<std::size_t>& profile_l,
                                      const std::vector<std::uint32_t>& profile_e) {
    if (profile_l.size() != profile_e.size()) throw std::invalid_argument("check_growth: profiles differ in length");
    std::vector<BoundReport> out;
    for (std::size_t i = 0; i + 1 < profile_e.size(); ++i) {
        const auto n = static_cast<std::int64_t>(i + 1);
        const std::int64_t e = profile_e[i], e_next = profile_e[i + 1];
        auto p2 = make_report("P2", {{"N", n}, {"E_N", e}, {"E_N+1", e_next}}, Relation::Between,
                              {e, std::max<std::int64_t>(e, 1) + 1}, e_next);
        if (e == 0) p2.note = "zero prefix: least annihilator is y, upper step taken from degree 1";
        out.push_back(std::move(p2));

        const auto l = static_cast<std::int64_t>(profile_l[i]), l_next = static_cast<std::int64_t>(profile_l[i + 1]);
        std::map<std::string, std::int64_t> in{{"N", n}, {"L_N", l}, {"L_N+1", l_next}};
        if (2 * l > n)
            out.push_back(make_report("L3", in, Relation::Equal, {l}, l_next));
        else
            out.push_back(make_report("L3", in, Relation::OneOf, {l, n + 1 - l}, l_next));
    }
    return out;
}

std::vector<BoundReport> check_misc_upper(const std::vector<std::uint32_t>& profile_e, std::uint32_t p,
                                          std::optional<std::size_t> valuation) {
    const std::size_t n = profile_e.size();
    if (n < 2) throw std::invalid_argument("check_misc_upper: N must be at least 2");
    const auto ni = static_cast<std::int64_t>(n);
    const std::int64_t e = profile_e[n - 1];
    std::vector<BoundReport> out;

    const std::int64_t simple = std::min((ni + 3) / 2, ni - 1);
    out.push_back(make_report("R.simple", {{"N", ni}, {"E_N", e}}, Relation::AtMost, {simple}, e));
    out.push_back(make_report("R.kernel", {{"N", ni}, {"E_N", e}}, Relation::AtMost,
                              {static_cast<std::int64_t>(kernel_degree_bound(n))}, e));
    out.push_back(make_report("R.frobenius",
                              {{"N", ni}, {"E_N", e}, {"p", p}, {"k", frobenius_exponent(p, n)}},
                              Relation::AtMost, {static_cast<std::int64_t>(frobenius_bound(p, n))}, e));

    for (std::size_t n1 = 1; 2 * n1 <= n; ++n1) {
        const std::size_t n2 = n - n1;
        std::map<std::string, std::int64_t> in{{"N", ni},
                                               {"N1", static_cast<std::int64_t>(n1)},
                                               {"N2", static_cast<std::int64_t>(n2)},
                                               {"E_N", e},
                                               {"E_N1", profile_e[n1 - 1]},
                                               {"E_N2", profile_e[n2 - 1]}};
        if (!valuation || *valuation >= n1) {
            out.push_back(not_applicable("R.subadd", std::move(in), "G = 0 mod x^min(N1,N2)"));
            continue;
        }
        const std::int64_t bound = static_cast<std::int64_t>(profile_e[n1 - 1]) + profile_e[n2 - 1];
        out.push_back(make_report("R.subadd", std::move(in), Relation::AtMost, {bound}, e));
    }
    return out;
}

std::vector<BoundReport> verify_prefix(const Sequence& seq, std::size_t n) {
    if (n == 0 || n > seq.size())
        throw std::invalid_argument("verify: N=" + std::to_string(n) + " outside 1.." + std::to_string(seq.size()));
    const auto profile_l = linear_profile(seq, n);
    const auto profile_e = expansion_profile(seq, n);
    const std::uint32_t e = profile_e.back();
    const bool zero = seq.zero_prefix(n);

    std::vector<BoundReport> out = check_growth(profile_l, profile_e);

    const auto ni = static_cast<std::int64_t>(n);
    if (n < 2)
        out.push_back(not_applicable("T4", {{"N", ni}}, "N < 2"));
    else if (zero)
        out.push_back(not_applicable("T4", {{"N", ni}}, "G = 0 mod x^N"));
    else {
        const LinearFit fit = berlekamp_massey(seq, n);
        for (auto& r : check_theorem4(fit.L, fit.tn, n, e)) out.push_back(std::move(r));
    }

    if (n >= 2) {
        std::optional<std::size_t> val;
        for (std::size_t i = 0; i < n && !val; ++i)
            if (!seq[i].is_zero()) val = i;
        for (auto& r : check_misc_upper(profile_e, seq.field().characteristic(), val)) out.push_back(std::move(r));
    }

    if (const auto& meta = seq.meta()) {
        // linear complexity is at most t + T, so 2(t + T) terms pin it down
        const std::size_t span = 2 * (meta->preperiod + meta->period);
        if (seq.size() < meta->preperiod + meta->period) {
            out.push_back(not_applicable("T1", {{"N", ni}}, "fewer known terms than t + T"));
        } else {
            const Sequence full = seq.extended(std::max(span, seq.size()));
            const LinearFit fit = berlekamp_massey(full, full.size());
            if (fit.L == 0) {
                out.push_back(not_applicable("T1", {{"N", ni}}, "zero generating function"));
            } else {
                const RationalForm rf = rational_form(fit, full);
                for (auto& r : check_theorem1(fit.L, rf.t, n, e)) out.push_back(std::move(r));
                out.push_back(check_theorem1_remark(fit.L, rf.t, n, e));
            }
        }
    }
    return out;
}

std::size_t count_failures(const std::vector<BoundReport>& reports) noexcept {
    return static_cast<std::size_t>(
        std::count_if(reports.begin(), reports.end(), [](const BoundReport& r) { return r.outcome == Outcome::Fail; }));
}

} // namespace excomp
