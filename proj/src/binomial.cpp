#include "excomp/binomial.hpp"

#include <algorithm>
#include <stdexcept>

#include "excomp/expcomp.hpp"

namespace excomp {

BinomialSpec BinomialSpec::make(std::uint32_t p, std::uint32_t k) {
    if (!is_prime(p)) throw std::invalid_argument("binomial: p=" + std::to_string(p) + " is not prime");
    if (k < 1 || k > p - 1)
        throw std::invalid_argument("binomial: k=" + std::to_string(k) + " outside 1.." + std::to_string(p - 1));
    return BinomialSpec{p, k};
}

Sequence generate(const BinomialSpec& spec, std::size_t len) {
    const Field f = Field::make(spec.p);
    const std::uint32_t p = spec.p, k = spec.k;
    std::vector<Elem> period(p, Field::zero());
    period[0] = Field::one();
    for (std::uint32_t i = 0; i + 1 < p - k; ++i)
        period[i + 1] = f.div(f.mul(period[i], f.element((i + k + 1) % p)), f.element(i + 1));

    std::vector<Elem> terms(len);
    for (std::size_t i = 0; i < len; ++i) terms[i] = period[i % p];
    return Sequence(f, std::move(terms), Periodicity{0, p});
}

RationalForm binomial_gf(const BinomialSpec& spec) {
    const Field f = Field::make(spec.p);
    const Poly one_minus_x = Poly(f, {Field::one(), f.neg(Field::one())});
    Poly g = Poly::from_indices(f, {1});
    for (std::uint32_t i = 0; i <= spec.k; ++i) g = g * one_minus_x;
    RationalForm rf{Poly::from_indices(f, {1}), g, 0};

    if (rational_expand(rf.f, rf.g, spec.p).coeffs() != generate(spec, spec.p).terms())
        throw std::logic_error("binomial_gf: expansion disagrees with the generated period");
    return rf;
}

std::size_t LinearPrediction::lower_bound(std::size_t n) const noexcept {
    return std::min({k_plus_1, (n + 1) / 2, p_minus_k});
}

LinearPrediction predicted_linear_complexity(const BinomialSpec& spec) {
    LinearPrediction out;
    out.L = spec.k + 1;
    out.k_plus_1 = spec.k + 1;
    out.p_minus_k = spec.p - spec.k;
    return out;
}

ExpansionPrediction predicted_expansion(const BinomialSpec& spec) {
    const std::uint32_t p = spec.p, k = spec.k;
    ExpansionPrediction out;
    if (static_cast<std::uint64_t>(k + 1) * (k + 2) < p) {
        out.exact = true;
        out.lo = out.hi = k + 2;
        return out;
    }
    const std::uint32_t lower = (p + k + 1) / (k + 2); // ceil(p / (k+2))
    out.lo = lower;
    out.hi = std::max(lower, p % (k + 1));             // (k+1) {p/(k+1)}
    return out;
}

BivariatePoly binomial_witness(const BinomialSpec& spec) {
    const Field f = Field::make(spec.p);
    const std::uint32_t p = spec.p, k = spec.k;
    const std::uint32_t d = std::min(p / (k + 1), (p + k + 1) / (k + 2));
    const Poly one_minus_x = Poly(f, {Field::one(), f.neg(Field::one())});
    Poly power = Poly::from_indices(f, {1});
    for (std::uint32_t i = 0; i < p - d * (k + 1); ++i) power = power * one_minus_x;

    BivariatePoly h = lift(-power);
    h.add_term(Monomial{0, d}, Field::one());
    return h;
}

bool BinomialReport::all_pass() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.pass; });
}

BinomialReport analyze(const BinomialSpec& spec) {
    BinomialReport rep;
    rep.spec = spec;
    const std::size_t p = spec.p;
    const Sequence seq = generate(spec, 2 * p);

    rep.linear = predicted_linear_complexity(spec);
    rep.expansion = predicted_expansion(spec);
    rep.L = berlekamp_massey(seq, 2 * p).L;
    rep.linear_profile = linear_profile(seq, 2 * p);
    const ExpansionWitness w = expansion_complexity(seq, p);
    rep.e_p = w.e;

    rep.claims.push_back({"P1.L", "L=" + std::to_string(rep.L) + " predicted " + std::to_string(rep.linear.L),
                          rep.L == rep.linear.L});

    std::size_t first_bad = 0;
    for (std::size_t n = 1; n <= 2 * p && first_bad == 0; ++n)
        if (rep.linear_profile[n - 1] < rep.linear.lower_bound(n)) first_bad = n;
    rep.claims.push_back({"P1.profile",
                          first_bad == 0 ? "L_N >= min{k+1, ceil(N/2), p-k} for N <= 2p"
                                         : "bound fails at N=" + std::to_string(first_bad),
                          first_bad == 0});

    const RationalForm rf = binomial_gf(spec);
    const TruncatedSeries prod = series_mul(TruncatedSeries::from_poly(rf.g, p), seq.generating_series(p), p);
    rep.claims.push_back({"L2.identity", "(1-x)^(k+1) G = 1 mod x^p",
                          prod == TruncatedSeries::one(seq.field(), p)});

    const std::string range = rep.expansion.exact
                                  ? "exact " + std::to_string(rep.expansion.lo)
                                  : "[" + std::to_string(rep.expansion.lo) + ", " + std::to_string(rep.expansion.hi) + "]";
    rep.claims.push_back({rep.expansion.exact ? "T3.exact" : "T3.interval",
                          "E_p=" + std::to_string(rep.e_p) + " predicted " + range, rep.expansion.admits(rep.e_p)});

    const BivariatePoly h = binomial_witness(spec);
    rep.claims.push_back({"T3.witness", "h = " + h.to_string() + " vanishes mod x^p",
                          substitute(h, seq.generating_series(p), p).is_zero()});

    const bool kernel_ok = w.h && substitute(*w.h, seq.generating_series(p), p).is_zero() &&
                           w.h->total_degree() == w.e;
    rep.claims.push_back({"E.witness", "kernel witness re-validated by substitution", kernel_ok});
    return rep;
}

} // namespace excomp
