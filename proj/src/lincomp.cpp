#include "excomp/lincomp.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace excomp {

// ---------------------------------------------------------------- Sequence

Sequence::Sequence(Field field, std::vector<Elem> terms, std::optional<Periodicity> meta)
    : field_(std::move(field)), terms_(std::move(terms)), meta_(meta) {
    for (Elem s : terms_)
        if (!field_.contains(s)) throw std::out_of_range("sequence: term not in field");
    if (meta_) {
        if (meta_->period == 0) throw std::invalid_argument("sequence: period must be at least 1");
        const std::size_t t = meta_->preperiod, T = meta_->period;
        for (std::size_t i = t; i + T < terms_.size(); ++i)
            if (terms_[i + T] != terms_[i])
                throw std::invalid_argument("sequence: terms contradict declared preperiod " + std::to_string(t) +
                                            " and period " + std::to_string(T) + " at index " +
                                            std::to_string(i + T));
    }
}

Sequence Sequence::from_indices(const Field& field, std::initializer_list<std::uint64_t> indices,
                                std::optional<Periodicity> meta) {
    std::vector<Elem> terms;
    for (auto i : indices) terms.push_back(field.element(i));
    return Sequence(field, std::move(terms), meta);
}

Elem Sequence::term(std::size_t i) const {
    if (i < terms_.size()) return terms_[i];
    if (meta_ && terms_.size() >= meta_->preperiod + meta_->period) {
        const std::size_t t = meta_->preperiod, T = meta_->period;
        return terms_[t + (i - t) % T];
    }
    throw std::out_of_range("sequence: term " + std::to_string(i) + " is not determined by the known prefix");
}

Sequence Sequence::extended(std::size_t length) const {
    std::vector<Elem> out;
    out.reserve(length);
    for (std::size_t i = 0; i < length; ++i) out.push_back(term(i));
    return Sequence(field_, std::move(out), meta_);
}

Sequence Sequence::prefix(std::size_t n) const {
    if (n > terms_.size()) throw std::invalid_argument("sequence: prefix longer than known terms");
    return Sequence(field_, std::vector<Elem>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)), meta_);
}

bool Sequence::zero_prefix(std::size_t n) const noexcept {
    n = std::min(n, terms_.size());
    return std::all_of(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n),
                       [](Elem s) { return s.is_zero(); });
}

TruncatedSeries Sequence::generating_series(std::size_t n) const {
    if (n > terms_.size()) throw std::invalid_argument("sequence: series order exceeds known terms");
    return TruncatedSeries(field_, std::vector<Elem>(terms_.begin(), terms_.begin() + static_cast<std::ptrdiff_t>(n)));
}

// ---------------------------------------------------------------- fits

Poly LinearFit::connection(const Field& field) const {
    std::vector<Elem> c(L + 1);
    c[0] = Field::one();
    for (std::size_t l = 0; l < L; ++l) c[L - l] = coeffs[l];
    return Poly(field, std::move(c));
}

LfsrSynthesizer::LfsrSynthesizer(Field field) : field_(std::move(field)), conn_{Field::one()}, prev_{Field::one()} {}

void LfsrSynthesizer::push(Elem s) {
    const Field& f = field_;
    const std::size_t n = seen_.size();
    seen_.push_back(s);

    Elem disc = s;
    for (std::size_t i = 1; i <= L_ && i < conn_.size(); ++i) disc = f.add(disc, f.mul(conn_[i], seen_[n - i]));
    if (disc.is_zero()) {
        ++shift_;
        return;
    }

    // C <- C - (d/b) x^shift B
    const Elem factor = f.div(disc, prev_disc_);
    std::vector<Elem> next = conn_;
    if (next.size() < prev_.size() + shift_) next.resize(prev_.size() + shift_, Field::zero());
    for (std::size_t i = 0; i < prev_.size(); ++i) next[i + shift_] = f.sub(next[i + shift_], f.mul(factor, prev_[i]));
    while (next.size() > 1 && next.back().is_zero()) next.pop_back();

    if (2 * L_ <= n) {
        L_ = n + 1 - L_;
        prev_ = std::move(conn_);
        prev_disc_ = disc;
        shift_ = 1;
    } else {
        ++shift_;
    }
    conn_ = std::move(next);
}

LinearFit LfsrSynthesizer::fit() const {
    LinearFit out;
    out.n = seen_.size();
    out.L = L_;
    out.coeffs.assign(L_, Field::zero());
    if (out.degenerate()) {
        // no constraint rows: the all-zero recurrence is the canonical choice
        out.tn = L_;
        return out;
    }
    for (std::size_t l = 0; l < L_; ++l) {
        const std::size_t idx = L_ - l;
        if (idx < conn_.size()) out.coeffs[l] = conn_[idx];
    }
    out.tn = L_ - (conn_.size() - 1);
    return out;
}

LinearFit berlekamp_massey(const Field& field, std::span<const Elem> terms) {
    LfsrSynthesizer synth(field);
    for (Elem s : terms) synth.push(s);
    return synth.fit();
}

LinearFit berlekamp_massey(const Sequence& seq, std::size_t n) {
    if (n > seq.size())
        throw std::invalid_argument("berlekamp_massey: N=" + std::to_string(n) + " exceeds prefix length " +
                                    std::to_string(seq.size()));
    return berlekamp_massey(seq.field(), std::span<const Elem>(seq.terms().data(), n));
}

std::vector<std::size_t> linear_profile(const Sequence& seq, std::size_t nmax) {
    if (nmax > seq.size())
        throw std::invalid_argument("linear_profile: N=" + std::to_string(nmax) + " exceeds prefix length " +
                                    std::to_string(seq.size()));
    LfsrSynthesizer synth(seq.field());
    std::vector<std::size_t> out;
    out.reserve(nmax);
    for (std::size_t i = 0; i < nmax; ++i) {
        synth.push(seq[i]);
        out.push_back(synth.complexity());
    }
    return out;
}

namespace {

bool recurrence_holds(const Field& f, std::span<const Elem> terms, std::span<const Elem> coeffs) {
    const std::size_t L = coeffs.size();
    for (std::size_t i = 0; i + L < terms.size(); ++i) {
        Elem acc = terms[i + L];
        for (std::size_t l = 0; l < L; ++l) acc = f.add(acc, f.mul(coeffs[l], terms[i + l]));
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace

bool annihilates(const LinearFit& fit, const Sequence& seq) {
    if (fit.n > seq.size() || fit.coeffs.size() != fit.L || fit.L > fit.n) return false;
    return recurrence_holds(seq.field(), std::span<const Elem>(seq.terms().data(), fit.n), fit.coeffs);
}

std::vector<std::vector<Elem>> all_recurrences(const Field& field, std::span<const Elem> terms, std::size_t L) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < L; ++i) {
        count *= field.order();
        if (count > kMaxFieldOrder) throw std::length_error("all_recurrences: q^L exceeds enumeration cap 2^20");
    }
    std::vector<std::vector<Elem>> out;
    std::vector<Elem> c(L, Field::zero());
    for (std::uint64_t k = 0; k < count; ++k) {
        std::uint64_t code = k;
        for (std::size_t l = 0; l < L; ++l) {
            c[l] = Elem{static_cast<std::uint32_t>(code % field.order())};
            code /= field.order();
        }
        if (recurrence_holds(field, terms, c)) out.push_back(c);
    }
    return out;
}

// ---------------------------------------------------------------- rational form

std::size_t preperiod_from_rational(const RationalForm& rf) {
    if (rf.f.is_zero()) return 0;
    const std::size_t df = *rf.f.degree();
    const std::size_t dg = rf.g.degree() ? *rf.g.degree() : 0;
    return df + 1 > dg ? df + 1 - dg : 0;
}

RationalForm rational_form(const LinearFit& fit, const Sequence& seq) {
    const Field& field = seq.field();
    if (fit.n > seq.size() || !annihilates(fit, seq))
        throw std::invalid_argument("rational_form: fit does not annihilate the sequence prefix");

    Poly g = fit.connection(field);
    const TruncatedSeries gs = series_mul(TruncatedSeries::from_poly(g, fit.L), seq.generating_series(fit.L), fit.L);
    Poly f(field, gs.coeffs());
    RationalForm rf{f, g, fit.tn};

    // the recurrence has to describe every known term, not just the fitted ones
    if (rational_expand(rf.f, rf.g, seq.size()).coeffs() != seq.terms())
        throw std::invalid_argument("rational_form: fit is not consistent with all " + std::to_string(seq.size()) +
                                    " known terms");
    if (!seq.zero_prefix(seq.size()) && gcd(rf.f, rf.g) != Poly::from_indices(field, {1}))
        throw std::invalid_argument("rational_form: numerator and denominator share a factor; fit is not minimal");
    if (preperiod_from_rational(rf) != rf.t)
        throw std::invalid_argument("rational_form: recurrence offset does not match the preperiod of f/g");
    return rf;
}

Sequence extend_by_recurrence(const Sequence& seq, const LinearFit& fit, std::size_t target_len) {
    if (fit.n > seq.size()) throw std::invalid_argument("extend_by_recurrence: fit longer than the sequence");
    if (target_len < fit.n) throw std::invalid_argument("extend_by_recurrence: target shorter than the fitted prefix");
    if (fit.degenerate())
        throw std::invalid_argument("extend_by_recurrence: fit has no constraint rows (L = N); extension undefined");

    const Field& f = seq.field();
    std::vector<Elem> u(seq.terms().begin(), seq.terms().begin() + static_cast<std::ptrdiff_t>(fit.n));
    u.resize(target_len, Field::zero());
    if (fit.L == 0) return Sequence(f, std::move(u));
    for (std::size_t k = fit.n; k < target_len; ++k) {
        const std::size_t i = k - fit.L;
        Elem acc = Field::zero();
        for (std::size_t l = fit.tn; l < fit.L; ++l) acc = f.sub(acc, f.mul(fit.coeffs[l], u[i + l]));
        u[k] = acc;
    }
    return Sequence(f, std::move(u));
}

} // namespace excomp
