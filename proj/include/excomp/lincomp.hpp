#ifndef EXCOMP_LINCOMP_HPP
#define EXCOMP_LINCOMP_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "excomp/field.hpp"
#include "excomp/series.hpp"

namespace excomp {

/// Declared ultimate periodicity: s_{i+t+T} = s_{i+t} for all i >= 0.
struct Periodicity {
    std::size_t preperiod = 0; // t
    std::size_t period = 1;    // T

    friend bool operator==(const Periodicity&, const Periodicity&) = default;
};

/// Known prefix of a sequence over a field, optionally declared ultimately
/// periodic. A declared sequence with at least t + T known terms determines
/// every later term, see term().
class Sequence {
public:
    /// Throws std::out_of_range for terms outside the field and
    /// std::invalid_argument when the declared periodicity contradicts the
    /// terms or has T = 0.
    Sequence(Field field, std::vector<Elem> terms, std::optional<Periodicity> meta = std::nullopt);
    static Sequence from_indices(const Field& field, std::initializer_list<std::uint64_t> indices,
                                 std::optional<Periodicity> meta = std::nullopt);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    const std::optional<Periodicity>& meta() const noexcept { return meta_; }
    Elem operator[](std::size_t i) const noexcept { return terms_[i]; }

    /// Term i, using the declared periodicity past the known prefix.
    /// Throws std::out_of_range when it is not determined.
    Elem term(std::size_t i) const;
    /// The first `length` terms, continued periodically when declared.
    Sequence extended(std::size_t length) const;
    /// First n terms as a sequence (meta kept).
    Sequence prefix(std::size_t n) const;
    /// True when the first n terms are all zero.
    bool zero_prefix(std::size_t n) const noexcept;
    /// First n terms as the truncated generating function G(x) mod x^n.
    TruncatedSeries generating_series(std::size_t n) const;

private:
    Field field_;
    std::vector<Elem> terms_;
    std::optional<Periodicity> meta_;
};

/// Shortest linear recurrence for a prefix, in the orientation
///   s_{i+L} + sum_{l<L} c_l s_{i+l} = 0,   0 <= i <= N-L-1.
struct LinearFit {
    std::size_t n = 0;         // prefix length analyzed
    std::size_t L = 0;         // N-th linear complexity
    std::vector<Elem> coeffs;  // c_0..c_{L-1}; c_L = 1 implicit
    std::size_t tn = 0;        // least l with c_l != 0, L when none

    /// Connection polynomial C(x) = 1 + c_{L-1} x + ... + c_0 x^L.
    Poly connection(const Field& field) const;
    /// L == N with a nonempty prefix: no constraint rows at all.
    bool degenerate() const noexcept { return L == n && L > 0; }
};

/// Incremental Berlekamp-Massey synthesizer. Copyable, so enumeration code
/// can branch a state per appended term.
class LfsrSynthesizer {
public:
    explicit LfsrSynthesizer(Field field);

    void push(Elem s);
    std::size_t length() const noexcept { return seen_.size(); }
    std::size_t complexity() const noexcept { return L_; }
    /// Fit for all terms pushed so far.
    LinearFit fit() const;

private:
    Field field_;
    std::vector<Elem> seen_;
    std::vector<Elem> conn_;  // C(x), C(0) = 1
    std::vector<Elem> prev_;  // B(x)
    std::size_t L_ = 0;
    std::size_t shift_ = 1;   // n - m since the last length change
    Elem prev_disc_ = Field::one();
};

/// Throws std::invalid_argument when n exceeds the prefix length.
LinearFit berlekamp_massey(const Sequence& seq, std::size_t n);
LinearFit berlekamp_massey(const Field& field, std::span<const Elem> terms);
/// L_1..L_{nmax}.
std::vector<std::size_t> linear_profile(const Sequence& seq, std::size_t nmax);

/// True when the fit's recurrence annihilates seq's first fit.n terms.
bool annihilates(const LinearFit& fit, const Sequence& seq);

/// G(x) = f(x) / g(x) with g(0) = 1, deg f < L, deg g = L - t, gcd(f, g) = 1.
struct RationalForm {
    Poly f;
    Poly g;
    std::size_t t = 0;

    std::size_t L() const noexcept { return (g.degree() ? *g.degree() : 0) + t; }
};

/// Builds g from the recurrence and f as the first L coefficients of g G.
/// Requires a fit that holds for every available term of seq (checked by
/// re-expansion; std::invalid_argument otherwise).
RationalForm rational_form(const LinearFit& fit, const Sequence& seq);
/// max(0, deg f - deg g + 1); zero for f = 0.
std::size_t preperiod_from_rational(const RationalForm& rf);

/// Continues the first fit.n terms with the recurrence up to target_len.
/// Throws std::invalid_argument for a degenerate fit.
Sequence extend_by_recurrence(const Sequence& seq, const LinearFit& fit, std::size_t target_len);

/// Every c_0..c_{L-1} (enumerated over the whole field) for which the
/// length-L recurrence fits the prefix. Small exhaustive cases only.
std::vector<std::vector<Elem>> all_recurrences(const Field& field, std::span<const Elem> terms, std::size_t L);

} // namespace excomp

#endif // EXCOMP_LINCOMP_HPP
