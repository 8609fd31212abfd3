#ifndef EXCOMP_SERIES_HPP
#define EXCOMP_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "excomp/field.hpp"

namespace excomp {

/// Dense univariate polynomial over a field, constant term first, with no
/// trailing zeros. The zero polynomial has no coefficients and no degree.
class Poly {
public:
    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> coeffs);
    /// Coefficients given as element indices; convenient in tests.
    static Poly from_indices(const Field& field, std::initializer_list<std::uint64_t> indices);
    static Poly monomial(const Field& field, std::size_t exponent, Elem coeff = Field::one());

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept;
    /// Coefficient of x^i, zero past the end.
    Elem operator[](std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : Field::zero(); }
    Elem leading() const noexcept { return coeffs_.empty() ? Field::zero() : coeffs_.back(); }
    Elem eval(Elem x) const noexcept;

    std::string to_string() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    void normalize() noexcept;

    Field field_;
    std::vector<Elem> coeffs_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator-(const Poly& a);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, Elem c);

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

/// a = quotient * b + remainder with deg remainder < deg b.
/// Throws std::domain_error when b is zero.
PolyDivision divmod(const Poly& a, const Poly& b);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
Poly gcd(const Poly& a, const Poly& b);
/// Scales a nonzero polynomial to leading coefficient 1.
Poly monic(const Poly& a);

/// Exactly N coefficients of a formal power series, those of x^0..x^{N-1}.
/// Trailing zeros are kept: the truncation order is part of the value.
class TruncatedSeries {
public:
    TruncatedSeries(Field field, std::vector<Elem> coeffs);
    static TruncatedSeries zero(const Field& field, std::size_t order);
    static TruncatedSeries one(const Field& field, std::size_t order);
    /// First `order` coefficients of a polynomial.
    static TruncatedSeries from_poly(const Poly& p, std::size_t order);
    static TruncatedSeries from_indices(const Field& field, std::initializer_list<std::uint64_t> indices);

    const Field& field() const noexcept { return field_; }
    std::size_t order() const noexcept { return coeffs_.size(); }
    const std::vector<Elem>& coeffs() const noexcept { return coeffs_; }
    Elem operator[](std::size_t i) const noexcept { return coeffs_[i]; }
    bool is_zero() const noexcept;
    /// Index of the first nonzero coefficient, nullopt when all are zero.
    std::optional<std::size_t> valuation() const noexcept;
    /// The first n coefficients; throws std::invalid_argument if n > order.
    TruncatedSeries truncate(std::size_t n) const;

    friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) noexcept {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

private:
    Field field_;
    std::vector<Elem> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);

/// a * b mod x^N by schoolbook convolution. Both operands must have
/// order >= N (std::invalid_argument otherwise).
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n);
/// a^e mod x^N by square-and-multiply; e = 0 gives 1.
TruncatedSeries series_pow(const TruncatedSeries& a, std::uint64_t e, std::size_t n);
/// The unique S with g * S = f mod x^N, by forward substitution.
/// Requires g(0) != 0 (std::domain_error otherwise).
TruncatedSeries rational_expand(const Poly& f, const Poly& g, std::size_t n);

/// Exponent pair (i, j) of the monomial x^i y^j.
struct Monomial {
    std::uint32_t x = 0;
    std::uint32_t y = 0;

    std::uint32_t total_degree() const noexcept { return x + y; }
    auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial h(x, y); only nonzero coefficients stored.
class BivariatePoly {
public:
    using Terms = std::map<Monomial, Elem>;

    explicit BivariatePoly(Field field) : field_(std::move(field)) {}

    const Field& field() const noexcept { return field_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    /// Max of i + j over the stored terms; nullopt for the zero polynomial.
    std::optional<std::uint32_t> total_degree() const noexcept;
    /// max j, nullopt for zero.
    std::optional<std::uint32_t> y_degree() const noexcept;
    Elem coeff(Monomial mono) const noexcept;

    /// Adds c x^i y^j to the polynomial, dropping the term if it cancels.
    BivariatePoly& add_term(Monomial mono, Elem c);
    void set(Monomial mono, Elem c);

    std::string to_string() const;

    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) noexcept {
        return a.field_ == b.field_ && a.terms_ == b.terms_;
    }

private:
    Field field_;
    Terms terms_;
};

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b);
/// g(x) * y^j as a bivariate polynomial.
BivariatePoly lift(const Poly& g, std::uint32_t y_power = 0);

/// h(x, G(x)) mod x^N, summing coeff(i, j) x^i G(x)^j. G must have order
/// >= N. This is the independent checker for expansion witnesses.
TruncatedSeries substitute(const BivariatePoly& h, const TruncatedSeries& g, std::size_t n);

} // namespace excomp

#endif // EXCOMP_SERIES_HPP
