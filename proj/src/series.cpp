#include "excomp/series.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace excomp {

namespace {

void require_same_field(const Field& a, const Field& b, const char* op) {
    if (!(a == b)) throw std::invalid_argument(std::string(op) + ": operands over different fields");
}

} // namespace

// ---------------------------------------------------------------- Poly

Poly::Poly(Field field, std::vector<Elem> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (!field_.contains(c)) throw std::out_of_range("poly: coefficient not in field");
    normalize();
}

Poly Poly::from_indices(const Field& field, std::initializer_list<std::uint64_t> indices) {
    std::vector<Elem> c;
    c.reserve(indices.size());
    for (auto i : indices) c.push_back(field.element(i));
    return Poly(field, std::move(c));
}

Poly Poly::monomial(const Field& field, std::size_t exponent, Elem coeff) {
    std::vector<Elem> c(exponent + 1, Field::zero());
    c[exponent] = coeff;
    return Poly(field, std::move(c));
}

void Poly::normalize() noexcept {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

std::optional<std::size_t> Poly::degree() const noexcept {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.size() - 1;
}

Elem Poly::eval(Elem x) const noexcept {
    Elem acc = Field::zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), coeffs_[i]);
    return acc;
}

std::string Poly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || coeffs_[i] != Field::one()) os << coeffs_[i].v;
        if (i > 0) os << (coeffs_[i] != Field::one() ? "*x" : "x");
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

Poly operator+(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly add");
    const Field& f = a.field();
    std::vector<Elem> out(std::max(a.coeffs().size(), b.coeffs().size()));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = f.add(a[i], b[i]);
    return Poly(f, std::move(out));
}

Poly operator-(const Poly& a) {
    std::vector<Elem> out = a.coeffs();
    for (Elem& c : out) c = a.field().neg(c);
    return Poly(a.field(), std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly mul");
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return Poly(f);
    std::vector<Elem> out(a.coeffs().size() + b.coeffs().size() - 1);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j)
            out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return Poly(f, std::move(out));
}

Poly scale(const Poly& a, Elem c) {
    std::vector<Elem> out = a.coeffs();
    for (Elem& x : out) x = a.field().mul(x, c);
    return Poly(a.field(), std::move(out));
}

PolyDivision divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field(), "poly divmod");
    if (b.is_zero()) throw std::domain_error("poly divmod: division by the zero polynomial");
    const Field& f = a.field();
    std::vector<Elem> rem = a.coeffs();
    const std::size_t db = *b.degree();
    if (rem.size() <= db) return {Poly(f), a};
    std::vector<Elem> quot(rem.size() - db);
    const Elem lead_inv = f.inv(b.leading());
    for (std::size_t k = rem.size(); k-- > db;) {
        const Elem factor = f.mul(rem[k], lead_inv);
        quot[k - db] = factor;
        if (factor.is_zero()) continue;
        for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = f.sub(rem[k - db + i], f.mul(factor, b[i]));
    }
    rem.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly monic(const Poly& a) {
    if (a.is_zero()) return a;
    return scale(a, a.field().inv(a.leading()));
}

Poly gcd(const Poly& a, const Poly& b) {
    Poly x = a, y = b;
    while (!y.is_zero()) {
        Poly r = divmod(x, y).remainder;
        x = std::move(y);
        y = std::move(r);
    }
    return monic(x);
}

// ---------------------------------------------------------------- series

TruncatedSeries::TruncatedSeries(Field field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (Elem c : coeffs_)
        if (!field_.contains(c)) throw std::out_of_range("series: coefficient not in field");
}

TruncatedSeries TruncatedSeries::zero(const Field& field, std::size_t order) {
    return TruncatedSeries(field, std::vector<Elem>(order));
}

TruncatedSeries TruncatedSeries::one(const Field& field, std::size_t order) {
    std::vector<Elem> c(order);
    if (order > 0) c[0] = Field::one();
    return TruncatedSeries(field, std::move(c));
}

TruncatedSeries TruncatedSeries::from_poly(const Poly& p, std::size_t order) {
    std::vector<Elem> c(order);
    for (std::size_t i = 0; i < order; ++i) c[i] = p[i];
    return TruncatedSeries(p.field(), std::move(c));
}

TruncatedSeries TruncatedSeries::from_indices(const Field& field, std::initializer_list<std::uint64_t> indices) {
    std::vector<Elem> c;
    for (auto i : indices) c.push_back(field.element(i));
    return TruncatedSeries(field, std::move(c));
}

bool TruncatedSeries::is_zero() const noexcept {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c.is_zero(); });
}

std::optional<std::size_t> TruncatedSeries::valuation() const noexcept {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return i;
    return std::nullopt;
}

TruncatedSeries TruncatedSeries::truncate(std::size_t n) const {
    if (n > order()) throw std::invalid_argument("series: truncation order exceeds available order");
    return TruncatedSeries(field_, std::vector<Elem>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(n)));
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_field(a.field(), b.field(), "series add");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.field().add(a[i], b[i]);
    return TruncatedSeries(a.field(), std::move(out));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_field(a.field(), b.field(), "series sub");
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = a.field().sub(a[i], b[i]);
    return TruncatedSeries(a.field(), std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b, std::size_t n) {
    require_same_field(a.field(), b.field(), "series mul");
    if (a.order() < n || b.order() < n)
        throw std::invalid_argument("series mul: operand truncation order below " + std::to_string(n));
    const Field& f = a.field();
    std::vector<Elem> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
    }
    return TruncatedSeries(f, std::move(out));
}

TruncatedSeries series_pow(const TruncatedSeries& a, std::uint64_t e, std::size_t n) {
    if (a.order() < n) throw std::invalid_argument("series pow: operand truncation order below " + std::to_string(n));
    TruncatedSeries result = TruncatedSeries::one(a.field(), n);
    TruncatedSeries base = a.truncate(n);
    while (e > 0) {
        if (e & 1u) result = series_mul(result, base, n);
        e >>= 1;
        if (e > 0) base = series_mul(base, base, n);
    }
    return result;
}

TruncatedSeries rational_expand(const Poly& f, const Poly& g, std::size_t n) {
    require_same_field(f.field(), g.field(), "rational expand");
    if (g[0].is_zero()) throw std::domain_error("rational expand: denominator has g(0) = 0");
    const Field& fld = f.field();
    const Elem g0_inv = fld.inv(g[0]);
    const std::size_t gsize = g.coeffs().size();
    std::vector<Elem> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        // g0 s_i = f_i - sum_{k>=1} g_k s_{i-k}
        Elem acc = f[i];
        for (std::size_t k = 1; k < gsize && k <= i; ++k) acc = fld.sub(acc, fld.mul(g[k], s[i - k]));
        s[i] = fld.mul(acc, g0_inv);
    }
    return TruncatedSeries(fld, std::move(s));
}

// ---------------------------------------------------------------- bivariate

std::optional<std::uint32_t> BivariatePoly::total_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.total_degree());
    return d;
}

std::optional<std::uint32_t> BivariatePoly::y_degree() const noexcept {
    if (terms_.empty()) return std::nullopt;
    std::uint32_t d = 0;
    for (const auto& [mono, c] : terms_) d = std::max(d, mono.y);
    return d;
}

Elem BivariatePoly::coeff(Monomial mono) const noexcept {
    auto it = terms_.find(mono);
    return it == terms_.end() ? Field::zero() : it->second;
}

BivariatePoly& BivariatePoly::add_term(Monomial mono, Elem c) {
    if (!field_.contains(c)) throw std::out_of_range("bivariate: coefficient not in field");
    set(mono, field_.add(coeff(mono), c));
    return *this;
}

void BivariatePoly::set(Monomial mono, Elem c) {
    if (!field_.contains(c)) throw std::out_of_range("bivariate: coefficient not in field");
    if (c.is_zero())
        terms_.erase(mono);
    else
        terms_[mono] = c;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mono, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        const bool bare = mono.x == 0 && mono.y == 0;
        if (bare || c != Field::one()) os << c.v;
        auto var = [&](char name, std::uint32_t e) {
            if (e == 0) return;
            if (!bare && (c != Field::one() || (name == 'y' && mono.x > 0))) os << "*";
            os << name;
            if (e > 1) os << "^" << e;
        };
        var('x', mono.x);
        var('y', mono.y);
    }
    return os.str();
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    require_same_field(a.field(), b.field(), "bivariate add");
    BivariatePoly out = a;
    for (const auto& [mono, c] : b.terms()) out.add_term(mono, c);
    return out;
}

BivariatePoly operator*(const BivariatePoly& a, const BivariatePoly& b) {
    require_same_field(a.field(), b.field(), "bivariate mul");
    BivariatePoly out(a.field());
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms())
            out.add_term(Monomial{ma.x + mb.x, ma.y + mb.y}, a.field().mul(ca, cb));
    return out;
}

BivariatePoly lift(const Poly& g, std::uint32_t y_power) {
    BivariatePoly out(g.field());
    for (std::size_t i = 0; i < g.coeffs().size(); ++i)
        out.set(Monomial{static_cast<std::uint32_t>(i), y_power}, g[i]);
    return out;
}

TruncatedSeries substitute(const BivariatePoly& h, const TruncatedSeries& g, std::size_t n) {
    require_same_field(h.field(), g.field(), "substitute");
    if (g.order() < n) throw std::invalid_argument("substitute: series order below " + std::to_string(n));
    const Field& f = h.field();
    std::vector<Elem> out(n);
    if (h.is_zero()) return TruncatedSeries(f, std::move(out));

    // powers G^0..G^maxj by repeated truncated products
    const std::uint32_t maxj = *h.y_degree();
    std::vector<TruncatedSeries> powers;
    powers.reserve(maxj + 1);
    powers.push_back(TruncatedSeries::one(f, n));
    const TruncatedSeries base = g.truncate(n);
    for (std::uint32_t j = 1; j <= maxj; ++j) powers.push_back(series_mul(powers.back(), base, n));

    for (const auto& [mono, c] : h.terms()) {
        const TruncatedSeries& pw = powers[mono.y];
        for (std::size_t k = 0; mono.x + k < n; ++k)
            out[mono.x + k] = f.add(out[mono.x + k], f.mul(c, pw[k]));
    }
    return TruncatedSeries(f, std::move(out));
}

} // namespace excomp
