#include <doctest.h>

#include <random>

#include "excomp/series.hpp"
#include "oracles.hpp"

using namespace excomp;

namespace {

Poly random_poly(const Field& f, std::mt19937& rng, std::size_t max_len) {
    std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1);
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::vector<Elem> c(len(rng));
    for (auto& x : c) x = Elem{coef(rng)};
    return Poly(f, std::move(c));
}

TruncatedSeries random_series(const Field& f, std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1);
    std::vector<Elem> c(n);
    for (auto& x : c) x = Elem{coef(rng)};
    return TruncatedSeries(f, std::move(c));
}

BivariatePoly random_bivariate(const Field& f, std::mt19937& rng, std::uint32_t max_deg, std::size_t terms) {
    std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1), deg(0, max_deg);
    BivariatePoly h(f);
    for (std::size_t t = 0; t < terms; ++t) h.add_term(Monomial{deg(rng), deg(rng)}, Elem{coef(rng)});
    return h;
}

TruncatedSeries ones(const Field& f, std::size_t n) { return TruncatedSeries(f, std::vector<Elem>(n, Field::one())); }

std::vector<std::uint32_t> idx(const TruncatedSeries& s) {
    std::vector<std::uint32_t> out;
    for (Elem e : s.coeffs()) out.push_back(e.v);
    return out;
}

} // namespace

TEST_CASE("poly normalization and degree marker") {
    const Field f = Field::make(5);
    const Poly z = Poly::from_indices(f, {0, 0, 0});
    CHECK(z.is_zero());
    CHECK_FALSE(z.degree().has_value());
    const Poly p = Poly::from_indices(f, {1, 2, 0});
    CHECK(p.degree() == 1u);
    CHECK(p.coeffs().size() == 2);
}

TEST_CASE("poly_arith examples") {
    const Field f2 = Field::make(2);
    CHECK(gcd(Poly::from_indices(f2, {1, 0, 1}), Poly::from_indices(f2, {1, 1})) == Poly::from_indices(f2, {1, 1}));

    const Field f7 = Field::make(7);
    CHECK(Poly::from_indices(f7, {1, 6}) * Poly::from_indices(f7, {1, 1}) == Poly::from_indices(f7, {1, 0, 6}));

    const Field f3 = Field::make(3);
    const auto [quot, rem] = divmod(Poly::from_indices(f3, {0, 0, 0, 1}), Poly::from_indices(f3, {2, 1}));
    CHECK(quot == Poly::from_indices(f3, {1, 1, 1}));
    CHECK(rem == Poly::from_indices(f3, {1}));
}

TEST_CASE("poly_arith errors") {
    const Field f3 = Field::make(3);
    CHECK_THROWS_AS(divmod(Poly::from_indices(f3, {1}), Poly(f3)), std::domain_error);
    CHECK_THROWS_AS(Poly::from_indices(f3, {1}) + Poly::from_indices(Field::make(5), {1}), std::invalid_argument);
}

TEST_CASE("divmod and gcd properties on random polynomials") {
    std::mt19937 rng(11);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 200; ++trial) {
            const Poly a = random_poly(f, rng, 8), b = random_poly(f, rng, 5);
            if (b.is_zero()) continue;
            const auto [quot, rem] = divmod(a, b);
            REQUIRE(quot * b + rem == a);
            REQUIRE((rem.is_zero() || *rem.degree() < *b.degree()));
            const Poly g = gcd(a, b);
            REQUIRE(g.leading() == Field::one());
            REQUIRE(divmod(a, g).remainder.is_zero());
            REQUIRE(divmod(b, g).remainder.is_zero());
        }
    }
}

TEST_CASE("series_mul examples") {
    const Field f2 = Field::make(2);
    const auto one_plus_x = TruncatedSeries::from_indices(f2, {1, 1, 0});
    CHECK(idx(series_mul(one_plus_x, one_plus_x, 3)) == std::vector<std::uint32_t>{1, 0, 1});

    const Field f7 = Field::make(7);
    const auto one_minus_x = TruncatedSeries::from_indices(f7, {1, 6, 0, 0, 0});
    CHECK(series_mul(ones(f7, 5), one_minus_x, 5) == TruncatedSeries::one(f7, 5));

    const Field f3 = Field::make(3);
    CHECK(idx(series_mul(ones(f3, 4), ones(f3, 4), 4)) == std::vector<std::uint32_t>{1, 2, 0, 1});

    CHECK_THROWS_AS(series_mul(ones(f3, 3), ones(f3, 4), 4), std::invalid_argument);
}

TEST_CASE("series_mul agrees with integer convolution") {
    std::mt19937 rng(5);
    for (std::uint32_t p : {2u, 5u, 13u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 50; ++trial) {
            const auto a = random_series(f, rng, 12), b = random_series(f, rng, 12);
            REQUIRE(idx(series_mul(a, b, 12)) == oracle::convolve(idx(a), idx(b), 12, p));
        }
    }
}

TEST_CASE("series_pow examples and exponent law") {
    const Field f5 = Field::make(5);
    CHECK(series_pow(TruncatedSeries::from_indices(f5, {3, 1, 4, 1}), 0, 4) == TruncatedSeries::one(f5, 4));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
        const Field f = Field::make(p);
        std::vector<std::uint32_t> expect{1, 2 % p, 3 % p, 4 % p};
        CHECK(idx(series_pow(ones(f, 4), 2, 4)) == expect);
    }
    const auto xg = TruncatedSeries::from_indices(f5, {0, 2, 3, 1, 4});
    CHECK(series_pow(xg, 5, 5).is_zero());

    std::mt19937 rng(7);
    const Field f3 = Field::make(3);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_series(f3, rng, 10);
        const std::uint64_t e1 = rng() % 6, e2 = rng() % 6;
        REQUIRE(series_pow(a, e1 + e2, 10) == series_mul(series_pow(a, e1, 10), series_pow(a, e2, 10), 10));
    }
}

TEST_CASE("rational_expand examples") {
    const Field f2 = Field::make(2);
    CHECK(rational_expand(Poly::from_indices(f2, {1}), Poly::from_indices(f2, {1, 1}), 5) == ones(f2, 5));

    const Field f7 = Field::make(7);
    const Poly one_minus_x = Poly::from_indices(f7, {1, 6});
    const Poly cube = one_minus_x * one_minus_x * one_minus_x;
    std::vector<std::uint32_t> binom;
    for (std::uint32_t i = 0; i < 7; ++i) binom.push_back(oracle::binomial_mod(i + 2, 2, 7));
    CHECK(binom == std::vector<std::uint32_t>{1, 3, 6, 3, 1, 0, 0});
    CHECK(idx(rational_expand(Poly::from_indices(f7, {1}), cube, 7)) == binom);

    CHECK(rational_expand(Poly(f7), Poly::from_indices(f7, {1}), 3).is_zero());
    CHECK_THROWS_AS(rational_expand(Poly::from_indices(f7, {1}), Poly::from_indices(f7, {0, 1}), 3), std::domain_error);
}

TEST_CASE("rational_expand times g reproduces f") {
    std::mt19937 rng(3);
    for (std::uint32_t p : {2u, 3u, 11u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 100; ++trial) {
            const Poly num = random_poly(f, rng, 6);
            Poly den = random_poly(f, rng, 6);
            if (den[0].is_zero()) den = den + Poly::from_indices(f, {1});
            const std::size_t n = 15;
            const auto s = rational_expand(num, den, n);
            REQUIRE(series_mul(s, TruncatedSeries::from_poly(den, n), n) == TruncatedSeries::from_poly(num, n));
        }
    }
}

TEST_CASE("substitute examples") {
    const Field f2 = Field::make(2);
    BivariatePoly h(f2); // y - 1 - x
    h.set({0, 1}, Field::one());
    h.set({0, 0}, Field::one());
    h.set({1, 0}, Field::one());
    CHECK(substitute(h, ones(f2, 2), 2).is_zero());
    CHECK_FALSE(substitute(h, ones(f2, 3), 3).is_zero());

    const Field f5 = Field::make(5);
    BivariatePoly xn(f5);
    xn.set({6, 0}, Elem{3});
    CHECK(substitute(xn, TruncatedSeries::from_indices(f5, {1, 2, 3, 4, 0, 1}), 6).is_zero());

    const Field f3 = Field::make(3);
    BivariatePoly g(f3); // (1 - x) y - 1
    g.set({0, 1}, Field::one());
    g.set({1, 1}, Elem{2});
    g.set({0, 0}, Elem{2});
    CHECK(substitute(g, ones(f3, 5), 5).is_zero());
    CHECK(*g.total_degree() == 2);
    CHECK_FALSE(BivariatePoly(f3).total_degree().has_value());
}

TEST_CASE("substitute is a ring homomorphism in h") {
    std::mt19937 rng(17);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 60; ++trial) {
            const std::size_t n = 9;
            const auto g = random_series(f, rng, n);
            const auto h1 = random_bivariate(f, rng, 4, 5), h2 = random_bivariate(f, rng, 4, 5);
            REQUIRE(substitute(h1 + h2, g, n) == substitute(h1, g, n) + substitute(h2, g, n));
            REQUIRE(substitute(h1 * h2, g, n) == series_mul(substitute(h1, g, n), substitute(h2, g, n), n));
        }
    }
}

TEST_CASE("bivariate terms never store zeros") {
    const Field f3 = Field::make(3);
    BivariatePoly h(f3);
    h.add_term({1, 1}, Elem{1});
    h.add_term({1, 1}, Elem{2});
    CHECK(h.is_zero());
    h.set({2, 0}, Elem{1});
    h.set({2, 0}, Elem{0});
    CHECK(h.terms().empty());
}
