#include <doctest.h>

#include "excomp/binomial.hpp"
#include "excomp/expcomp.hpp"
#include "oracles.hpp"

using namespace excomp;

namespace {

std::vector<std::uint32_t> idx(const Sequence& s) {
    std::vector<std::uint32_t> out;
    for (Elem e : s.terms()) out.push_back(e.v);
    return out;
}

const std::uint32_t kPrimes[] = {2, 3, 5, 7, 11, 13};

} // namespace

TEST_CASE("binomial spec validation") {
    CHECK_THROWS_AS(BinomialSpec::make(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(BinomialSpec::make(7, 0), std::invalid_argument);
    CHECK_THROWS_AS(BinomialSpec::make(7, 7), std::invalid_argument);
    CHECK_NOTHROW(BinomialSpec::make(2, 1));
}

TEST_CASE("generate examples") {
    CHECK(idx(generate(BinomialSpec::make(7, 2), 7)) == std::vector<std::uint32_t>{1, 3, 6, 3, 1, 0, 0});
    CHECK(idx(generate(BinomialSpec::make(5, 4), 5)) == std::vector<std::uint32_t>{1, 0, 0, 0, 0});
}

TEST_CASE("generated terms match Pascal's triangle and vanish at the end of each period") {
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t k = 1; k < p; ++k) {
            const Sequence s = generate(BinomialSpec::make(p, k), 3 * p);
            REQUIRE(s.meta() == Periodicity{0, p});
            for (std::size_t i = 0; i < s.size(); ++i) {
                const std::uint32_t r = static_cast<std::uint32_t>(i % p);
                REQUIRE(s[i].v == oracle::binomial_mod(r + k, k, p));
                if (r >= p - k) REQUIRE(s[i].is_zero());
            }
        }
}

TEST_CASE("binomial_gf examples") {
    const Field f7 = Field::make(7);
    const RationalForm rf = binomial_gf(BinomialSpec::make(7, 2));
    const Poly one_minus_x = Poly::from_indices(f7, {1, 6});
    CHECK(rf.f == Poly::from_indices(f7, {1}));
    CHECK(rf.g == one_minus_x * one_minus_x * one_minus_x);
    CHECK(rf.t == 0);

    const RationalForm r5 = binomial_gf(BinomialSpec::make(5, 1));
    CHECK(rational_expand(r5.f, r5.g, 5) == TruncatedSeries::from_indices(Field::make(5), {1, 2, 3, 4, 0}));

    // k = p-1: (1-x)^p = 1 - x^p
    const Field f5 = Field::make(5);
    const RationalForm full = binomial_gf(BinomialSpec::make(5, 4));
    CHECK(full.g == Poly::from_indices(f5, {1, 0, 0, 0, 0, 4}));
    CHECK(rational_expand(full.f, full.g, 10) ==
          TruncatedSeries::from_indices(f5, {1, 0, 0, 0, 0, 1, 0, 0, 0, 0}));
}

TEST_CASE("generating function identity against generated terms") {
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t k = 1; k < p; ++k) {
            const BinomialSpec spec = BinomialSpec::make(p, k);
            const RationalForm rf = binomial_gf(spec);
            const Sequence s = generate(spec, 2 * p);
            REQUIRE(series_mul(TruncatedSeries::from_poly(rf.g, 2 * p), s.generating_series(2 * p), 2 * p) ==
                    TruncatedSeries::one(s.field(), 2 * p));
        }
}

TEST_CASE("predicted_linear_complexity examples") {
    CHECK(predicted_linear_complexity(BinomialSpec::make(7, 2)).L == 3);
    CHECK(predicted_linear_complexity(BinomialSpec::make(13, 6)).lower_bound(8) == 4);
    CHECK(predicted_linear_complexity(BinomialSpec::make(5, 4)).lower_bound(10) == 1);
}

TEST_CASE("predicted_expansion examples") {
    const auto a = predicted_expansion(BinomialSpec::make(13, 2));
    CHECK(a.exact);
    CHECK(a.lo == 4);
    CHECK(a.hi == 4);
    const auto b = predicted_expansion(BinomialSpec::make(7, 2));
    CHECK_FALSE(b.exact);
    CHECK(b.lo == 2);
    CHECK(b.hi == 2);
    const auto c = predicted_expansion(BinomialSpec::make(11, 2));
    CHECK(c.lo == 3);
    CHECK(c.hi == 3);
    // p = 31, k = 5: 42 >= 31, ceil(31/7) = 5, 31 mod 6 = 1
    const auto d = predicted_expansion(BinomialSpec::make(31, 5));
    CHECK_FALSE(d.exact);
    CHECK(d.lo == 5);
    CHECK(d.hi == 5);
    // p = 17, k = 3: 20 >= 17, ceil(17/5) = 4, 17 mod 4 = 1
    CHECK(predicted_expansion(BinomialSpec::make(17, 3)).hi == 4);
    // p = 23, k = 4: 30 >= 23, ceil(23/6) = 4, 23 mod 5 = 3
    CHECK(predicted_expansion(BinomialSpec::make(23, 4)).lo == 4);
}

TEST_CASE("binomial witness annihilates G modulo x^p") {
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t k = 1; k < p; ++k) {
            const BinomialSpec spec = BinomialSpec::make(p, k);
            const Sequence s = generate(spec, p);
            const BivariatePoly h = binomial_witness(spec);
            REQUIRE_FALSE(h.is_zero());
            REQUIRE(substitute(h, s.generating_series(p), p).is_zero());
            REQUIRE(*h.total_degree() >= expansion_complexity(s, p).e);
        }
}

TEST_CASE("analyze examples") {
    const auto r7 = analyze(BinomialSpec::make(7, 2));
    CHECK(r7.all_pass());
    CHECK(r7.e_p == 2);
    CHECK(r7.L == 3);

    const auto r13 = analyze(BinomialSpec::make(13, 2));
    CHECK(r13.all_pass());
    CHECK(r13.e_p == 4);
    CHECK(r13.expansion.exact);

    const auto r5 = analyze(BinomialSpec::make(5, 4));
    CHECK(r5.all_pass());
    CHECK(r5.L == 5);
    CHECK(r5.expansion.admits(r5.e_p));
}

TEST_CASE("analyze passes for every small prime") {
    for (std::uint32_t p : kPrimes)
        for (std::uint32_t k = 1; k < p; ++k) {
            const auto r = analyze(BinomialSpec::make(p, k));
            CAPTURE(p);
            CAPTURE(k);
            for (const auto& c : r.claims) {
                CAPTURE(c.id);
                CAPTURE(c.detail);
                CHECK(c.pass);
            }
        }
}
