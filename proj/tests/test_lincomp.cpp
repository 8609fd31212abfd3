#include <doctest.h>

#include <random>

#include "excomp/lincomp.hpp"
#include "oracles.hpp"

using namespace excomp;

namespace {

Sequence ones(const Field& f, std::size_t n) { return Sequence(f, std::vector<Elem>(n, Field::one())); }

Sequence random_sequence(const Field& f, std::mt19937& rng, std::size_t n) {
    std::uniform_int_distribution<std::uint32_t> coef(0, f.order() - 1);
    std::vector<Elem> t(n);
    for (auto& x : t) x = Elem{coef(rng)};
    return Sequence(f, std::move(t));
}

// direct evaluation of the recurrence over the first fit.n terms
bool fits(const Field& f, const LinearFit& fit, const std::vector<Elem>& s) {
    for (std::size_t i = 0; i + fit.L < fit.n; ++i) {
        Elem acc = s[i + fit.L];
        for (std::size_t l = 0; l < fit.L; ++l) acc = f.add(acc, f.mul(fit.coeffs[l], s[i + l]));
        if (!acc.is_zero()) return false;
    }
    return true;
}

} // namespace

TEST_CASE("sequence validates periodicity and terms") {
    const Field f2 = Field::make(2);
    CHECK_THROWS_AS(Sequence::from_indices(f2, {0, 2}), std::out_of_range);
    CHECK_THROWS_AS(Sequence::from_indices(f2, {1, 0, 1}, Periodicity{0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Sequence::from_indices(f2, {1, 0, 0}, Periodicity{0, 2}), std::invalid_argument);
    const Sequence s = Sequence::from_indices(f2, {1, 0, 1, 1}, Periodicity{2, 1});
    CHECK(s.term(10) == Field::one());
    CHECK(s.extended(6).size() == 6);
    const Sequence short_one = Sequence::from_indices(f2, {1, 0}, Periodicity{2, 1});
    CHECK_THROWS_AS(short_one.term(5), std::out_of_range);
    CHECK(Sequence::from_indices(f2, {0, 0, 1}).zero_prefix(2));
}

TEST_CASE("berlekamp_massey examples") {
    const Field f2 = Field::make(2);
    const LinearFit fit = berlekamp_massey(Sequence::from_indices(f2, {1, 1, 0, 1, 1, 0}), 6);
    CHECK(fit.L == 2);
    CHECK(fit.coeffs == std::vector<Elem>{Elem{1}, Elem{1}});
    CHECK(fit.tn == 0);
    CHECK(oracle::min_recurrence_length({Elem{1}, Elem{1}, Elem{0}, Elem{1}, Elem{1}, Elem{0}}, 2) == 2);

    for (std::uint32_t p : {2u, 5u}) {
        const Field f = Field::make(p);
        for (std::size_t n = 1; n <= 6; ++n) {
            std::vector<Elem> t(n, Field::zero());
            t.back() = Elem{p - 1};
            const LinearFit d = berlekamp_massey(Sequence(f, t), n);
            CHECK(d.L == n);
            CHECK(d.degenerate());
            CHECK(d.tn == n);
        }
    }

    const LinearFit z = berlekamp_massey(Sequence::from_indices(f2, {0, 0, 0, 0}), 4);
    CHECK(z.L == 0);
    CHECK(z.tn == 0);
    CHECK_FALSE(z.degenerate());

    CHECK_THROWS_AS(berlekamp_massey(ones(f2, 3), 4), std::invalid_argument);
}

TEST_CASE("linear_profile examples") {
    const Field f2 = Field::make(2);
    CHECK(linear_profile(ones(f2, 5), 5) == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(linear_profile(Sequence::from_indices(f2, {0, 0, 1}), 3) == std::vector<std::size_t>{0, 0, 3});
    CHECK(linear_profile(Sequence::from_indices(f2, {0, 0, 0, 0}), 4) == std::vector<std::size_t>{0, 0, 0, 0});
}

TEST_CASE("berlekamp_massey matches exhaustive recurrence search") {
    for (std::uint32_t p : {2u, 3u}) {
        const Field f = Field::make(p);
        const std::size_t nmax = p == 2 ? 9 : 5;
        for (std::size_t n = 1; n <= nmax; ++n)
            for (const auto& s : oracle::all_prefixes(p, n)) {
                const LinearFit fit = berlekamp_massey(f, s);
                REQUIRE(fit.L == oracle::min_recurrence_length(s, p));
                REQUIRE(fits(f, fit, s));
                REQUIRE(annihilates(fit, Sequence(f, s)));
                REQUIRE(fit.tn <= fit.L);
                const auto deg = fit.connection(f).degree();
                REQUIRE(fit.tn == fit.L - (deg ? *deg : 0));
            }
    }
}

TEST_CASE("incremental synthesizer agrees with batch runs and profile growth holds") {
    std::mt19937 rng(23);
    for (std::uint32_t p : {2u, 3u, 7u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 100; ++trial) {
            const Sequence s = random_sequence(f, rng, 20);
            LfsrSynthesizer synth(f);
            const auto prof = linear_profile(s, 20);
            std::size_t prev = 0;
            for (std::size_t n = 1; n <= 20; ++n) {
                synth.push(s[n - 1]);
                const LinearFit a = synth.fit(), b = berlekamp_massey(s, n);
                REQUIRE(a.L == b.L);
                REQUIRE(a.coeffs == b.coeffs);
                REQUIRE(prof[n - 1] == a.L);
                if (2 * prev > n - 1) REQUIRE(a.L == prev);
                else REQUIRE((a.L == prev || a.L == n - prev));
                prev = a.L;
            }
        }
    }
}

TEST_CASE("rational_form examples") {
    const Field f7 = Field::make(7);
    const Sequence all = Sequence(f7, std::vector<Elem>(8, Field::one()), Periodicity{0, 1});
    const RationalForm rf = rational_form(berlekamp_massey(all, 8), all);
    CHECK(rf.f == Poly::from_indices(f7, {1}));
    CHECK(rf.g == Poly::from_indices(f7, {1, 6}));
    CHECK(rf.t == 0);

    // C(i+2, 2) mod 7 over two periods
    std::vector<Elem> binom;
    for (std::uint32_t i = 0; i < 14; ++i) binom.push_back(Elem{oracle::binomial_mod(i % 7 + 2, 2, 7)});
    const Sequence bs(f7, binom, Periodicity{0, 7});
    const RationalForm rb = rational_form(berlekamp_massey(bs, 14), bs);
    const Poly one_minus_x = Poly::from_indices(f7, {1, 6});
    CHECK(rb.f == Poly::from_indices(f7, {1}));
    CHECK(rb.g == one_minus_x * one_minus_x * one_minus_x);
    CHECK(rb.t == 0);
    CHECK(rb.L() == 3);

    // 1, 0, 1, 1, 1, ...: G = 1 + x^2/(1-x), preperiod 2
    const Field f2 = Field::make(2);
    const Sequence pre = Sequence::from_indices(f2, {1, 0, 1, 1, 1, 1}, Periodicity{2, 1});
    const RationalForm rp = rational_form(berlekamp_massey(pre, 6), pre);
    CHECK(rp.g == Poly::from_indices(f2, {1, 1}));
    CHECK(rp.f == Poly::from_indices(f2, {1, 1, 1}));
    CHECK(rp.t == 2);
    CHECK(rp.L() == 3);
    CHECK(*rp.g.degree() == rp.L() - rp.t);
    CHECK(rational_expand(rp.f, rp.g, 6) == pre.generating_series(6));
}

TEST_CASE("rational_form rejects an inconsistent fit") {
    const Field f2 = Field::make(2);
    const Sequence s = Sequence::from_indices(f2, {1, 1, 1, 0, 1, 0});
    CHECK_THROWS_AS(rational_form(berlekamp_massey(s, 3), s), std::invalid_argument);
}

TEST_CASE("rational round trip and periodicity bound on random periodic sequences") {
    std::mt19937 rng(29);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        const Field f = Field::make(p);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t t = rng() % 4, T = 1 + rng() % 5;
            const Sequence base = random_sequence(f, rng, t + T);
            std::vector<Elem> terms;
            for (std::size_t i = 0; i < 2 * (t + T) + 3; ++i) terms.push_back(base[i < t ? i : t + (i - t) % T]);
            const Sequence s(f, terms, Periodicity{t, T});
            const LinearFit fit = berlekamp_massey(s, s.size());
            REQUIRE(fit.L <= t + T);
            if (fit.L == 0) continue;
            const RationalForm rf = rational_form(fit, s);
            REQUIRE(rational_expand(rf.f, rf.g, s.size()) == s.generating_series(s.size()));
            REQUIRE(rf.g[0] == Field::one());
            REQUIRE(gcd(rf.f, rf.g) == Poly::from_indices(f, {1}));
            REQUIRE(preperiod_from_rational(rf) == rf.t);
            REQUIRE(rf.t <= t);
        }
    }
}

TEST_CASE("preperiod_from_rational examples") {
    const Field f7 = Field::make(7);
    CHECK(preperiod_from_rational({Poly::from_indices(f7, {1}), Poly::from_indices(f7, {1, 6}), 0}) == 0);
    const RationalForm rf{Poly::from_indices(f7, {1, 1, 6}), Poly::from_indices(f7, {1, 6}), 2};
    CHECK(preperiod_from_rational(rf) == 2);
    CHECK(rational_expand(rf.f, rf.g, 5) == TruncatedSeries::from_indices(f7, {1, 2, 1, 1, 1}));
    CHECK(preperiod_from_rational({Poly(f7), Poly::from_indices(f7, {1}), 0}) == 0);
}

TEST_CASE("extend_by_recurrence examples") {
    const Field f2 = Field::make(2);
    const Sequence s = Sequence::from_indices(f2, {1, 1, 0});
    LinearFit fit;
    fit.n = 3;
    fit.L = 2;
    fit.coeffs = {Elem{1}, Elem{1}};
    fit.tn = 0;
    CHECK(extend_by_recurrence(s, fit, 9).terms() ==
          Sequence::from_indices(f2, {1, 1, 0, 1, 1, 0, 1, 1, 0}).terms());

    const Sequence z = Sequence::from_indices(f2, {0, 0, 0});
    CHECK(extend_by_recurrence(z, berlekamp_massey(z, 3), 7).zero_prefix(7));

    const Sequence d = Sequence::from_indices(f2, {0, 0, 1});
    CHECK_THROWS_AS(extend_by_recurrence(d, berlekamp_massey(d, 3), 6), std::invalid_argument);
}

TEST_CASE("all_recurrences lists every shortest recurrence") {
    const Field f2 = Field::make(2);
    // [1,1] with L = 1: only s_{i+1} = s_i
    CHECK(all_recurrences(f2, std::vector<Elem>{Elem{1}, Elem{1}}, 1).size() == 1);
    // [0,1] with L = 2: no rows, all four coefficient pairs
    CHECK(all_recurrences(f2, std::vector<Elem>{Elem{0}, Elem{1}}, 2).size() == 4);
}
