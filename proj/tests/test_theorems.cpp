#include <doctest.h>

#include "excomp/binomial.hpp"
#include "excomp/expcomp.hpp"
#include "excomp/theorems.hpp"
#include "oracles.hpp"

using namespace excomp;

namespace {

const BoundReport& find(const std::vector<BoundReport>& rs, const std::string& claim) {
    for (const auto& r : rs)
        if (r.claim == claim) return r;
    FAIL("missing claim " << claim);
    throw std::logic_error("unreachable");
}

} // namespace

TEST_CASE("check_theorem1 examples") {
    auto r = check_theorem1(1, 0, 5, 2);
    CHECK(find(r, "T1.lower").expected == std::vector<std::int64_t>{2});
    CHECK(find(r, "T1.upper").expected == std::vector<std::int64_t>{2});
    CHECK(count_failures(r) == 0);

    r = check_theorem1(3, 0, 13, 4);
    CHECK(find(r, "T1.lower").expected[0] == 4);
    CHECK(find(r, "T1.upper").expected[0] == 4);
    CHECK(count_failures(r) == 0);

    r = check_theorem1(1, 0, 2, 1);
    CHECK(find(r, "T1.lower").expected[0] == 1);
    CHECK(count_failures(r) == 0);

    r = check_theorem1(1, 0, 5, 3);
    CHECK(find(r, "T1.upper").outcome == Outcome::Fail);
    CHECK(count_failures(r) == 1);

    CHECK_THROWS_AS(check_theorem1(0, 0, 5, 0), std::invalid_argument);
}

TEST_CASE("check_theorem1_remark examples") {
    CHECK(check_theorem1_remark(1, 0, 3, 2).outcome == Outcome::Pass);
    CHECK(check_theorem1_remark(3, 0, 13, 4).outcome == Outcome::Pass);
    CHECK(check_theorem1_remark(5, 3, 40, 3).outcome == Outcome::NotApplicable);
    CHECK(check_theorem1_remark(1, 0, 2, 1).outcome == Outcome::NotApplicable);
    CHECK(check_theorem1_remark(1, 0, 3, 1).outcome == Outcome::Fail);
}

TEST_CASE("check_theorem4 examples") {
    auto r = check_theorem4(3, 3, 3, 2);
    CHECK(find(r, "T4.upper").expected[0] == 2);
    CHECK(count_failures(r) == 0);

    r = check_theorem4(1, 0, 5, 2);
    CHECK(find(r, "T4.lower").expected[0] == 2);
    CHECK(find(r, "T4.upper").expected[0] == 2);
    CHECK(count_failures(r) == 0);

    r = check_theorem4(1, 1, 4, 1);
    CHECK(find(r, "T4.upper").expected[0] == 1);
    CHECK(count_failures(r) == 0);

    CHECK_THROWS_AS(check_theorem4(0, 0, 4, 0), std::invalid_argument);
    CHECK_THROWS_AS(check_theorem4(1, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("bound formulas by hand") {
    // m = min{1, t-1}
    CHECK(periodic_lower_bound(1, 0, 5) == 2);
    CHECK(periodic_lower_bound(4, 0, 6) == 2);   // 6 <= 4*5: ceil(6/5)
    CHECK(periodic_lower_bound(4, 2, 7) == 3);   // 7 > 2*3: L-t+1
    CHECK(periodic_lower_bound(4, 2, 6) == 2);   // 6 <= 6: ceil(6/3)
    CHECK(periodic_upper_bound(4, 0) == 5);
    CHECK(periodic_upper_bound(4, 1) == 4);
    CHECK(periodic_upper_bound(4, 5) == 3);
}

TEST_CASE("check_growth examples") {
    const Field f2 = Field::make(2);
    const Sequence all(f2, std::vector<Elem>(6, Field::one()));
    CHECK(count_failures(check_growth(linear_profile(all, 6), expansion_profile(all, 6))) == 0);

    const Sequence jump = Sequence::from_indices(f2, {0, 0, 1});
    const auto rj = check_growth(linear_profile(jump, 3), expansion_profile(jump, 3));
    CHECK(count_failures(rj) == 0);
    CHECK(rj.back().claim == "L3");
    CHECK(rj.back().expected == std::vector<std::int64_t>{0, 3});

    const Sequence zero = Sequence::from_indices(f2, {0, 0, 0, 0});
    CHECK(count_failures(check_growth(linear_profile(zero, 4), expansion_profile(zero, 4))) == 0);

    // a step of two from a nonzero prefix is a violation
    CHECK(count_failures(check_growth({1, 1}, {1, 3})) == 1);
    CHECK_THROWS_AS(check_growth({1}, {1, 1}), std::invalid_argument);
}

TEST_CASE("check_misc_upper examples") {
    auto r = check_misc_upper({1, 1, 2, 2}, 2, 0);
    CHECK(find(r, "R.simple").expected[0] == 3);
    CHECK(find(r, "R.kernel").expected[0] == 2);
    CHECK(find(r, "R.frobenius").expected[0] == 2);
    CHECK(count_failures(r) == 0);

    const Field f2 = Field::make(2);
    for (const auto& t : oracle::all_prefixes(2, 4)) {
        const Sequence s(f2, t);
        if (s.zero_prefix(4)) continue;
        CHECK(expansion_complexity(s, 4).e <= 2);
    }

    const Sequence all(f2, std::vector<Elem>(6, Field::one()));
    r = check_misc_upper(expansion_profile(all, 6), 2, 0);
    std::size_t splits = 0;
    for (const auto& b : r)
        if (b.claim == "R.subadd") {
            ++splits;
            CHECK(b.outcome == Outcome::Pass);
        }
    CHECK(splits == 3);

    // the shorter part of the split must see a nonzero term
    r = check_misc_upper({0, 0, 2, 2}, 2, 2);
    for (const auto& b : r)
        if (b.claim == "R.subadd") CHECK(b.outcome == Outcome::NotApplicable);
}

TEST_CASE("verify_prefix on periodic sequences") {
    const Field f3 = Field::make(3);
    const Sequence all(f3, std::vector<Elem>(10, Field::one()), Periodicity{0, 1});
    const auto r = verify_prefix(all, 10);
    CHECK(count_failures(r) == 0);
    CHECK(find(r, "T1.lower").outcome == Outcome::Pass);
    CHECK(find(r, "T1.remark").outcome == Outcome::Pass);

    const Sequence b = generate(BinomialSpec::make(11, 2), 11);
    const auto rb = verify_prefix(b, 11);
    CHECK(count_failures(rb) == 0);
    CHECK(find(rb, "T1.upper").observed == 3);

    CHECK_THROWS_AS(verify_prefix(all, 11), std::invalid_argument);
}

TEST_CASE("reports re-evaluate to their outcome") {
    const Field f2 = Field::make(2);
    for (const auto& t : oracle::all_prefixes(2, 7)) {
        const auto r = verify_prefix(Sequence(f2, t), 7);
        REQUIRE(count_failures(r) == 0);
        for (const auto& b : r) {
            const auto v = b.evaluate();
            if (b.outcome == Outcome::NotApplicable) REQUIRE_FALSE(v.has_value());
            else REQUIRE(*v == (b.outcome == Outcome::Pass));
        }
    }
}
