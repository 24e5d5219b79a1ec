#include "unitfrac/families.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "unitfrac/greedy.hpp"

using namespace unitfrac;

namespace {

std::vector<std::uint64_t> values_of(const Solution& sol) {
  std::vector<std::uint64_t> out;
  for (const Natural& d : sol.denominators) out.push_back(d.get_ui());
  return out;
}

Solution from_values(const std::vector<std::uint64_t>& xs) {
  Solution sol;
  for (std::uint64_t x : xs) sol.denominators.emplace_back(Natural(x));
  return sol;
}

bool contains(const SolutionSet& set, const Solution& sol) {
  return std::find(set.solutions.begin(), set.solutions.end(), sol) !=
         set.solutions.end();
}

}  // namespace

TEST_CASE("verification accepts exactly the valid tuples") {
  Solution good = from_values({2, 3, 6});
  CHECK(verify_solution(good).pass());
  CHECK(verify_solution(good, PrimeSet({2, 3}), 3, true).pass());

  CHECK_FALSE(verify_solution(from_values({2, 3, 7})).pass());  // sum
  CHECK_FALSE(verify_solution(from_values({3, 2, 6})).pass());  // order
  CHECK_FALSE(verify_solution(from_values({})).pass());

  VerificationReport r = verify_solution(good, PrimeSet({2, 5}));
  CHECK(r.sum_is_one);
  CHECK(r.all_smooth == false);  // 3 and 6 leave the base
  CHECK_FALSE(r.pass());

  r = verify_solution(from_values({2, 4, 4}), PrimeSet({2, 3}), {}, true);
  CHECK(r.all_smooth == true);
  CHECK(r.all_primes_used == false);
  CHECK_FALSE(r.pass());

  r = verify_solution(good, {}, 4);
  CHECK(r.rank_matches == false);
  CHECK_FALSE(r.pass());

  // Factorizations line up with the denominators when a base is given.
  r = verify_solution(from_values({2, 4, 8, 13, 32, 64, 832}),
                      PrimeSet({2, 13}));
  REQUIRE(r.factorizations.size() == 7);
  REQUIRE(r.factorizations[6].has_value());
  CHECK(r.factorizations[6]->exponents == std::vector<unsigned>{6, 1});
}

TEST_CASE("canonical one-prime tuples") {
  CHECK(values_of(canonical_one_prime(3, 7)) ==
        std::vector<std::uint64_t>{3, 3, 9, 9, 27, 27, 27});
  CHECK(values_of(canonical_one_prime(2, 5)) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 16});
  CHECK(values_of(canonical_one_prime(5, 5)) ==
        std::vector<std::uint64_t>{5, 5, 5, 5, 5});
  CHECK_THROWS_AS(canonical_one_prime(3, 6), std::invalid_argument);
  CHECK_THROWS_AS(canonical_one_prime(5, 1), std::invalid_argument);
}

TEST_CASE("doubling the last denominator bumps the rank") {
  Solution base = from_values({2, 3, 6});
  Solution once = double_last(base);
  CHECK(values_of(once) == std::vector<std::uint64_t>{2, 3, 12, 12});
  CHECK(values_of(double_last(once)) ==
        std::vector<std::uint64_t>{2, 3, 12, 24, 24});
  CHECK_THROWS_AS(double_last(from_values({2, 3, 7})), std::invalid_argument);
}

TEST_CASE("a hundred doublings stay valid") {
  Solution sol = from_values({2, 3, 6});
  for (int i = 0; i < 100; ++i) {
    sol = double_last(sol);
    CHECK(verify_solution(sol, PrimeSet({2, 3}), 4 + i).pass());
  }
  CHECK(sol.denominators.back() == Natural(6) * pow_ui(2, 100));
}

TEST_CASE("Fermat-prime tuples") {
  CHECK(values_of(fermat_family(0, 4)) ==
        std::vector<std::uint64_t>{2, 3, 9, 18});
  CHECK(values_of(fermat_family(1, 5)) ==
        std::vector<std::uint64_t>{2, 4, 5, 25, 100});
  CHECK(values_of(fermat_family(2, 7)) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 17, 289, 4624});
  CHECK(fermat_family(4, 18).rank() == 18);
  CHECK_THROWS_AS(fermat_family(5, 40), std::invalid_argument);
  CHECK_THROWS_AS(fermat_family(2, 5), std::invalid_argument);
}

TEST_CASE("Mersenne-prime tuples") {
  CHECK(values_of(mersenne_family(2, 3)) == std::vector<std::uint64_t>{2, 3, 6});
  CHECK(values_of(mersenne_family(2, 5)) ==
        std::vector<std::uint64_t>{2, 3, 8, 32, 96});
  CHECK(values_of(mersenne_family(3, 5)) ==
        std::vector<std::uint64_t>{2, 4, 7, 14, 28});
  CHECK(values_of(mersenne_family(3, 6)) ==
        std::vector<std::uint64_t>{2, 4, 7, 14, 32, 224});
  CHECK(values_of(mersenne_family(3, 7)) ==
        std::vector<std::uint64_t>{2, 4, 7, 14, 32, 256, 1792});
  CHECK(values_of(mersenne_family(5, 9)) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 31, 62, 124, 248, 496});
  CHECK_THROWS_AS(mersenne_family(4, 9), std::invalid_argument);
  CHECK_THROWS_AS(mersenne_family(3, 4), std::invalid_argument);
}

TEST_CASE("Mersenne tails track the greedy bound until powers interleave") {
  // p = 7: the tail is the greedy bound through rank 9.  At rank 10 the
  // greedy pass picks up 7^6 = 117649, which slips between 2^14*7 and
  // 2^17, and the two trajectories separate.
  for (unsigned rank = 5; rank <= 9; ++rank) {
    CHECK(mersenne_family(3, rank).denominators.back() ==
          greedy_run(PrimeSet({2, 7}), rank).bound);
  }
  CHECK(mersenne_family(3, 10).denominators.back() == 917504);
  CHECK(greedy_run(PrimeSet({2, 7}), 10).bound == 4917248);  // 2^11 * 7^4

  // p = 31 holds out much longer.
  for (unsigned rank = 9; rank <= 12; ++rank) {
    CHECK(mersenne_family(5, rank).denominators.back() ==
          greedy_run(PrimeSet({2, 31}), rank).bound);
  }

  // p = 3 already diverges at rank 5, where the pass prefers 27 to 32.
  for (unsigned rank = 3; rank <= 4; ++rank) {
    CHECK(mersenne_family(2, rank).denominators.back() ==
          greedy_run(PrimeSet({2, 3}), rank).bound);
  }
  CHECK(mersenne_family(2, 5).denominators.back() == 96);
  CHECK(greedy_run(PrimeSet({2, 3}), 5).bound == 216);
}

TEST_CASE("power-of-two gap tuples exist exactly when the shape verifies") {
  auto r19 = pow2_gap_family(19, 7);
  REQUIRE(r19.has_value());
  CHECK(values_of(*r19) == std::vector<std::uint64_t>{2, 4, 8, 16, 19, 152, 304});
  auto r11 = pow2_gap_family(11, 6);
  REQUIRE(r11.has_value());
  CHECK(values_of(*r11) == std::vector<std::uint64_t>{2, 4, 8, 11, 44, 88});
  auto r13 = pow2_gap_family(13, 6);
  REQUIRE(r13.has_value());
  CHECK(values_of(*r13) == std::vector<std::uint64_t>{2, 4, 8, 13, 26, 104});
  auto r7 = pow2_gap_family(7, 5);
  REQUIRE(r7.has_value());
  CHECK(values_of(*r7) == std::vector<std::uint64_t>{2, 4, 7, 14, 28});
  auto r37 = pow2_gap_family(37, 8);
  REQUIRE(r37.has_value());
  CHECK(values_of(*r37) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 32, 37, 296, 1184});

  CHECK_FALSE(pow2_gap_family(23, 7).has_value());  // 23 - 17 is no power of 2
  CHECK_FALSE(pow2_gap_family(17, 7).has_value());  // the gap cannot be zero
  CHECK_FALSE(pow2_gap_family(7, 7).has_value());   // p below 2^(R-3)
}

TEST_CASE("family members appear in the corresponding enumeration") {
  struct Probe {
    Solution sol;
    std::vector<std::uint64_t> base;
  };
  const std::vector<Probe> probes{
      {fermat_family(0, 5), {2, 3}},
      {fermat_family(1, 6), {2, 5}},
      {fermat_family(2, 8), {2, 17}},
      {mersenne_family(2, 6), {2, 3}},
      {mersenne_family(3, 7), {2, 7}},
      {mersenne_family(5, 9), {2, 31}},
      {canonical_one_prime(3, 7), {3}},
      {*pow2_gap_family(19, 7), {2, 19}},
  };
  for (const Probe& probe : probes) {
    SolutionSet set =
        enumerate_restricted(PrimeSet(probe.base), probe.sol.rank());
    CHECK(contains(set, probe.sol));
  }
}

TEST_CASE("the Fermat tuple is not extremal at higher ranks") {
  Solution family = fermat_family(1, 8);
  CHECK(family.denominators.back() == 12500);  // 2^2 * 5^5
  SurveyResult survey = survey_restricted(PrimeSet({2, 5}), 8);
  REQUIRE(survey.max_denom.has_value());
  CHECK(*survey.max_denom == 128000);  // 2^10 * 5^3
  CHECK(*survey.max_denom > family.denominators.back());
}
