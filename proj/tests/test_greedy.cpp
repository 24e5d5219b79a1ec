#include "unitfrac/greedy.hpp"

#include <doctest.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

using namespace unitfrac;

namespace {

std::vector<std::uint64_t> prefix_of(const GreedyResult& r) {
  std::vector<std::uint64_t> out;
  for (const Natural& d : r.prefix) out.push_back(d.get_ui());
  return out;
}

}  // namespace

TEST_CASE("the {2,7} rank-7 run completes exactly") {
  GreedyResult r = greedy_run(PrimeSet({2, 7}), 7);
  CHECK(prefix_of(r) == std::vector<std::uint64_t>{2, 4, 7, 14, 32, 256});
  CHECK(r.sigma == make_rational(1791, 1792));
  CHECK(r.bound == 1792);
  CHECK(r.exact_completion);
}

TEST_CASE("the {2,5} rank-7 run rounds up to the next smooth value") {
  GreedyResult r = greedy_run(PrimeSet({2, 5}), 7);
  CHECK(prefix_of(r) == std::vector<std::uint64_t>{2, 4, 5, 25, 125, 512});
  CHECK(r.sigma == make_rational(63997, 64000));
  CHECK(r.gamma == make_rational(64000, 3));
  CHECK(r.bound == 25000);
  CHECK_FALSE(r.exact_completion);
}

TEST_CASE("the {2,13} rank-7 bound undershoots the true maximum") {
  GreedyComparison c = greedy_vs_actual(PrimeSet({2, 13}), 7);
  CHECK(prefix_of(c.greedy) == std::vector<std::uint64_t>{2, 4, 8, 13, 26, 128});
  CHECK(c.greedy.bound == 676);
  REQUIRE(c.true_max.has_value());
  CHECK(*c.true_max == 832);
  CHECK(c.verdict == GreedyVerdict::kFailure);
  CHECK(c.total_count == 22);
}

TEST_CASE("recorded {2,q} bounds for ranks 5 to 8") {
  struct Row {
    std::uint64_t q;
    unsigned rank;
    std::uint64_t bound;
    GreedyVerdict verdict;
  };
  const std::vector<Row> rows{
      {3, 5, 216, GreedyVerdict::kTight},
      {3, 6, 1944, GreedyVerdict::kTight},
      {3, 7, 39366, GreedyVerdict::kSlack},
      {5, 5, 100, GreedyVerdict::kTight},
      {5, 6, 500, GreedyVerdict::kTight},
      {5, 7, 25000, GreedyVerdict::kSlack},
      {7, 7, 1792, GreedyVerdict::kTight},
      {7, 8, 14336, GreedyVerdict::kTight},
      {11, 5, 32, GreedyVerdict::kNoSolutions},
      {11, 6, 352, GreedyVerdict::kTight},
      {13, 6, 104, GreedyVerdict::kTight},
      {13, 7, 676, GreedyVerdict::kFailure},
      {17, 6, 272, GreedyVerdict::kTight},
      {19, 7, 512, GreedyVerdict::kSlack},
      {19, 8, 9728, GreedyVerdict::kTight},
  };
  for (const Row& row : rows) {
    GreedyComparison c = greedy_vs_actual(PrimeSet({2, row.q}), row.rank);
    CHECK(c.greedy.bound == row.bound);
    CHECK(c.verdict == row.verdict);
  }
}

TEST_CASE("slack bounds still dominate the true maximum") {
  GreedyComparison c = greedy_vs_actual(PrimeSet({2, 5}), 7);
  CHECK(c.verdict == GreedyVerdict::kSlack);
  REQUIRE(c.true_max.has_value());
  CHECK(*c.true_max == 2500);  // 2^2 * 5^4
}

TEST_CASE("a later failure: {2,13} at rank 9") {
  GreedyResult r = greedy_run(PrimeSet({2, 13}), 9);
  CHECK(prefix_of(r) ==
        std::vector<std::uint64_t>{2, 4, 8, 13, 26, 128, 676, 3328});
  CHECK(r.bound == 43264);  // 2^8 * 13^2
  CHECK(r.exact_completion);
}

TEST_CASE("no proper solutions yields the NO_SOLUTIONS verdict") {
  GreedyComparison c = greedy_vs_actual(PrimeSet({2, 3}), 2);
  CHECK(c.greedy.bound == 2);
  CHECK(c.proper_count == 0);
  CHECK(c.total_count == 1);  // [2, 2]
  CHECK(c.verdict == GreedyVerdict::kNoSolutions);
}

TEST_CASE("verdict classification from precomputed parts") {
  GreedyResult g = greedy_run(PrimeSet({2, 3}), 5);
  SurveyResult survey;
  survey.total = 44;
  survey.proper = 40;
  survey.max_denom = Natural(216);
  CHECK(compare_greedy(g, survey).verdict == GreedyVerdict::kTight);
  survey.max_denom = Natural(108);
  CHECK(compare_greedy(g, survey).verdict == GreedyVerdict::kSlack);
  survey.max_denom = Natural(432);
  CHECK(compare_greedy(g, survey).verdict == GreedyVerdict::kFailure);
  survey.proper = 0;
  CHECK(compare_greedy(g, survey).verdict == GreedyVerdict::kNoSolutions);
}

TEST_CASE("verdict names") {
  CHECK(std::string(to_string(GreedyVerdict::kTight)) == "TIGHT");
  CHECK(std::string(to_string(GreedyVerdict::kSlack)) == "SLACK");
  CHECK(std::string(to_string(GreedyVerdict::kFailure)) == "FAILURE");
  CHECK(std::string(to_string(GreedyVerdict::kNoSolutions)) == "NO_SOLUTIONS");
}

TEST_CASE("greedy needs at least rank 2") {
  CHECK_THROWS_AS(greedy_run(PrimeSet({2, 3}), 1), std::invalid_argument);
}
