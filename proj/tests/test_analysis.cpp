#include "unitfrac/analysis.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <unistd.h>
#include <vector>

using namespace unitfrac;
using nlohmann::json;

namespace {

// Scoped cache directory: points UNITFRAC_CACHE_DIR at a fresh temp
// directory and removes everything on the way out.
struct ScopedCache {
  std::filesystem::path dir;
  ScopedCache() {
    dir = std::filesystem::temp_directory_path() /
          ("unitfrac-test-" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    ::setenv("UNITFRAC_CACHE_DIR", dir.c_str(), 1);
  }
  ~ScopedCache() {
    ::unsetenv("UNITFRAC_CACHE_DIR");
    std::error_code ec;
    std::filesystem::remove_all(dir, ec);
  }
  std::size_t file_count() const {
    std::size_t n = 0;
    for (const auto& e : std::filesystem::directory_iterator(dir)) {
      if (e.is_regular_file()) ++n;
    }
    return n;
  }
};

const TableCell& cell(const Table& t, std::size_t row, std::size_t col) {
  return t.rows.at(row).at(col);
}

}  // namespace

TEST_CASE("factorization rendering") {
  PrimeSet s({2, 13});
  CHECK(factorization_string(s, 832) == "2^6*13");
  CHECK(factorization_string(s, 13) == "13");
  CHECK(factorization_string(s, 1) == "1");
  CHECK(factorization_string({}, 12) == "2^2*3");
  CHECK(factorization_string({}, 97) == "97");
  CHECK(factorization_string(s, 210) == "2*3*5*7");  // not smooth: falls back
}

TEST_CASE("the log fit recovers a planted model") {
  std::vector<std::pair<std::uint64_t, double>> points;
  for (std::uint64_t p : {2, 4, 8, 16, 64}) {
    points.emplace_back(p, 2.0 * std::log(static_cast<double>(p)) + 1.0);
  }
  FitResult fit = fit_log_model(points);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(fit.rss == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(fit.points == 5);
}

TEST_CASE("the log fit rejects degenerate input") {
  CHECK_THROWS_AS(fit_log_model({}), std::invalid_argument);
  CHECK_THROWS_AS(fit_log_model({{3, 3.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_log_model({{3, 3.0}, {3, 4.0}}), std::invalid_argument);
  CHECK_THROWS_AS(fit_log_model({{1, 3.0}, {5, 4.0}}), std::invalid_argument);
}

TEST_CASE("the reference fit lands in the expected band") {
  std::vector<std::pair<std::uint64_t, double>> points;
  for (const auto& [p, rank] : reference_lowest_ranks()) {
    points.emplace_back(p, static_cast<double>(rank));
  }
  FitResult fit = fit_log_model(points);
  CHECK(fit.points == 54);
  CHECK(fit.slope == doctest::Approx(2.0687412518309904).epsilon(1e-9));
  CHECK(fit.intercept == doctest::Approx(0.884449472576687).epsilon(1e-9));
  CHECK(fit.rss == doctest::Approx(36.88390270233619).epsilon(1e-7));
  CHECK(fit.slope > 2.02);
  CHECK(fit.slope < 2.12);
  CHECK(fit.intercept > 0.73);
  CHECK(fit.intercept < 1.03);
}

TEST_CASE("reference lowest ranks") {
  const auto& pairs = reference_lowest_ranks();
  REQUIRE(pairs.size() == 54);
  CHECK(pairs.front() == std::pair<std::uint64_t, unsigned>{3, 3});
  CHECK(pairs.back() == std::pair<std::uint64_t, unsigned>{257, 10});
  const std::vector<std::pair<std::uint64_t, unsigned>> spot{
      {5, 4}, {7, 5}, {11, 6}, {13, 6}, {17, 6},
      {19, 7}, {23, 8}, {29, 8}, {107, 10}};
  for (const auto& want : spot) {
    bool found = false;
    for (const auto& have : pairs) {
      if (have == want) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("the crosscheck reproduces every recorded term") {
  CrosscheckReport report = reference_crosscheck();
  CHECK(report.all_pass);
  REQUIRE(report.terms.size() == 25);
  const CrosscheckTerm& first = report.terms.front();
  CHECK(first.p == 3);
  CHECK(first.t == 1);
  CHECK(first.rank == 3);
  CHECK(first.expected == 1);
  for (const CrosscheckTerm& term : report.terms) {
    CHECK(term.pass);
    CHECK(term.expected == term.computed);
    CHECK(term.rank == (term.p - 1) * term.t + 1);
  }
}

TEST_CASE("cached calls persist, reload, and survive corruption") {
  ScopedCache cache;
  PrimeSet s({2, 13});

  SolutionSet direct = enumerate_restricted(s, 7);
  SolutionSet first = cached_enumerate(s, 7);
  CHECK(solution_set_to_json(first) == solution_set_to_json(direct));
  CHECK(cache.file_count() >= 1);

  // Second call is a pure read; the payload must round-trip untouched.
  SolutionSet second = cached_enumerate(s, 7);
  CHECK(solution_set_to_json(second) == solution_set_to_json(direct));

  SurveyResult sdirect = survey_restricted(s, 7);
  SurveyResult scached = cached_survey(s, 7);
  CHECK(scached.total == sdirect.total);
  CHECK(scached.proper == sdirect.proper);
  CHECK(scached.max_denom == sdirect.max_denom);
  SurveyResult sreload = cached_survey(s, 7);
  CHECK(sreload.total == sdirect.total);
  CHECK(sreload.max_denom_proper == sdirect.max_denom_proper);

  // Clobber every entry; results must be recomputed, not trusted.
  for (const auto& e : std::filesystem::directory_iterator(cache.dir)) {
    std::ofstream out(e.path());
    out << "not json";
  }
  SolutionSet after = cached_enumerate(s, 7);
  CHECK(solution_set_to_json(after) == solution_set_to_json(direct));
  SurveyResult safter = cached_survey(s, 7);
  CHECK(safter.total == sdirect.total);
}

TEST_CASE("comparison routed through the cache matches the direct one") {
  ScopedCache cache;
  PrimeSet s({2, 13});
  GreedyComparison direct = greedy_vs_actual(s, 7);
  GreedyComparison cached = cached_compare(s, 7);
  CHECK(cached.verdict == direct.verdict);
  CHECK(cached.greedy.bound == direct.greedy.bound);
  CHECK(cached.total_count == direct.total_count);
  CHECK(cached.true_max == direct.true_max);
  // And again, now served from disk.
  GreedyComparison reread = cached_compare(s, 7);
  CHECK(reread.verdict == direct.verdict);
  CHECK(reread.true_max == direct.true_max);
}

TEST_CASE("solution set JSON carries the full schema") {
  SolutionSet set = enumerate_restricted(PrimeSet({2, 13}), 7);
  json j = json::parse(solution_set_to_json(set));
  CHECK(j.at("prime_set") == json::array({2, 13}));
  CHECK(j.at("rank") == 7);
  CHECK(j.at("count") == 22);
  CHECK(j.at("max_denominator") == "832");
  REQUIRE(j.at("solutions").size() == 22);
  const json& sol = j.at("solutions").at(0);
  CHECK(sol.at("rank") == 7);
  REQUIRE(sol.at("denominators").size() == 7);
  for (const json& d : sol.at("denominators")) CHECK(d.is_string());
  REQUIRE(sol.at("factorizations").size() == 7);
  // Factorizations are [prime, exponent] pairs aligned with denominators.
  bool saw_832 = false;
  for (const json& candidate : j.at("solutions")) {
    if (candidate.at("denominators").back() == "832") {
      saw_832 = true;
      CHECK(candidate.at("factorizations").back() ==
            json::array({json::array({2, 6}), json::array({13, 1})}));
    }
  }
  CHECK(saw_832);
}

TEST_CASE("solution set CSV has a header and one row per solution") {
  SolutionSet set = enumerate_restricted(PrimeSet({2, 13}), 7);
  std::string csv = solution_set_to_csv(set);
  REQUIRE_FALSE(csv.empty());
  std::size_t eol = csv.find('\n');
  CHECK(csv.substr(0, eol) == "rank,x1,x2,x3,x4,x5,x6,x7");
  std::size_t lines = 0;
  for (char c : csv) {
    if (c == '\n') ++lines;
  }
  CHECK(lines == 23);
}

TEST_CASE("table kinds round-trip through their names") {
  for (TableKind kind :
       {TableKind::kOnePrimeCounts, TableKind::kGreedyBounds,
        TableKind::kGreedyFailures, TableKind::kLowestRanks,
        TableKind::kMaxDenominators, TableKind::kPairCounts,
        TableKind::kThabitMaxDenoms, TableKind::kRuntimes}) {
    auto back = table_kind_from_string(to_string(kind));
    REQUIRE(back.has_value());
    CHECK(*back == kind);
  }
  CHECK_FALSE(table_kind_from_string("no_such_table").has_value());
}

TEST_CASE("pair count cells") {
  TableSpec spec;
  spec.kind = TableKind::kPairCounts;
  spec.primes = {3};
  spec.rank_lo = 3;
  spec.rank_hi = 5;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  REQUIRE(t.rows.size() == 1);
  REQUIRE(t.rows[0].size() == 3);
  CHECK(t.row_labels == std::vector<std::string>{"3"});
  CHECK(t.column_labels ==
        std::vector<std::string>{"R=3", "R=4", "R=5"});
  CHECK(cell(t, 0, 0).value == "3");
  CHECK(cell(t, 0, 1).value == "10");
  CHECK(cell(t, 0, 2).value == "44");
}

TEST_CASE("empty cells mark ranks with no proper solution") {
  TableSpec spec;
  spec.kind = TableKind::kPairCounts;
  spec.primes = {13};
  spec.rank_lo = 5;
  spec.rank_hi = 6;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  CHECK(cell(t, 0, 0).state == TableCell::State::kEmpty);
  CHECK(cell(t, 0, 1).state == TableCell::State::kValue);
  CHECK(cell(t, 0, 1).value == "7");
}

TEST_CASE("greedy bound cells carry the verdict") {
  TableSpec spec;
  spec.kind = TableKind::kGreedyBounds;
  spec.primes = {13};
  spec.rank_lo = 6;
  spec.rank_hi = 7;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  CHECK(cell(t, 0, 0).value == "104");
  CHECK(cell(t, 0, 0).note == "TIGHT");
  CHECK(cell(t, 0, 1).value == "676");
  CHECK(cell(t, 0, 1).note == "FAILURE");

  spec.primes = {11};
  spec.rank_lo = 5;
  spec.rank_hi = 5;
  Table empty = generate_table(spec);
  CHECK(cell(empty, 0, 0).state == TableCell::State::kEmpty);
}

TEST_CASE("max denominator cells carry factorizations") {
  TableSpec spec;
  spec.kind = TableKind::kMaxDenominators;
  spec.primes = {3};
  spec.rank_lo = 5;
  spec.rank_hi = 6;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  CHECK(cell(t, 0, 0).value == "216");
  CHECK(cell(t, 0, 0).note == "2^3*3^3");
  CHECK(cell(t, 0, 1).value == "1944");
  CHECK(cell(t, 0, 1).note == "2^3*3^5");
}

TEST_CASE("the failure scan emits one row per undershoot") {
  TableSpec spec;
  spec.kind = TableKind::kGreedyFailures;
  spec.primes = {13};
  spec.rank_lo = 2;
  spec.rank_hi = 9;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  REQUIRE(t.rows.size() == 2);
  CHECK(t.column_labels ==
        std::vector<std::string>{"R", "q", "greedy bound", "true max"});
  CHECK(cell(t, 0, 0).value == "7");
  CHECK(cell(t, 0, 2).value == "676");
  CHECK(cell(t, 0, 3).value == "832");
  CHECK(cell(t, 1, 0).value == "9");
  CHECK(cell(t, 1, 2).value == "43264");
  CHECK(cell(t, 1, 3).value == "140608");
}

TEST_CASE("lowest rank cells respect the search ceiling") {
  TableSpec spec;
  spec.kind = TableKind::kLowestRanks;
  spec.primes = {3, 5, 19};
  spec.max_rank = 15;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  REQUIRE(t.rows.size() == 3);
  CHECK(cell(t, 0, 0).value == "3");
  CHECK(cell(t, 1, 0).value == "4");
  CHECK(cell(t, 2, 0).value == "7");

  spec.primes = {19};
  spec.max_rank = 6;
  Table capped = generate_table(spec);
  CHECK(cell(capped, 0, 0).state == TableCell::State::kEmpty);
  CHECK(cell(capped, 0, 0).note == "> 6");
}

TEST_CASE("one-prime count cells") {
  TableSpec spec;
  spec.kind = TableKind::kOnePrimeCounts;
  spec.primes = {3};
  spec.t_lo = 1;
  spec.t_hi = 5;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  REQUIRE(t.rows.size() == 1);
  const std::vector<std::string> want{"1", "1", "2", "4", "7"};
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(cell(t, 0, i).value == want[i]);
  }
}

TEST_CASE("runtime cells are parseable seconds") {
  TableSpec spec;
  spec.kind = TableKind::kRuntimes;
  spec.primes = {3};
  spec.rank_lo = 3;
  spec.rank_hi = 4;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);
  REQUIRE(t.rows.size() == 1);
  for (const TableCell& c : t.rows[0]) {
    CHECK(c.state == TableCell::State::kValue);
    CHECK(std::stod(c.value) >= 0.0);
  }
}

TEST_CASE("a vanishing budget turns cells into N/C") {
  ::unsetenv("UNITFRAC_CACHE_DIR");  // must actually compute to time out
  TableSpec spec;
  spec.kind = TableKind::kPairCounts;
  spec.primes = {3};
  spec.rank_lo = 9;
  spec.rank_hi = 9;
  spec.budget_seconds = 1e-9;
  Table t = generate_table(spec);
  CHECK(cell(t, 0, 0).state == TableCell::State::kNotComputed);
}

TEST_CASE("tables are deterministic") {
  TableSpec spec;
  spec.kind = TableKind::kGreedyBounds;
  spec.primes = {3, 5};
  spec.rank_lo = 5;
  spec.rank_hi = 6;
  spec.budget_seconds = 0;
  CHECK(table_to_json(generate_table(spec)) ==
        table_to_json(generate_table(spec)));
}

TEST_CASE("table serializations") {
  TableSpec spec;
  spec.kind = TableKind::kPairCounts;
  spec.primes = {3};
  spec.rank_lo = 3;
  spec.rank_hi = 4;
  spec.budget_seconds = 0;
  Table t = generate_table(spec);

  json j = json::parse(table_to_json(t));
  CHECK(j.at("kind") == "pair_counts");
  CHECK(j.at("columns") == json::array({"R=3", "R=4"}));
  REQUIRE(j.at("rows").size() == 1);
  CHECK(j.at("rows").at(0).at("label") == "3");
  CHECK(j.at("rows").at(0).at("cells").at(0).at("state") == "value");
  CHECK(j.at("rows").at(0).at("cells").at(0).at("value") == "3");

  std::string csv = table_to_csv(t);
  CHECK(csv.substr(0, csv.find('\n')) == "row,R=3,R=4");
  CHECK(csv.find("\n3,3,10") != std::string::npos);
}
