#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "unitfrac/enumerate.hpp"
#include "unitfrac/greedy.hpp"

namespace unitfrac {

// Bumping this invalidates every cache entry.
inline constexpr const char* kLibraryVersion = "1.0.0";

enum class TableKind {
  kOnePrimeCounts,   // rows p, cols t: one-prime count at rank (p-1)t + 1
  kGreedyBounds,     // rows q, cols R: greedy bound and verdict for {2,q}
  kGreedyFailures,   // one row per FAILURE (R, q, bound, true max) in range
  kLowestRanks,      // rows p: least rank using both primes of {2,p}
  kMaxDenominators,  // rows q, cols R: largest denominator over {2,q}
  kPairCounts,       // rows q, cols R: number of {2,q} solutions
  kThabitMaxDenoms,  // Thabit-prime rows, cells as in kMaxDenominators
  kRuntimes,         // rows q, cols R: measured enumeration seconds
};

const char* to_string(TableKind kind);
std::optional<TableKind> table_kind_from_string(const std::string& name);

// Unset ranges fall back to the defaults each kind mirrors.
struct TableSpec {
  TableKind kind = TableKind::kPairCounts;
  std::vector<std::uint64_t> primes;  // row parameters; empty = default rows
  unsigned rank_lo = 0;
  unsigned rank_hi = 0;
  unsigned t_lo = 1;
  unsigned t_hi = 7;
  unsigned max_rank = 15;        // search ceiling for kLowestRanks
  double budget_seconds = 300;   // wall-clock ceiling per cell; <= 0 = none
  unsigned parallel_width = 0;
  int thabit_kind = 1;  // 1: primes 3*2^n - 1, 2: primes 3*2^n + 1
};

struct TableCell {
  enum class State { kValue, kEmpty, kNotComputed };
  State state = State::kEmpty;
  std::string value;  // payload when state == kValue
  std::string note;   // verdict or factorization annotation
};

struct Table {
  TableKind kind = TableKind::kPairCounts;
  std::string title;
  std::vector<std::string> column_labels;
  std::vector<std::string> row_labels;  // may be empty (kGreedyFailures)
  std::vector<std::vector<TableCell>> rows;
};

// Deterministic for a fixed spec whenever no cell hits the budget.
Table generate_table(const TableSpec& spec);

// Least-squares fit rank ~ slope * ln p + intercept.  Needs two distinct
// abscissae.
struct FitResult {
  double slope = 0;
  double intercept = 0;
  double rss = 0;
  std::size_t points = 0;
};

FitResult fit_log_model(
    const std::vector<std::pair<std::uint64_t, double>>& points);

// Transcribed (p, lowest rank) reference pairs for S = {2, p}, p <= 257.
const std::vector<std::pair<std::uint64_t, unsigned>>& reference_lowest_ranks();

// Recomputes the published one-prime counting sequences for p = 3, 5, 7
// and reports every term.
struct CrosscheckTerm {
  std::uint64_t p = 0;
  unsigned t = 0;
  unsigned rank = 0;
  std::uint64_t expected = 0;
  std::uint64_t computed = 0;
  bool pass = false;
};

struct CrosscheckReport {
  std::vector<CrosscheckTerm> terms;
  bool all_pass = true;
};

CrosscheckReport reference_crosscheck();

// Enumeration through a persistent content-addressed cache rooted at
// $UNITFRAC_CACHE_DIR (no persistence when unset).  Results are identical
// to the direct calls; unreadable entries are silently recomputed.
SolutionSet cached_enumerate(const PrimeSet& s, unsigned rank,
                             const EnumOptions& opts = {});
SurveyResult cached_survey(const PrimeSet& s, unsigned rank,
                           const EnumOptions& opts = {});

// "2^6*13"-style rendering; trial division when s is absent or n is not
// S-smooth (falls back to "?" past 64 bits).
std::string factorization_string(const std::optional<PrimeSet>& s,
                                 const Natural& n);

// greedy_vs_actual with the survey routed through the persistent cache.
GreedyComparison cached_compare(const PrimeSet& s, unsigned rank,
                                const EnumOptions& opts = {});

// Serializations shared by the shared-library API and the CLI.
std::string solution_set_to_json(const SolutionSet& set);
std::string solution_set_to_csv(const SolutionSet& set);
std::string table_to_json(const Table& t);
std::string table_to_csv(const Table& t);

}  // namespace unitfrac
