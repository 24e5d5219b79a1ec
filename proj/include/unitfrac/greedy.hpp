#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unitfrac/enumerate.hpp"
#include "unitfrac/numeric.hpp"

namespace unitfrac {

struct GreedyResult {
  std::vector<Natural> prefix;  // the rank-1 accepted denominators
  Rational sigma;               // their sum, strictly below 1
  Rational gamma;               // 1/(1 - sigma)
  Natural bound;                // least S-smooth integer >= gamma
  bool exact_completion;        // sigma + 1/bound == 1
};

enum class GreedyVerdict {
  kTight,       // bound equals the true maximum denominator
  kSlack,       // bound valid but not attained
  kFailure,     // true maximum exceeds the bound
  kNoSolutions  // no solution uses every prime of S
};

const char* to_string(GreedyVerdict v);

// Scan S-smooth candidates in one ascending pass, accepting every d that
// keeps the running sum strictly below 1, until rank-1 terms are chosen.
// Requires rank >= 2.
GreedyResult greedy_run(const PrimeSet& s, unsigned rank);

// Greedy bound versus the true enumeration.  The maximum is taken over all
// solutions, single-prime ones included; the emptiness test is whether any
// solution uses every prime.
struct GreedyComparison {
  GreedyResult greedy;
  std::uint64_t total_count = 0;
  std::uint64_t proper_count = 0;
  std::optional<Natural> true_max;
  GreedyVerdict verdict = GreedyVerdict::kNoSolutions;
};

// Classifies an already computed bound against an already computed survey.
GreedyComparison compare_greedy(GreedyResult greedy,
                                const SurveyResult& survey);

GreedyComparison greedy_vs_actual(const PrimeSet& s, unsigned rank,
                                  const EnumOptions& opts = {});

}  // namespace unitfrac
