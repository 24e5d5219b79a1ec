#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "unitfrac/numeric.hpp"

namespace unitfrac {

// Weakly increasing denominators of a representation 1 = sum 1/x_i.
struct Solution {
  std::vector<Natural> denominators;

  unsigned rank() const { return static_cast<unsigned>(denominators.size()); }
  bool operator==(const Solution& other) const = default;
};

// Solutions in lexicographic order of their denominator sequences.
// prime_set is empty for unrestricted enumerations.
struct SolutionSet {
  std::optional<PrimeSet> prime_set;
  unsigned rank = 0;
  std::vector<Solution> solutions;
};

std::optional<Natural> max_denominator(const SolutionSet& set);

struct EnumOptions {
  bool require_all_primes = false;
  unsigned parallel_width = 0;  // worker threads over the first denominator; 0 = caller thread
  unsigned exponent_cap = 0;    // cap every candidate exponent (legacy pregeneration); 0 = none
  bool emit_progress = false;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Counting pass that never stores solutions.  proper counts those using
// every prime of S; the maxima track the largest denominator seen.
struct SurveyResult {
  std::uint64_t total = 0;
  std::uint64_t proper = 0;
  std::optional<Natural> max_denom;
  std::optional<Natural> max_denom_proper;
};

class SearchTimeout : public std::runtime_error {
 public:
  SearchTimeout() : std::runtime_error("search deadline exceeded") {}
};

class IntractableError : public std::runtime_error {
 public:
  explicit IntractableError(const std::string& what) : std::runtime_error(what) {}
};

// All rank-R solutions with S-smooth denominators.  Backtracking over lazily
// generated smooth candidates d in [last, (R-s)/residual]; prefixes whose
// residual cannot be met are cut, the final denominator is completed exactly.
SolutionSet enumerate_restricted(const PrimeSet& s, unsigned rank,
                                 const EnumOptions& opts = {});
SurveyResult survey_restricted(const PrimeSet& s, unsigned rank,
                               const EnumOptions& opts = {});
// (total, proper).  total - proper equals the sum of single-prime counts
// when |S| = 2.
std::pair<std::uint64_t, std::uint64_t> count_restricted(
    const PrimeSet& s, unsigned rank, const EnumOptions& opts = {});

// Solutions whose denominators are powers of one prime.  Empty when
// (p-1) does not divide (rank-1); exponents never exceed (rank-1)/(p-1).
SolutionSet enumerate_one_prime(std::uint64_t p, unsigned rank);
std::uint64_t count_one_prime(
    std::uint64_t p, unsigned rank,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

// Every rank-R solution over the positive integers, via the staged search
// with position bounds j <= X_j <= u_j(R-j+1).  Ranks beyond the limit are
// refused unless forced: the search space explodes with the u-sequence.
inline constexpr unsigned kUnrestrictedRankLimit = 6;

struct UnrestrictedOptions {
  bool force = false;
};

SolutionSet enumerate_unrestricted(unsigned rank,
                                   const UnrestrictedOptions& opts = {});

// Least rank at which a solution using every prime of S exists, scanning
// admissible ranks only.  nullopt when none exists up to max_rank.
std::optional<unsigned> lowest_rank(
    const PrimeSet& s, unsigned max_rank,
    std::optional<std::chrono::steady_clock::time_point> deadline = {});

}  // namespace unitfrac
