#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "unitfrac/enumerate.hpp"
#include "unitfrac/numeric.hpp"

namespace unitfrac {

// Checks are optional: smoothness fields are only set when a prime set is
// supplied, rank_matches only when an expected rank is supplied.
struct VerificationReport {
  bool sum_is_one = false;
  bool sorted = false;  // weakly increasing, all denominators >= 1
  std::optional<bool> all_smooth;
  std::vector<std::optional<SmoothNumber>> factorizations;
  std::optional<bool> all_primes_used;
  std::optional<bool> rank_matches;

  bool pass() const;
};

VerificationReport verify_solution(const Solution& sol,
                                   const std::optional<PrimeSet>& s = {},
                                   std::optional<unsigned> expected_rank = {},
                                   bool require_all_primes = false);

// (p-1) copies of each of p, p^2, ..., p^N plus one extra p^N, where
// N = (rank-1)/(p-1).  Requires rank ≡ 1 (mod p-1) and rank >= p.
Solution canonical_one_prime(std::uint64_t p, unsigned rank);

// [..., x] -> [..., 2x, 2x]: a rank-R solution becomes rank R+1.  The input
// must itself verify.
Solution double_last(const Solution& sol);

// Fermat prime F_n = 2^(2^n) + 1, n <= 4:
// [2, 4, ..., 2^(2^n), F_n, F_n^2, ..., F_n^(R-2^n-1), 2^(2^n) F_n^(R-2^n-1)].
// Requires rank >= 2^n + 2.
Solution fermat_family(unsigned n, unsigned rank);

// Mersenne prime p = 2^q - 1:
// [2, ..., 2^(q-1), p, 2p, ..., 2^(q-2) p, 2^(2q-1), ..., 2^(Tq-1), 2^(Tq-1) p]
// with T = rank - 2q + 2.  Requires 2^q - 1 prime and rank >= 2q - 1.
Solution mersenne_family(unsigned q, unsigned rank);

// Candidate tuples [2, 4, ..., 2^(R-3), p, 2^(R-l-3) p, 2^(R-3) p] for
// l = 0..R-4; returns the first that verifies exactly, or nullopt.  Works
// out to the primes p = 2^(R-3) + 2^l + 1.
std::optional<Solution> pow2_gap_family(std::uint64_t p, unsigned rank);

}  // namespace unitfrac
