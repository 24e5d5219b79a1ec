#include "unitfrac/families.hpp"

#include <stdexcept>

#include "unitfrac/feasibility.hpp"

namespace unitfrac {

bool VerificationReport::pass() const {
  return sum_is_one && sorted && all_smooth.value_or(true) &&
         all_primes_used.value_or(true) && rank_matches.value_or(true);
}

VerificationReport verify_solution(const Solution& sol,
                                   const std::optional<PrimeSet>& s,
                                   std::optional<unsigned> expected_rank,
                                   bool require_all_primes) {
  VerificationReport report;
  report.sorted = !sol.denominators.empty() && sol.denominators.front() >= 1;
  Rational sum = 0;
  for (std::size_t i = 0; i < sol.denominators.size(); ++i) {
    const Natural& d = sol.denominators[i];
    if (d < 1 || (i > 0 && d < sol.denominators[i - 1])) report.sorted = false;
    if (d >= 1) sum += Rational(Natural(1), d);
  }
  report.sum_is_one = sum == 1;
  if (expected_rank) report.rank_matches = sol.rank() == *expected_rank;
  if (s) {
    report.all_smooth = true;
    std::vector<bool> used(s->size(), false);
    for (const Natural& d : sol.denominators) {
      auto f = factor_over(*s, d);
      if (f) {
        for (std::size_t j = 0; j < s->size(); ++j) {
          if (f->exponents[j] > 0) used[j] = true;
        }
      } else {
        report.all_smooth = false;
      }
      report.factorizations.push_back(std::move(f));
    }
    if (require_all_primes) {
      bool all = true;
      for (bool u : used) all = all && u;
      report.all_primes_used = all;
    }
  }
  return report;
}

namespace {

// Families are constructed from proven identities; a failed check here
// means the construction itself is wrong.
Solution checked(Solution sol) {
  if (!verify_solution(sol).pass()) {
    throw std::logic_error("family tuple failed verification");
  }
  return sol;
}

}  // namespace

Solution canonical_one_prime(std::uint64_t p, unsigned rank) {
  unsigned n = one_prime_cap(p, rank);  // rejects (p-1) not dividing (rank-1)
  if (n == 0) throw std::invalid_argument("rank must be at least p");
  Solution sol;
  sol.denominators.reserve(rank);
  for (unsigned e = 1; e <= n; ++e) {
    Natural power = pow_ui(p, e);
    for (std::uint64_t c = 0; c + 1 < p; ++c) sol.denominators.push_back(power);
  }
  sol.denominators.push_back(pow_ui(p, n));
  return checked(std::move(sol));
}

Solution double_last(const Solution& sol) {
  if (!verify_solution(sol).pass()) {
    throw std::invalid_argument("input does not verify");
  }
  Solution out = sol;
  Natural doubled = out.denominators.back() * 2;
  out.denominators.back() = doubled;
  out.denominators.push_back(std::move(doubled));
  return out;
}

Solution fermat_family(unsigned n, unsigned rank) {
  if (n > 4) throw std::invalid_argument("2^(2^n)+1 is composite beyond n = 4");
  unsigned k = 1u << n;
  if (rank < k + 2) throw std::invalid_argument("rank must be at least 2^n + 2");
  Natural p = pow_ui(2, k) + 1;
  Solution sol;
  sol.denominators.reserve(rank);
  for (unsigned e = 1; e <= k; ++e) sol.denominators.push_back(pow_ui(2, e));
  Natural power = p;
  for (unsigned j = 1; j <= rank - k - 1; ++j) {
    sol.denominators.push_back(power);
    power *= p;
  }
  sol.denominators.push_back(pow_ui(2, k) * sol.denominators.back());
  return checked(std::move(sol));
}

Solution mersenne_family(unsigned q, unsigned rank) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  Natural p = pow_ui(2, q) - 1;
  if (!is_prime(p)) {
    throw std::invalid_argument("2^" + std::to_string(q) + "-1 is not prime");
  }
  if (rank < 2 * q - 1) {
    throw std::invalid_argument("rank must be at least 2q - 1");
  }
  unsigned t = rank - 2 * q + 2;
  Solution sol;
  sol.denominators.reserve(rank);
  for (unsigned e = 1; e <= q - 1; ++e) sol.denominators.push_back(pow_ui(2, e));
  sol.denominators.push_back(p);
  for (unsigned k = 1; k + 1 <= q - 1; ++k) {
    sol.denominators.push_back(pow_ui(2, k) * p);
  }
  for (unsigned k = 2; k <= t; ++k) {
    sol.denominators.push_back(pow_ui(2, k * q - 1));
  }
  sol.denominators.push_back(pow_ui(2, t * q - 1) * p);
  return checked(std::move(sol));
}

std::optional<Solution> pow2_gap_family(std::uint64_t p, unsigned rank) {
  if (rank < 4) return std::nullopt;
  for (unsigned l = 0; l + 4 <= rank; ++l) {
    Solution sol;
    sol.denominators.reserve(rank);
    for (unsigned e = 1; e <= rank - 3; ++e) {
      sol.denominators.push_back(pow_ui(2, e));
    }
    sol.denominators.push_back(Natural(p));
    sol.denominators.push_back(pow_ui(2, rank - l - 3) * p);
    sol.denominators.push_back(pow_ui(2, rank - 3) * p);
    if (verify_solution(sol).pass()) return sol;
  }
  return std::nullopt;
}

}  // namespace unitfrac
