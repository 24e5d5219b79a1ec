#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace unitfrac {

// Arbitrary-precision magnitudes and exact fractions.  Rational values are
// kept canonical (lowest terms, positive denominator) by construction.
using Natural = mpz_class;
using Rational = mpq_class;

Rational make_rational(const Natural& num, const Natural& den);
Rational unit_fraction(const Natural& den);

Natural floor_div(const Natural& a, const Natural& b);
Natural ceil_div(const Natural& a, const Natural& b);
Natural pow_ui(std::uint64_t base, unsigned long exp);

// Deterministic for every 64-bit input: trial division for small n, a fixed
// strong-pseudoprime witness set beyond that.
bool is_prime(std::uint64_t n);
// Deterministic below 2^64; larger inputs fall back to GMP's test.
bool is_prime(const Natural& n);

// Strictly increasing list of distinct primes.  Construction sorts and
// validates; duplicates, composites, 0 and 1 are rejected.
class PrimeSet {
 public:
  explicit PrimeSet(std::vector<std::uint64_t> primes);

  const std::vector<std::uint64_t>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  std::uint64_t min_prime() const { return primes_.front(); }
  std::uint64_t max_prime() const { return primes_.back(); }
  // Canonical comma-separated form, e.g. "2,13".
  std::string to_string() const;

  bool operator==(const PrimeSet& other) const = default;

 private:
  std::vector<std::uint64_t> primes_;
};

// A smooth integer together with its exponent vector over the generating
// prime set (exponents[i] belongs to primes()[i]).
struct SmoothNumber {
  Natural value;
  std::vector<unsigned> exponents;

  bool operator==(const SmoothNumber& other) const = default;
};

// Lazy increasing stream of S-smooth integers > 1.  Each value is produced
// exactly once: a node may only multiply primes at or above the largest
// prime index already used, so factorizations are built in index order.
// exponent_cap > 0 limits every exponent (compatibility with capped
// pregeneration); 0 means unbounded.
class SmoothStream {
 public:
  explicit SmoothStream(PrimeSet s, unsigned exponent_cap = 0);

  // A capped stream runs dry; peek and next must not be called after that.
  bool exhausted() const { return heap_.empty(); }
  const Natural& peek();
  SmoothNumber next();

 private:
  struct Node {
    Natural value;
    std::vector<unsigned> exponents;
    std::size_t low;  // smallest prime index a child may multiply
  };

  void push_children(const Node& n);

  PrimeSet set_;
  unsigned cap_;
  std::vector<Node> heap_;  // min-heap by value
};

// All S-smooth integers v with max(lower, 2) <= v <= upper, ascending.
std::vector<SmoothNumber> smooth_stream(const PrimeSet& s, const Natural& lower,
                                        const Natural& upper,
                                        unsigned exponent_cap = 0);

// Least S-smooth integer >= x.  Requires x > 1.  Total: a pure power of the
// smallest prime always lands in [x, min(S)*x].
SmoothNumber next_smooth_geq(const PrimeSet& s, const Rational& x);

// Exponent vector of n over S, or nullopt when n has another prime factor.
// n = 1 yields the all-zero vector.
std::optional<SmoothNumber> factor_over(const PrimeSet& s, const Natural& n);

// Sorted list of all S-smooth integers > 1 seen so far, extended on demand.
// Searches share one table so interval queries are binary searches.  Deque
// storage keeps references from at() valid across later extensions.
class SmoothTable {
 public:
  explicit SmoothTable(const PrimeSet& s, unsigned exponent_cap = 0);

  // Index range [first, last) of values v with lo <= v <= hi.
  std::pair<std::size_t, std::size_t> range(const Natural& lo,
                                            const Natural& hi);
  const SmoothNumber& at(std::size_t i) const { return values_[i]; }

 private:
  void extend_to(const Natural& hi);

  std::deque<SmoothNumber> values_;
  SmoothStream stream_;
};

}  // namespace unitfrac
