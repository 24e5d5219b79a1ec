#include "unitfrac/numeric.hpp"

#include <algorithm>
#include <stdexcept>

namespace unitfrac {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp,
                         std::uint64_t m) {
  std::uint64_t acc = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) acc = mulmod_u64(acc, base, m);
    base = mulmod_u64(base, base, m);
    exp >>= 1;
  }
  return acc;
}

// Strong probable-prime test to base a; n odd, n > 2, n - 1 = d * 2^r.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a) {
  a %= n;
  if (a == 0) return true;
  std::uint64_t d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  std::uint64_t x = powmod_u64(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < r; ++i) {
    x = mulmod_u64(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

// Sufficient witness set for every n < 3.3e24, in particular all of 2^64.
constexpr std::uint64_t kWitnesses[] = {2,  3,  5,  7,  11, 13,
                                        17, 19, 23, 29, 31, 37};

constexpr std::uint64_t kTrialCutoff = 10'000'000;

}  // namespace

Rational make_rational(const Natural& num, const Natural& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational unit_fraction(const Natural& den) { return make_rational(1, den); }

Natural floor_div(const Natural& a, const Natural& b) {
  Natural q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Natural ceil_div(const Natural& a, const Natural& b) {
  Natural q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Natural pow_ui(std::uint64_t base, unsigned long exp) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < kTrialCutoff) {
    for (std::uint64_t d = 11; d * d <= n; d += 2) {
      if (n % d == 0) return false;
    }
    return true;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!strong_probable_prime(n, a)) return false;
  }
  return true;
}

bool is_prime(const Natural& n) {
  if (n.fits_ulong_p()) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  if (n < 0) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
  if (primes_.empty()) throw std::invalid_argument("empty prime set");
  std::sort(primes_.begin(), primes_.end());
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0 && primes_[i] == primes_[i - 1]) {
      throw std::invalid_argument("duplicate prime " +
                                  std::to_string(primes_[i]));
    }
    if (!is_prime(primes_[i])) {
      throw std::invalid_argument(std::to_string(primes_[i]) +
                                  " is not prime");
    }
  }
}

std::string PrimeSet::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < primes_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(primes_[i]);
  }
  return out;
}

namespace {
struct NodeGreater {
  template <typename N>
  bool operator()(const N& a, const N& b) const {
    return a.value > b.value;
  }
};
}  // namespace

SmoothStream::SmoothStream(PrimeSet s, unsigned exponent_cap)
    : set_(std::move(s)), cap_(exponent_cap) {
  for (std::size_t j = 0; j < set_.size(); ++j) {
    Node n;
    n.value = Natural(set_.primes()[j]);
    n.exponents.assign(set_.size(), 0);
    n.exponents[j] = 1;
    n.low = j;
    heap_.push_back(std::move(n));
  }
  std::make_heap(heap_.begin(), heap_.end(), NodeGreater{});
}

void SmoothStream::push_children(const Node& n) {
  for (std::size_t j = n.low; j < set_.size(); ++j) {
    if (cap_ != 0 && n.exponents[j] >= cap_) continue;
    Node child;
    child.value = n.value * set_.primes()[j];
    child.exponents = n.exponents;
    ++child.exponents[j];
    child.low = j;
    heap_.push_back(std::move(child));
    std::push_heap(heap_.begin(), heap_.end(), NodeGreater{});
  }
}

const Natural& SmoothStream::peek() {
  if (heap_.empty()) throw std::logic_error("exhausted smooth stream");
  return heap_.front().value;
}

SmoothNumber SmoothStream::next() {
  if (heap_.empty()) throw std::logic_error("exhausted smooth stream");
  std::pop_heap(heap_.begin(), heap_.end(), NodeGreater{});
  Node n = std::move(heap_.back());
  heap_.pop_back();
  push_children(n);
  return SmoothNumber{std::move(n.value), std::move(n.exponents)};
}

namespace {

void collect_smooth(const PrimeSet& s, std::size_t idx, const Natural& value,
                    std::vector<unsigned>& exps, const Natural& lower,
                    const Natural& upper, unsigned cap,
                    std::vector<SmoothNumber>& out) {
  if (idx == s.size()) {
    if (value >= lower) out.push_back(SmoothNumber{value, exps});
    return;
  }
  Natural v = value;
  for (unsigned e = 0;; ++e) {
    if (cap != 0 && e > cap) break;
    if (v > upper) break;
    exps[idx] = e;
    collect_smooth(s, idx + 1, v, exps, lower, upper, cap, out);
    v *= s.primes()[idx];
  }
  exps[idx] = 0;
}

}  // namespace

std::vector<SmoothNumber> smooth_stream(const PrimeSet& s, const Natural& lower,
                                        const Natural& upper,
                                        unsigned exponent_cap) {
  std::vector<SmoothNumber> out;
  Natural lo = lower < 2 ? Natural(2) : lower;
  if (upper < lo) return out;
  std::vector<unsigned> exps(s.size(), 0);
  collect_smooth(s, 0, Natural(1), exps, lo, upper, exponent_cap, out);
  std::sort(out.begin(), out.end(),
            [](const SmoothNumber& a, const SmoothNumber& b) {
              return a.value < b.value;
            });
  return out;
}

SmoothNumber next_smooth_geq(const PrimeSet& s, const Rational& x) {
  if (x <= 1) throw std::invalid_argument("next_smooth_geq requires x > 1");
  Natural lo = ceil_div(x.get_num(), x.get_den());
  Natural hi = lo * s.min_prime();
  std::vector<SmoothNumber> window = smooth_stream(s, lo, hi);
  // Nonempty: the least power of min(S) at or above lo is below min(S)*lo.
  return window.front();
}

std::optional<SmoothNumber> factor_over(const PrimeSet& s, const Natural& n) {
  if (n < 1) return std::nullopt;
  SmoothNumber out{n, std::vector<unsigned>(s.size(), 0)};
  Natural rest = n;
  for (std::size_t j = 0; j < s.size(); ++j) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), s.primes()[j])) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), s.primes()[j]);
      ++out.exponents[j];
    }
  }
  if (rest != 1) return std::nullopt;
  return out;
}

SmoothTable::SmoothTable(const PrimeSet& s, unsigned exponent_cap)
    : stream_(s, exponent_cap) {}

void SmoothTable::extend_to(const Natural& hi) {
  while (!stream_.exhausted() && stream_.peek() <= hi) {
    values_.push_back(stream_.next());
  }
}

std::pair<std::size_t, std::size_t> SmoothTable::range(const Natural& lo,
                                                       const Natural& hi) {
  if (hi < lo) return {0, 0};
  extend_to(hi);
  auto cmp = [](const SmoothNumber& n, const Natural& v) { return n.value < v; };
  auto first = std::lower_bound(values_.begin(), values_.end(), lo, cmp);
  auto last = std::lower_bound(first, values_.end(), hi + 1, cmp);
  return {static_cast<std::size_t>(first - values_.begin()),
          static_cast<std::size_t>(last - values_.begin())};
}

}  // namespace unitfrac
