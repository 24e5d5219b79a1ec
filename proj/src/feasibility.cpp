#include "unitfrac/feasibility.hpp"

#include <numeric>
#include <stdexcept>

namespace unitfrac {

std::uint64_t gcd_condition(const PrimeSet& s) {
  std::uint64_t g = 0;
  for (std::uint64_t p : s.primes()) g = std::gcd(g, p - 1);
  return g;
}

bool is_admissible(const PrimeSet& s, unsigned rank) {
  if (rank < 1) return false;
  if (s.min_prime() > rank) return false;
  std::uint64_t g = gcd_condition(s);
  return g == 0 || (rank - 1) % g == 0;
}

std::vector<Natural> sylvester(unsigned count) {
  std::vector<Natural> out;
  out.reserve(count);
  Natural s = 2;
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(s);
    s = s * (s - 1) + 1;
  }
  return out;
}

std::vector<Natural> u_sequence(unsigned count) {
  std::vector<Natural> out;
  out.reserve(count);
  Natural u = 1;
  for (unsigned i = 0; i < count; ++i) {
    out.push_back(u);
    u = u * (u + 1);
  }
  return out;
}

unsigned one_prime_cap(std::uint64_t p, unsigned rank) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("p must be prime");
  if (rank < 1) throw std::invalid_argument("rank must be positive");
  if ((rank - 1) % (p - 1) != 0) {
    throw std::invalid_argument("(p-1) does not divide (rank-1)");
  }
  return static_cast<unsigned>((rank - 1) / (p - 1));
}

}  // namespace unitfrac
