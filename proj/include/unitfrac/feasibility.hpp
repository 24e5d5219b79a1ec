#pragma once

#include <cstdint>
#include <vector>

#include "unitfrac/numeric.hpp"

namespace unitfrac {

// gcd(p - 1 : p in S).
std::uint64_t gcd_condition(const PrimeSet& s);

// Necessary conditions for a rank-R solution over S to exist: the gcd
// divides R - 1 and min(S) <= R.  Not sufficient ({2,11} at rank 5 is
// admissible yet empty).
bool is_admissible(const PrimeSet& s, unsigned rank);

// Sylvester sequence 2, 3, 7, 43, 1807, ...  s_i = s_{i-1}(s_{i-1}-1)+1.
std::vector<Natural> sylvester(unsigned count);

// u_i = u_{i-1}(u_{i-1}+1) from u_1 = 1: 1, 2, 6, 42, 1806, ...
std::vector<Natural> u_sequence(unsigned count);

// Largest exponent that can occur in a rank-R solution with denominators
// powers of p: (R-1)/(p-1).  Rejects R with (p-1) not dividing (R-1).
unsigned one_prime_cap(std::uint64_t p, unsigned rank);

}  // namespace unitfrac
