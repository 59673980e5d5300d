#pragma once

#include <map>
#include <vector>

#include "ellspec/rational.hpp"

namespace ellspec {

// prime -> exponent, primes ascending. Sign is not part of the factorization.
using Factorization = std::map<Integer, int>;

// Factor |n|, n != 0. Trial division to 10^6, then Brent's rho on the
// remaining cofactor with an iteration budget; exceeding the budget is a
// ResourceError. n = 0 is an ArgumentError.
Factorization int_factor(const Integer& n);

bool is_probable_prime(const Integer& n);

// Multiset of the distinct primes of |n| (n != 0).
std::vector<Integer> prime_support(const Integer& n);

} // namespace ellspec
