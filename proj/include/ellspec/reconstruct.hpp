#pragma once

#include <optional>

#include "ellspec/real.hpp"

namespace ellspec {

// Continued-fraction recovery of p/q from a real approximation: returns the
// convergent with q <= denom_bound and |x - p/q| <= tol, if any.
std::optional<mpq_class> rational_reconstruct(const Real& x, const mpz_class& denom_bound, const Real& tol);

} // namespace ellspec
