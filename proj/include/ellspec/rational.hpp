#pragma once

#include <gmpxx.h>

#include "ellspec/error.hpp"

namespace ellspec {

using Integer = mpz_class;
using Rational = mpq_class;

// Lowest terms, positive denominator; d = 0 is a division-by-zero error.
Rational normalize_rational(const Integer& n, const Integer& d);

inline Rational rat(long n, long d = 1) { return normalize_rational(Integer(n), Integer(d)); }

// p-adic valuation of a nonzero rational. val_infinite() marks v_p(0).
constexpr long val_infinite = 1L << 40;
long valuation(const Rational& x, const Integer& p);
long valuation_int(const Integer& n, const Integer& p);  // n != 0

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

Integer pow_int(const Integer& b, long e);  // e >= 0

} // namespace ellspec
