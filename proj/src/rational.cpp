#include "ellspec/rational.hpp"

namespace ellspec {

Rational normalize_rational(const Integer& n, const Integer& d) {
    if (d == 0) throw DivisionByZeroError("normalize_rational: zero denominator");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

long valuation_int(const Integer& n, const Integer& p) {
    if (n == 0) return val_infinite;
    mpz_class r = n;
    long v = 0;
    while (mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

long valuation(const Rational& x, const Integer& p) {
    if (x == 0) return val_infinite;
    long v = valuation_int(x.get_num(), p);
    if (v > 0) return v;
    return -valuation_int(x.get_den(), p);
}

Integer pow_int(const Integer& b, long e) {
    if (e < 0) throw ArgumentError("pow_int: negative exponent");
    Integer r(1), base = b;
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

} // namespace ellspec
