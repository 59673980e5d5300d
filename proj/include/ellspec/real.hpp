#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace ellspec {

// Radix-2 floating point with explicit significand precision (MPFR).
// All operations round to nearest; results are bit-reproducible across
// runs and thread counts for a fixed precision.
class Real {
  public:
    static mpfr_prec_t default_precision();
    static void set_default_precision(mpfr_prec_t bits);  // >= 64 enforced

    struct WithPrec { mpfr_prec_t bits; };
    Real() { mpfr_init2(v_, default_precision()); mpfr_set_zero(v_, 1); }
    explicit Real(WithPrec p) { mpfr_init2(v_, p.bits); mpfr_set_zero(v_, 1); }
    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~Real() { mpfr_clear(v_); }

    Real(double x) : Real() { mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(int x) : Real() { mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const mpz_class& z) : Real() { mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN); }
    Real(const mpq_class& q) : Real() { mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN); }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_nan() const { return mpfr_nan_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    friend Real operator+(const Real& a, const Real& b) { Real r(WithPrec{maxp(a, b)}); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(WithPrec{maxp(a, b)}); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(WithPrec{maxp(a, b)}); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(WithPrec{maxp(a, b)}); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(WithPrec{precision()}); mpfr_neg(r.v_, v_, MPFR_RNDN); return r; }

    Real& operator+=(const Real& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_div(v_, v_, o.v_, MPFR_RNDN); return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.v_, b.v_) != 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

  private:
    static mpfr_prec_t maxp(const Real& a, const Real& b) {
        return a.precision() > b.precision() ? a.precision() : b.precision();
    }
    mpfr_t v_;
};

Real abs(const Real& x);
Real log(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real pow_ui(const Real& x, unsigned long n);
Real ldexp2(const Real& x, long e);  // x * 2^e, exact

Real log_mpz(const mpz_class& n);             // log |n|, n != 0
Real log_rational_height(const mpq_class& q); // log max(|num|, den)

// Decimal formatting with a fixed number of significant digits ("%.*g"-style),
// used for all report/CSV output so that byte-determinism is easy to audit.
std::string format_sig(const Real& x, int sig_digits);
std::string format_sig(double x, int sig_digits);

} // namespace ellspec
