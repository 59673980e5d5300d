#include "ellspec/real.hpp"

#include <atomic>
#include <cstdio>
#include <cstring>

namespace ellspec {

namespace {
std::atomic<mpfr_prec_t> g_default_prec{128};
}

mpfr_prec_t Real::default_precision() { return g_default_prec.load(); }

void Real::set_default_precision(mpfr_prec_t bits) {
    if (bits < 64) bits = 64;
    g_default_prec.store(bits);
}

Real abs(const Real& x) { Real r(Real::WithPrec{x.precision()}); mpfr_abs(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real log(const Real& x) { Real r(Real::WithPrec{x.precision()}); mpfr_log(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real sqrt(const Real& x) { Real r(Real::WithPrec{x.precision()}); mpfr_sqrt(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real exp(const Real& x) { Real r(Real::WithPrec{x.precision()}); mpfr_exp(r.raw(), x.raw(), MPFR_RNDN); return r; }
Real pow_ui(const Real& x, unsigned long n) { Real r(Real::WithPrec{x.precision()}); mpfr_pow_ui(r.raw(), x.raw(), n, MPFR_RNDN); return r; }
Real ldexp2(const Real& x, long e) { Real r(Real::WithPrec{x.precision()}); mpfr_mul_2si(r.raw(), x.raw(), e, MPFR_RNDN); return r; }

Real log_mpz(const mpz_class& n) {
    Real z(n);
    Real r(Real::WithPrec{z.precision()});
    mpfr_abs(z.raw(), z.raw(), MPFR_RNDN);
    mpfr_log(r.raw(), z.raw(), MPFR_RNDN);
    return r;
}

Real log_rational_height(const mpq_class& q) {
    mpz_class a = abs(q.get_num());
    const mpz_class& b = q.get_den();
    return log_mpz(a > b ? a : b);
}

std::string format_sig(const Real& x, int sig_digits) {
    char buf[128];
    mpfr_snprintf(buf, sizeof(buf), "%.*Rg", sig_digits, x.raw());
    return buf;
}

std::string format_sig(double x, int sig_digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig_digits, x);
    return buf;
}

} // namespace ellspec
