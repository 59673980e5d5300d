#include "ellspec/reconstruct.hpp"

#include "ellspec/error.hpp"

namespace ellspec {

std::optional<mpq_class> rational_reconstruct(const Real& x, const mpz_class& denom_bound, const Real& tol) {
    if (denom_bound < 1) throw ArgumentError("rational_reconstruct: denom_bound must be >= 1");
    if (!(tol > Real(0))) throw ArgumentError("rational_reconstruct: tol must be positive");
    if (x.is_nan()) return std::nullopt;

    // continued fraction of x, convergents p_k/q_k
    Real rem = x;
    mpz_class p0(1), q0(0), p1, q1;  // p1/q1 = floor(x)/1 after first step
    bool first = true;
    mpz_class best_p, best_q(0);

    for (int iter = 0; iter < 256; ++iter) {
        Real fl(Real::WithPrec{rem.precision()});
        mpfr_floor(fl.raw(), rem.raw());
        mpz_class a;
        mpfr_get_z(a.get_mpz_t(), fl.raw(), MPFR_RNDN);
        mpz_class p2, q2;
        if (first) {
            p1 = a; q1 = 1;
            first = false;
        } else {
            p2 = a * p1 + p0;
            q2 = a * q1 + q0;
            p0 = p1; q0 = q1;
            p1 = p2; q1 = q2;
        }
        if (q1 > denom_bound) break;
        best_p = p1;
        best_q = q1;
        // check the convergent before refining further
        Real err = abs(x - Real(mpq_class(p1, q1)));
        if (err <= tol) {
            mpq_class r(p1, q1);
            r.canonicalize();
            return r;
        }
        Real frac = rem - fl;
        if (!(frac > Real(0))) break;  // exact rational reached
        rem = Real(1) / frac;
    }
    if (best_q != 0) {
        mpq_class r(best_p, best_q);
        r.canonicalize();
        if (abs(x - Real(r)) <= tol) return r;
    }
    return std::nullopt;
}

} // namespace ellspec
