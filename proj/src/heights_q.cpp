#include "ellspec/heights_q.hpp"

#include <algorithm>

namespace ellspec {

namespace {

// smallest d >= 1 with d^i a_i integral for all coefficients
Integer integrality_scale(const CurveQ& E) {
    Integer d(1);
    d = lcm(d, E.a1.get_den());
    d = lcm(d, E.a2.get_den());
    d = lcm(d, E.a3.get_den());
    d = lcm(d, E.a4.get_den());
    d = lcm(d, E.a6.get_den());
    return d;
}

} // namespace

CurveDataQ::CurveDataQ(const CurveQ& E) : original(E), curve(E) {
    Integer d = integrality_scale(E);
    integralize = ModelTransform{Rational(1, d), Rational(0), Rational(0), Rational(0)};
    if (d > 1) curve = integralize.apply(E);
    Rational D = curve.discriminant();
    disc = D.get_num();
    disc_factors = int_factor(disc);
    for (const auto& [p, e] : disc_factors) {
        (void)e;
        reduction.emplace(p, tate_at_prime(curve, p));
    }
}

Real naive_height_q(const CurveQ&, const PointQ& P) {
    if (P.infinity) return Real(0);
    return log_rational_height(P.x);
}

Real local_height_arch(const CurveQ& E, const PointQ& P, const Real& eps) {
    if (P.infinity) throw ArgumentError("local_height_arch: affine point required");
    Real b2(E.b2()), b4(E.b4()), b6(E.b6()), b8(E.b8());
    // translated invariants for the x+1 chart
    Real b2d = b2 - Real(12), b4d = b4 - b2 + Real(6), b6d = b6 - Real(2) * b4 + b2 - Real(4),
         b8d = b8 - Real(3) * b6 + Real(3) * b4 - b2 + Real(3);
    Real x(P.x);

    bool beta;
    Real t;
    if (abs(x) < Real(0.5)) {
        t = Real(1) / (x + Real(1));
        beta = false;
    } else {
        t = Real(1) / x;
        beta = true;
    }
    Real mu = -log(abs(t));

    // per-term bound: |log z| stays below log of the coefficient box; stop
    // when the geometric tail falls under eps/4, with a hard cap
    Real box = Real(7);
    for (const Real* b : {&b2, &b4, &b6, &b8, &b2d, &b4d, &b6d, &b8d}) box = box + abs(*b);
    Real logbox = log(box) + Real(2);
    const int cap = 600;

    Real f(1);
    for (int n = 0; n < cap; ++n) {
        f = f / Real(4);
        Real w, z, zw;
        if (beta) {
            w = t * (Real(4) + t * (b2 + t * (Real(2) * b4 + t * b6)));
            z = Real(1) - t * t * (b4 + t * (Real(2) * b6 + t * b8));
            zw = z + w;
        } else {
            w = t * (Real(4) + t * (b2d + t * (Real(2) * b4d + t * b6d)));
            z = Real(1) - t * t * (b4d + t * (Real(2) * b6d + t * b8d));
            zw = z - w;
        }
        if (abs(w) <= Real(2) * abs(z)) {
            mu += f * log(abs(z));
            if (mpfr_zero_p(w.raw())) break;  // exact torsion orbit reached O
            t = w / z;
        } else {
            mu += f * log(abs(zw));
            t = w / zw;
            beta = !beta;
        }
        // tail estimate: remaining terms bounded by f * logbox / 3
        if (f * logbox < eps * Real(0.25)) break;
    }
    return mu;  // full normalization: no final halving
}

Rational local_height_nonarch_coeff(const PointQ& P_orig, const ReductionData& red) {
    if (P_orig.infinity) return Rational(0);
    const CurveQ& E = red.local_model;
    PointQ P = red.to_minimal.forward(P_orig);
    const Integer& p = red.p;

    const Rational &x = P.x, &y = P.y;
    long A = valuation(3 * x * x + 2 * E.a2 * x + E.a4 - E.a1 * y, p);
    long B = valuation(2 * y + E.a1 * x + E.a3, p);
    Rational Lambda;
    if (A <= 0 || B <= 0) {
        long vx = valuation(x, p);
        Lambda = Rational(std::max(0L, vx == val_infinite ? 0L : -vx));
    } else if (valuation(E.c4(), p) == 0) {
        // multiplicative: component index alpha = min(B, N/2) (rational)
        Rational N(red.v_min_disc);
        Rational alpha = Rational(B);
        Rational half_n = N / Rational(2);
        if (half_n < alpha) alpha = half_n;
        Lambda = -(alpha * (N - alpha)) / N;
    } else {
        Rational b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), b8 = E.b8();
        long C = valuation(3 * x * x * x * x + b2 * x * x * x + 3 * b4 * x * x + 3 * b6 * x + b8, p);
        // B and C cannot both be infinite (P would be 2- and 3-torsion at once);
        // exact 2-torsion (B infinite) lands in the -C/4 branch
        if (C >= 3 * B && B != val_infinite)
            Lambda = Rational(-2 * B, 3);
        else
            Lambda = Rational(-C, 4);
    }
    // model shift back to the curve the caller handed in
    return Lambda - Rational(2 * red.u_valuation);
}

HeightRecordQ canonical_height_q(const CurveDataQ& C, const PointQ& P_in) {
    HeightRecordQ rec{P_in, naive_height_q(C.original, P_in), Real(0), {}};
    if (P_in.infinity) return rec;
    if (!C.original.on_curve(P_in)) throw ContractViolation("canonical_height_q: point not on curve");

    PointQ P = C.to_integral(P_in);
    // series tolerance tied to the working precision
    Real eps = ldexp2(Real(1), -static_cast<long>(Real::default_precision()) + 24);
    if (!(eps < Real(1e-12))) eps = Real(1e-12) * Real(1e-4);
    Real linf = local_height_arch(C.curve, P, eps);
    rec.local_terms["inf"] = linf;
    Real total = linf;

    // primes: denominator of x(P) plus the bad primes of the integral model
    std::map<Integer, Rational> coeffs;
    Integer den = P.x.get_den();
    if (den > 1)
        for (const auto& [p, e] : int_factor(den)) {
            (void)e;
            if (!C.reduction.count(p)) {
                long vx = valuation(P.x, p);
                coeffs[p] = Rational(-vx);  // good reduction, pole part only
            }
        }
    for (const auto& [p, red] : C.reduction) {
        Rational L = local_height_nonarch_coeff(P, red);
        if (L != 0) coeffs[p] = L;
    }
    for (const auto& [p, L] : coeffs) {
        Real term = Real(L) * log_mpz(p);
        rec.local_terms[p.get_str()] = term;
        total += term;
    }
    rec.canonical = total;
    return rec;
}

Real canonical_height_value(const CurveDataQ& C, const PointQ& P) {
    return canonical_height_q(C, P).canonical;
}

Real height_pairing_q(const CurveDataQ& C, const PointQ& P, const PointQ& Q) {
    PointQ S = C.original.add(P, Q);
    Real h_s = canonical_height_value(C, S);
    Real h_p = canonical_height_value(C, P);
    Real h_q = canonical_height_value(C, Q);
    return (h_s - h_p - h_q) / Real(2);
}

GramQ gram_q(const CurveDataQ& C, const std::vector<PointQ>& pts) {
    std::size_t n = pts.size();
    GramQ G;
    G.entries.assign(n, std::vector<Real>(n, Real(0)));
    std::vector<Real> hs(n);
    for (std::size_t i = 0; i < n; ++i) hs[i] = canonical_height_value(C, pts[i]);
    for (std::size_t i = 0; i < n; ++i) {
        G.entries[i][i] = hs[i];
        for (std::size_t j = i + 1; j < n; ++j) {
            Real h_sum = canonical_height_value(C, C.original.add(pts[i], pts[j]));
            Real v = (h_sum - hs[i] - hs[j]) / Real(2);
            G.entries[i][j] = v;
            G.entries[j][i] = v;
        }
    }
    // determinant by Gaussian elimination with partial pivoting
    auto m = G.entries;
    Real det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        for (std::size_t r = k + 1; r < n; ++r)
            if (abs(m[r][k]) > abs(m[piv][k])) piv = r;
        if (piv != k) {
            std::swap(m[piv], m[k]);
            det = -det;
        }
        if (mpfr_zero_p(m[k][k].raw())) { det = Real(0); break; }
        det *= m[k][k];
        for (std::size_t r = k + 1; r < n; ++r) {
            Real f = m[r][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
        }
    }
    G.det = n == 0 ? Real(1) : det;
    return G;
}

bool torsion_test_q(const CurveDataQ& C, const PointQ& P, long bound) {
    if (P.infinity) return true;
    bool mult_torsion = false;
    PointQ Q = PointQ::O();
    for (long n = 1; n <= bound; ++n) {
        Q = C.original.add(Q, P);
        if (Q.infinity) { mult_torsion = true; break; }
    }
    Real h = canonical_height_value(C, P);
    bool height_torsion = h < Real(1e-10);
    if (mult_torsion != height_torsion)
        throw InconsistencyError("torsion_test_q: multiplication and height criteria disagree (hhat = " +
                                 format_sig(h, 6) + ")");
    return mult_torsion;
}

} // namespace ellspec
