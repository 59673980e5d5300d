#include "ellspec/tate.hpp"

#include "ellspec/fppoly.hpp"
#include "ellspec/intfactor.hpp"

namespace ellspec {

std::string KodairaType::str() const {
    switch (cls) {
        case KodairaClass::I0: return "I0";
        case KodairaClass::In: return "I" + std::to_string(n);
        case KodairaClass::II: return "II";
        case KodairaClass::III: return "III";
        case KodairaClass::IV: return "IV";
        case KodairaClass::I0star: return "I0*";
        case KodairaClass::Instar: return "I" + std::to_string(n) + "*";
        case KodairaClass::IVstar: return "IV*";
        case KodairaClass::IIIstar: return "III*";
        case KodairaClass::IIstar: return "II*";
    }
    return "?";
}

long KodairaType::component_count() const {
    switch (cls) {
        case KodairaClass::I0: return 1;
        case KodairaClass::In: return n;
        case KodairaClass::II: return 1;
        case KodairaClass::III: return 2;
        case KodairaClass::IV: return 3;
        case KodairaClass::I0star: return 4;
        case KodairaClass::Instar: return 4;
        case KodairaClass::IVstar: return 3;
        case KodairaClass::IIIstar: return 2;
        case KodairaClass::IIstar: return 1;
    }
    return 1;
}

ModelTransform ModelTransform::then(const ModelTransform& b) const {
    ModelTransform c;
    c.u = u * b.u;
    c.r = r + u * u * b.r;
    c.s = s + u * b.s;
    c.t = t + u * u * b.r * s + u * u * u * b.t;
    return c;
}

PointQ ModelTransform::forward(const PointQ& P) const {
    if (P.infinity) return P;
    Rational xp = (P.x - r) / (u * u);
    Rational yp = (P.y - s * (P.x - r) - t) / (u * u * u);
    return PointQ(xp, yp);
}

PointQ ModelTransform::backward(const PointQ& P) const {
    if (P.infinity) return P;
    Rational x = u * u * P.x + r;
    Rational y = u * u * u * P.y + s * u * u * P.x + t;
    return PointQ(x, y);
}

CurveQ ModelTransform::apply(const CurveQ& E) const {
    Rational u2 = u * u, u3 = u2 * u, u4 = u2 * u2, u6 = u3 * u3;
    Rational a1 = (E.a1 + 2 * s) / u;
    Rational a2 = (E.a2 - s * E.a1 + 3 * r - s * s) / u2;
    Rational a3 = (E.a3 + r * E.a1 + 2 * t) / u3;
    Rational a4 = (E.a4 - s * E.a3 + 2 * r * E.a2 - (t + r * s) * E.a1 + 3 * r * r - 2 * s * t) / u4;
    Rational a6 = (E.a6 + r * E.a4 + r * r * E.a2 + r * r * r - t * E.a3 - t * t - r * t * E.a1) / u6;
    return CurveQ(a1, a2, a3, a4, a6);
}

namespace {

struct TateState {
    Integer p;
    Rational a1, a2, a3, a4, a6;
    ModelTransform tf;  // original -> current

    void shift(const ModelTransform& step) {
        CurveQ cur(a1, a2, a3, a4, a6);
        CurveQ next = step.apply(cur);
        a1 = next.a1; a2 = next.a2; a3 = next.a3; a4 = next.a4; a6 = next.a6;
        tf = tf.then(step);
    }
    CurveQ curve() const { return CurveQ(a1, a2, a3, a4, a6); }
    long v(const Rational& x) const { return valuation(x, p); }
    // residue of a p-integral rational modulo m = p^k (denominator may carry
    // other primes)
    Integer mod_pk(const Rational& x, const Integer& m) const {
        Integer num = x.get_num() % m, den = x.get_den() % m;
        Integer d_inv;
        if (!mpz_invert(d_inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()))
            throw ArgumentError("mod_pk of non-p-integral rational");
        Integer r = (num * d_inv) % m;
        if (r < 0) r += m;
        return r;
    }
    Integer mod_p(const Rational& x) const { return mod_pk(x, p); }
};

// roots of a polynomial (ascending coeffs) over F_p, p prime
std::vector<Integer> roots_mod_p(const std::vector<Integer>& coeffs, const Integer& p) {
    std::vector<Integer> roots;
    if (p < 64) {
        long pl = p.get_si();
        for (long x = 0; x < pl; ++x) {
            Integer acc(0);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = (acc * x + *it) % p;
            if (acc % p == 0) roots.emplace_back(x);
        }
        return roots;
    }
    FpCtx F(p.get_ui());
    FpPoly f(coeffs.size());
    for (std::size_t i = 0; i < coeffs.size(); ++i) f[i] = F.reduce_int(coeffs[i]);
    fp_trim(f);
    if (fp_deg(f) < 1) return roots;
    // gcd(x^p - x, f) collects the F_p-rational roots
    FpPoly xp = fp_powmod(F, FpPoly{0, 1}, Integer(p), f);
    FpPoly xpx = fp_sub(F, xp, FpPoly{0, 1});
    FpPoly g = fp_gcd(F, xpx, f);
    if (fp_deg(g) < 1) return roots;
    for (const auto& [fac, e] : fp_factor(F, g))
        if (fp_deg(fac) == 1) roots.emplace_back(static_cast<unsigned long>(F.sub(0, fac[0])));
    std::sort(roots.begin(), roots.end());
    return roots;
}

// number of distinct roots of a quadratic a y^2 + b y + c in F_p and, when it
// has a double root, that root. Correct in characteristic 2 as well.
struct QuadInfo {
    bool separable;
    int rational_roots;  // 0, 1, or 2 distinct roots in F_p
    Integer double_root; // valid when !separable
};

QuadInfo quad_info(const Integer& a, const Integer& b, const Integer& c, const Integer& p) {
    QuadInfo q{true, 0, Integer(0)};
    if (p == 2) {
        // char 2: separable iff the linear coefficient survives; a double
        // root is sqrt(c/a), which always lies in F_2
        q.separable = (b % 2 != 0);
        auto rts = roots_mod_p({c, b, a}, p);
        q.rational_roots = static_cast<int>(rts.size());
        if (!q.separable) q.double_root = rts.empty() ? Integer((abs(c * a)) % 2) : rts[0];
        return q;
    }
    Integer disc = ((b * b - 4 * a * c) % p + p) % p;
    if (disc == 0) {
        q.separable = false;
        // y0 = -b / 2a
        Integer inv2a;
        Integer two_a = (2 * a) % p;
        if (!mpz_invert(inv2a.get_mpz_t(), two_a.get_mpz_t(), p.get_mpz_t()))
            throw ArgumentError("quad_info: leading coefficient not invertible");
        q.double_root = (((-b % p + p) % p) * inv2a) % p;
        return q;
    }
    q.rational_roots = mpz_legendre(disc.get_mpz_t(), p.get_mpz_t()) == 1 ? 2 : 0;
    return q;
}

} // namespace

ReductionData tate_at_prime(const CurveQ& E_in, const Integer& p) {
    if (p < 2 || !is_probable_prime(p)) throw ArgumentError("tate_at_prime: p must be prime");

    TateState S{p, E_in.a1, E_in.a2, E_in.a3, E_in.a4, E_in.a6, ModelTransform{}};

    // clear p from denominators by an admissible scaling x -> u^2 x, u = p^-k
    long k = 0;
    for (int i = 0; i < 5; ++i) {
        static const int w[5] = {1, 2, 3, 4, 6};
        const Rational* as[5] = {&S.a1, &S.a2, &S.a3, &S.a4, &S.a6};
        long vi = valuation(*as[i], p);
        if (vi == val_infinite || *as[i] == 0) continue;
        if (vi < 0) k = std::max(k, (-vi + w[i] - 1) / w[i]);
    }
    if (k > 0) {
        Rational u(1);
        for (long i = 0; i < k; ++i) u /= Rational(p);
        S.shift(ModelTransform{u, 0, 0, 0});
    }

    auto finish = [&](KodairaType kt, long c, bool split = false) {
        ReductionData R{p, kt, S.v(S.curve().discriminant()), c, S.curve(), S.tf,
                        valuation(S.tf.u, p), split};
        return R;
    };

    for (int round = 0; round < 64; ++round) {
        CurveQ E = S.curve();
        long vD = S.v(E.discriminant());

        // Step 1: good reduction
        if (vD == 0) return finish({KodairaClass::I0, 0}, 1);

        // Step 2: move the singular point to (0, 0)
        Integer x0(0), y0(0);
        if (p <= 3) {
            long pl = p.get_si();
            bool found = false;
            for (long xi = 0; xi < pl && !found; ++xi)
                for (long yi = 0; yi < pl && !found; ++yi) {
                    // F = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
                    Rational F = Rational(yi) * yi + S.a1 * xi * yi + S.a3 * yi - Rational(xi) * xi * xi -
                                 S.a2 * xi * xi - S.a4 * xi - S.a6;
                    Rational Fx = S.a1 * yi - 3 * Rational(xi) * xi - 2 * S.a2 * xi - S.a4;
                    Rational Fy = 2 * Rational(yi) + S.a1 * xi + S.a3;
                    if (S.v(F) >= 1 && S.v(Fx) >= 1 && S.v(Fy) >= 1) {
                        x0 = xi; y0 = yi; found = true;
                    }
                }
            if (!found) throw InconsistencyError("tate: singular point not found mod " + p.get_str());
        } else {
            Rational b2 = E.b2(), b4 = E.b4(), b6 = E.b6(), c4 = E.c4();
            if (S.v(c4) == 0) {
                // node: x0 = (18 b6 - b2 b4) / c4
                Integer num = S.mod_p(18 * b6 - b2 * b4);
                Integer c4m = S.mod_p(c4), inv;
                mpz_invert(inv.get_mpz_t(), c4m.get_mpz_t(), p.get_mpz_t());
                x0 = (num * inv) % p;
            } else {
                // cusp: x0 = -b2 / 12
                Integer b2m = S.mod_p(b2), inv12;
                Integer twelve = Integer(12) % p;
                mpz_invert(inv12.get_mpz_t(), twelve.get_mpz_t(), p.get_mpz_t());
                x0 = ((-b2m % p + p) % p * inv12) % p;
            }
            // y0 = -(a1 x0 + a3) / 2
            Integer a1x = S.mod_p(S.a1 * Rational(x0) + S.a3);
            Integer inv2;
            Integer two = Integer(2) % p;
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
            y0 = ((-a1x % p + p) % p * inv2) % p;
        }
        if (x0 != 0 || y0 != 0)
            S.shift(ModelTransform{Rational(1), Rational(x0), Rational(0), Rational(y0)});
        E = S.curve();

        // Step 3: test for multiplicative reduction: p | b2 ?
        if (S.v(E.b2()) == 0) {
            long n = vD;
            // split iff T^2 + a1 T - a2 has a root mod p
            auto q = quad_info(Integer(1), S.mod_p(S.a1), (-S.mod_p(S.a2) % p + p) % p, p);
            bool split = q.rational_roots > 0;
            long c = split ? n : (n % 2 == 0 ? 2 : 1);
            return finish({KodairaClass::In, n}, c, split);
        }

        // Step 4: type II
        if (S.v(S.a6) < 2) return finish({KodairaClass::II, 0}, 1);

        // Step 5: type III
        if (S.v(E.b8()) < 3) return finish({KodairaClass::III, 0}, 2);

        // Step 6 gate: type IV via b6
        if (S.v(E.b6()) < 3) {
            Integer a31 = S.mod_p(S.a3 / Rational(p));
            Integer a62 = S.mod_p(S.a6 / Rational(p * p));
            auto q = quad_info(Integer(1), a31, (-a62 % p + p) % p, p);
            return finish({KodairaClass::IV, 0}, q.rational_roots > 0 ? 3 : 1);
        }

        // Normalize so that p | a1, a2; p^2 | a3, a4; p^3 | a6.
        if (p >= 5) {
            Integer inv2;
            Integer two = Integer(2) % p;
            mpz_invert(inv2.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
            Integer s = ((-S.mod_p(S.a1) % p + p) % p * inv2) % p;
            S.shift(ModelTransform{Rational(1), Rational(0), Rational(s), Rational(0)});
            // now v(a3) >= 1; kill it mod p^2: t = -a3/2 mod p^2
            Integer p2 = p * p;
            Integer t = S.mod_pk(-S.a3 / Rational(2), p2);
            S.shift(ModelTransform{Rational(1), Rational(0), Rational(0), Rational(t)});
        } else {
            // p = 2 or 3: small exhaustive search for the normalizing (s, t)
            long pl = p.get_si();
            long p2 = pl * pl, p3 = p2 * pl;
            bool done = false;
            for (long s = 0; s < p2 && !done; ++s)
                for (long t = 0; t < p3 && !done; ++t) {
                    TateState trial = S;
                    trial.shift(ModelTransform{Rational(1), Rational(0), Rational(s), Rational(t)});
                    if (trial.v(trial.a1) >= 1 && trial.v(trial.a2) >= 1 && trial.v(trial.a3) >= 2 &&
                        trial.v(trial.a4) >= 2 && trial.v(trial.a6) >= 3) {
                        S = trial;
                        done = true;
                    }
                }
            if (!done) throw InconsistencyError("tate: step-6 normalization failed at p = " + p.get_str());
        }
        if (!(S.v(S.a1) >= 1 && S.v(S.a2) >= 1 && S.v(S.a3) >= 2 && S.v(S.a4) >= 2 && S.v(S.a6) >= 3))
            throw InconsistencyError("tate: step-6 invariants violated");

        // Step 6: cubic P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3 mod p
        Integer A2 = S.mod_p(S.a2 / Rational(p));
        Integer A4 = S.mod_p(S.a4 / Rational(p * p));
        Integer A6 = S.mod_p(S.a6 / Rational(p * p * p));
        // multiple-root structure via gcd with the formal derivative
        std::vector<Integer> P3{A6, A4, A2, Integer(1)};
        auto roots = roots_mod_p(P3, p);
        // derivative 3T^2 + 2 a2,1 T + a4,2
        std::vector<Integer> dP{A4, (2 * A2) % p, Integer(3) % p};
        bool has_multiple = false;
        Integer mroot(0);
        for (const auto& r : roots) {
            Integer acc(0);
            for (auto it = dP.rbegin(); it != dP.rend(); ++it) acc = (acc * r + *it) % p;
            if (acc % p == 0) { has_multiple = true; mroot = r; }
        }
        // The multiple root of a cubic over F_p is always F_p-rational (the
        // gcd with the derivative is linear, or the root is a Frobenius image
        // for a triple root), so rational-root scanning finds it.
        if (!has_multiple) {
            Integer a = A2, b = A4, c = A6;
            Integer disc = (18 * a * b * c - 4 * a * a * a * c + a * a * b * b - 4 * b * b * b - 27 * c * c) % p;
            disc = (disc % p + p) % p;
            if (disc == 0) throw InconsistencyError("tate: cubic multiple-root detection failed");
            return finish({KodairaClass::I0star, 0}, 1 + static_cast<long>(roots.size()));
        }

        {
            // triple vs double root decided by P''(mroot)/2 = 3 T + a2,1
            Integer second = ((3 * mroot + A2) % p + p) % p;
            if (second != 0) {
                // double root at mroot, simple elsewhere: I_n* chain
                if (mroot != 0)
                    S.shift(ModelTransform{Rational(1), Rational(p) * Rational(mroot), Rational(0), Rational(0)});
                // now v(a2) == 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
                long m = 1;
                while (true) {
                    if (m % 2 == 1) {
                        // quadratic Y^2 + (a3/p^k) Y - a6/p^2k, k = (m+3)/2
                        long kk = (m + 3) / 2;
                        Integer B = S.mod_p(S.a3 / Rational(pow_int(p, kk)));
                        Integer C = S.mod_p(S.a6 / Rational(pow_int(p, 2 * kk)));
                        auto q = quad_info(Integer(1), B, (-C % p + p) % p, p);
                        if (q.separable)
                            return finish({KodairaClass::Instar, m}, q.rational_roots > 0 ? 4 : 2);
                        S.shift(ModelTransform{Rational(1), Rational(0), Rational(0),
                                               Rational(pow_int(p, kk)) * Rational(q.double_root)});
                    } else {
                        // quadratic (a2/p) X^2 + (a4/p^k) X + a6/p^(2k-1), k = m/2 + 2
                        long kk = m / 2 + 2;
                        Integer A = S.mod_p(S.a2 / Rational(p));
                        Integer B = S.mod_p(S.a4 / Rational(pow_int(p, kk)));
                        Integer C = S.mod_p(S.a6 / Rational(pow_int(p, 2 * kk - 1)));
                        auto q = quad_info(A, B, C, p);
                        if (q.separable)
                            return finish({KodairaClass::Instar, m}, q.rational_roots > 0 ? 4 : 2);
                        S.shift(ModelTransform{Rational(1), Rational(pow_int(p, kk - 1)) * Rational(q.double_root),
                                               Rational(0), Rational(0)});
                    }
                    ++m;
                    if (m > vD) throw InconsistencyError("tate: I_n* chain exceeded v(disc)");
                }
            }
            // triple root: translate it to zero and continue to step 8
            if (mroot != 0)
                S.shift(ModelTransform{Rational(1), Rational(p) * Rational(mroot), Rational(0), Rational(0)});
        }

        // Step 8: Y^2 + (a3/p^2) Y - a6/p^4
        {
            Integer B = S.mod_p(S.a3 / Rational(p * p));
            Integer C = S.mod_p(S.a6 / Rational(Integer(pow_int(p, 4))));
            auto q = quad_info(Integer(1), B, (-C % p + p) % p, p);
            if (q.separable)
                return finish({KodairaClass::IVstar, 0}, q.rational_roots > 0 ? 3 : 1);
            S.shift(ModelTransform{Rational(1), Rational(0), Rational(0),
                                   Rational(p * p) * Rational(q.double_root)});
        }

        // Step 9: III*
        if (S.v(S.a4) < 4) return finish({KodairaClass::IIIstar, 0}, 2);

        // Step 10: II*
        if (S.v(S.a6) < 6) return finish({KodairaClass::IIstar, 0}, 1);

        // Step 11: non-minimal; rescale and restart
        S.shift(ModelTransform{Rational(p), Rational(0), Rational(0), Rational(0)});
    }
    throw ResourceError("tate_at_prime: did not terminate");
}

} // namespace ellspec
