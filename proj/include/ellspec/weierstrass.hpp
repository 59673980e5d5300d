#pragma once

#include "ellspec/ratfunc.hpp"

namespace ellspec {

// Field adapter: the group law below is written against this surface only,
// with no per-field special cases.
template <typename F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
    static Rational from_long(long n) { return Rational(n); }
    static bool is_zero(const Rational& x) { return x == 0; }
};

template <>
struct FieldTraits<RatFunc> {
    static RatFunc from_long(long n) { return RatFunc(Rational(n)); }
    static bool is_zero(const RatFunc& x) { return x.is_zero(); }
};

template <typename F>
struct CurvePoint {
    bool infinity = true;
    F x{}, y{};

    CurvePoint() = default;
    CurvePoint(F x_in, F y_in) : infinity(false), x(std::move(x_in)), y(std::move(y_in)) {}
    static CurvePoint O() { return CurvePoint(); }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.infinity || b.infinity) return a.infinity == b.infinity;
        return a.x == b.x && a.y == b.y;
    }
};

// Long Weierstrass model y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over
// an exact field F. Construction rejects singular models (disc = 0).
template <typename F>
class WeierstrassCurve {
  public:
    F a1, a2, a3, a4, a6;

    WeierstrassCurve(F a1_, F a2_, F a3_, F a4_, F a6_)
        : a1(std::move(a1_)), a2(std::move(a2_)), a3(std::move(a3_)), a4(std::move(a4_)), a6(std::move(a6_)) {
        if (FieldTraits<F>::is_zero(discriminant()))
            throw SingularCurveError("singular Weierstrass model (disc = 0)");
    }

    F b2() const { return a1 * a1 + c(4) * a2; }
    F b4() const { return c(2) * a4 + a1 * a3; }
    F b6() const { return a3 * a3 + c(4) * a6; }
    F b8() const { return a1 * a1 * a6 + c(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4; }
    F c4() const { return b2() * b2() - c(24) * b4(); }
    F c6() const { return -(b2() * b2() * b2()) + c(36) * b2() * b4() - c(216) * b6(); }
    F discriminant() const {
        F B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
        return -(B2 * B2 * B8) - c(8) * B4 * B4 * B4 - c(27) * B6 * B6 + c(9) * B2 * B4 * B6;
    }
    F j_invariant() const {
        F C4 = c4();
        return C4 * C4 * C4 / discriminant();
    }

    bool on_curve(const CurvePoint<F>& P) const {
        if (P.infinity) return true;
        F lhs = P.y * P.y + a1 * P.x * P.y + a3 * P.y;
        F rhs = P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
        return FieldTraits<F>::is_zero(lhs - rhs);
    }

    CurvePoint<F> neg(const CurvePoint<F>& P) const {
        if (P.infinity) return P;
        return CurvePoint<F>(P.x, -(P.y + a1 * P.x + a3));
    }

    CurvePoint<F> add(const CurvePoint<F>& P, const CurvePoint<F>& Q) const {
        require_on_curve(P);
        require_on_curve(Q);
        return add_unchecked(P, Q);
    }

    CurvePoint<F> dbl(const CurvePoint<F>& P) const { return add(P, P); }

    CurvePoint<F> mul_scalar(long n, const CurvePoint<F>& P) const {
        require_on_curve(P);
        CurvePoint<F> base = n < 0 ? neg(P) : P;
        unsigned long m = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
        CurvePoint<F> acc = CurvePoint<F>::O();
        while (m) {
            if (m & 1) acc = add_unchecked(acc, base);
            base = add_unchecked(base, base);
            m >>= 1;
        }
        return acc;
    }

    // chord-tangent law; callers guarantee the points lie on the curve
    CurvePoint<F> add_unchecked(const CurvePoint<F>& P, const CurvePoint<F>& Q) const {
        if (P.infinity) return Q;
        if (Q.infinity) return P;
        if (P.x == Q.x) {
            F s = P.y + Q.y + a1 * Q.x + a3;
            if (FieldTraits<F>::is_zero(s)) return CurvePoint<F>::O();
        }
        F lam;
        if (P.x == Q.x) {
            lam = (c(3) * P.x * P.x + c(2) * a2 * P.x + a4 - a1 * P.y) / (c(2) * P.y + a1 * P.x + a3);
        } else {
            lam = (Q.y - P.y) / (Q.x - P.x);
        }
        F nu = P.y - lam * P.x;
        F x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
        F y3 = -((lam + a1) * x3) - nu - a3;
        return CurvePoint<F>(x3, y3);
    }

  private:
    static F c(long n) { return FieldTraits<F>::from_long(n); }
    void require_on_curve(const CurvePoint<F>& P) const {
        if (!on_curve(P)) throw ContractViolation("point is not on the curve");
    }
};

using CurveQ = WeierstrassCurve<Rational>;
using PointQ = CurvePoint<Rational>;
using CurveFT = WeierstrassCurve<RatFunc>;
using PointFT = CurvePoint<RatFunc>;

} // namespace ellspec
