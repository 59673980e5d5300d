#include "ellspec/ratfunc.hpp"

namespace ellspec {

RatFunc::RatFunc(Polynomial num, Polynomial den) {
    if (den.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    if (num.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = poly_gcd(num, den);
    if (!g.is_constant()) {
        Polynomial q, r;
        Polynomial::divmod(num, g, q, r);
        num = q;
        Polynomial::divmod(den, g, q, r);
        den = q;
    }
    Rational lc = den.leading();
    num_ = (Rational(1) / lc) * num;
    den_ = den.monic();
}

long RatFunc::degree_as_map() const {
    if (is_zero()) return 0;
    return std::max(num_.degree_checked(), den_.degree_checked());
}

Rational RatFunc::eval(const Rational& t) const {
    Rational d = den_.eval(t);
    if (d == 0)
        throw PoleError("pole at t = " + Rational(t).get_str());
    return num_.eval(t) / d;
}

long poly_valuation_at(const Polynomial& f, const Polynomial& pi) {
    if (f.is_zero()) throw ArgumentError("valuation of zero polynomial");
    long v = 0;
    Polynomial rem = f, q, r;
    while (true) {
        Polynomial::divmod(rem, pi, q, r);
        if (!r.is_zero()) return v;
        rem = q;
        ++v;
    }
}

long RatFunc::valuation_at(const Polynomial& pi) const {
    if (is_zero()) throw ArgumentError("valuation of zero");
    long v = poly_valuation_at(num_, pi);
    if (v > 0) return v;
    return -poly_valuation_at(den_, pi);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}
RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZeroError("division by zero rational function");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RatFunc::to_string(const std::string& var) const {
    if (is_polynomial()) return num_.to_string(var);
    return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

} // namespace ellspec
