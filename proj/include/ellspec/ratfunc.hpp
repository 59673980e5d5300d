#pragma once

#include "ellspec/polynomial.hpp"

namespace ellspec {

// Element of Q(T): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
  public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(Polynomial num, Polynomial den);        // reduces
    explicit RatFunc(const Polynomial& p) : num_(p), den_(Polynomial(Rational(1))) {}
    explicit RatFunc(const Rational& c) : num_(Polynomial(c)), den_(Polynomial(Rational(1))) {}

    static RatFunc variable() { return RatFunc(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

    // degree of [f,1]: C -> P^1 as a morphism: max(deg num, deg den); 0 for 0
    long degree_as_map() const;

    // evaluation at t in Q; pole -> PoleError carrying t
    Rational eval(const Rational& t) const;
    bool has_pole_at(const Rational& t) const { return den_.eval(t) == 0; }

    // order of vanishing at the place (pi) for irreducible pi; negative at poles
    long valuation_at(const Polynomial& pi) const;

    RatFunc derivative() const;

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string(const std::string& var = "T") const;

  private:
    Polynomial num_, den_;
};

long poly_valuation_at(const Polynomial& f, const Polynomial& pi);  // f nonzero

} // namespace ellspec
