#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ellspec/rational.hpp"

namespace ellspec {

// Univariate polynomial over Q, canonical form (no trailing zero
// coefficients). The zero polynomial has empty coefficient storage and its
// degree is the disengaged optional, never an integer sentinel.
class Polynomial {
  public:
    Polynomial() = default;
    explicit Polynomial(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
    explicit Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static Polynomial variable();                 // T
    static Polynomial monomial(Rational c, int k); // c*T^k

    bool is_zero() const { return coeffs_.empty(); }
    std::optional<long> degree() const {
        if (coeffs_.empty()) return std::nullopt;
        return static_cast<long>(coeffs_.size()) - 1;
    }
    // degree with deg 0 for constants; caller must ensure nonzero.
    long degree_checked() const;

    const Rational& leading() const;
    Rational coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_constant() const { return coeffs_.size() <= 1; }
    Rational constant_value() const { return coeff(0); }

    Rational eval(const Rational& t) const;       // Horner
    Polynomial derivative() const;
    Polynomial monic() const;                     // nonzero input
    Polynomial reversed(long top_degree) const;   // coefficients of T^k f(1/T), k = top_degree >= deg

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial operator-() const;
    friend Polynomial operator*(const Rational& c, const Polynomial& a);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

    Polynomial pow(unsigned n) const;

    // Euclidean division: a = q*b + r with deg r < deg b. b nonzero.
    static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);

    std::string to_string(const std::string& var = "T") const;

  private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
    std::vector<Rational> coeffs_;
};

// Monic gcd via the primitive Euclidean remainder sequence over Z (content is
// stripped every step, which keeps coefficient growth in check at desk scale).
// Errors when both inputs are zero.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// content/primitive decomposition of a nonzero polynomial: f = c * pp with
// pp integral, primitive, positive leading coefficient; c in Q.
struct ContentSplit {
    Rational content;
    std::vector<Integer> primitive;  // integer coefficients, ascending
};
ContentSplit content_split(const Polynomial& f);
Polynomial from_integer_coeffs(const std::vector<Integer>& c);

// Factorization into monic irreducibles over Q (Zassenhaus: squarefree split,
// factor mod a suitable prime, Hensel lift, subset recombination).
// Returns {irreducible monic factor, multiplicity}, factors sorted by
// (degree, coefficients). The unit/content is dropped.
std::vector<std::pair<Polynomial, int>> poly_factor(const Polynomial& f);

} // namespace ellspec
