#include "ellspec/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace ellspec {

Polynomial Polynomial::variable() { return monomial(Rational(1), 1); }

Polynomial Polynomial::monomial(Rational c, int k) {
    std::vector<Rational> v(k + 1, Rational(0));
    v[k] = std::move(c);
    return Polynomial(std::move(v));
}

long Polynomial::degree_checked() const {
    auto d = degree();
    if (!d) throw ArgumentError("degree of zero polynomial requested");
    return *d;
}

const Rational& Polynomial::leading() const {
    if (coeffs_.empty()) throw ArgumentError("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

Polynomial Polynomial::derivative() const {
    if (coeffs_.size() <= 1) return Polynomial();
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * coeffs_[k];
    return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
    const Rational& lc = leading();
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x /= lc;
    return Polynomial(std::move(c));
}

Polynomial Polynomial::reversed(long top_degree) const {
    if (is_zero()) return Polynomial();
    if (top_degree < degree_checked()) throw ArgumentError("reversed: top_degree below degree");
    std::vector<Rational> c(top_degree + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) c[top_degree - k] = coeffs_[k];
    return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& a) {
    std::vector<Rational> v = a.coeffs_;
    for (auto& x : v) x *= c;
    return Polynomial(std::move(v));
}

Polynomial Polynomial::pow(unsigned n) const {
    Polynomial r(Rational(1)), base = *this;
    while (n) {
        if (n & 1) r = r * base;
        base = base * base;
        n >>= 1;
    }
    return r;
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
    if (b.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    std::vector<Rational> rem = a.coeffs_;
    long db = b.degree_checked();
    std::vector<Rational> quo;
    if (static_cast<long>(rem.size()) - 1 >= db) quo.assign(rem.size() - db, Rational(0));
    while (static_cast<long>(rem.size()) - 1 >= db && !rem.empty()) {
        long k = static_cast<long>(rem.size()) - 1 - db;
        Rational f = rem.back() / b.coeffs_.back();
        quo[k] = f;
        for (long j = 0; j <= db; ++j) rem[k + j] -= f * b.coeffs_[j];
        while (!rem.empty() && rem.back() == 0) rem.pop_back();
    }
    q = Polynomial(std::move(quo));
    r = Polynomial(std::move(rem));
}

ContentSplit content_split(const Polynomial& f) {
    if (f.is_zero()) throw ArgumentError("content of zero polynomial");
    Integer den_lcm(1);
    for (const auto& c : f.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
    std::vector<Integer> zc(f.coeffs().size());
    Integer g(0);
    for (std::size_t i = 0; i < zc.size(); ++i) {
        zc[i] = f.coeffs()[i].get_num() * (den_lcm / f.coeffs()[i].get_den());
        g = gcd(g, zc[i]);
    }
    if (zc.back() < 0) g = -g;
    for (auto& c : zc) c /= g;
    return {Rational(g, den_lcm), std::move(zc)};
}

Polynomial from_integer_coeffs(const std::vector<Integer>& c) {
    std::vector<Rational> q(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rational(c[i]);
    return Polynomial(std::move(q));
}

namespace {

// primitive pseudo-remainder sequence over Z
std::vector<Integer> prem(const std::vector<Integer>& a, const std::vector<Integer>& b) {
    std::vector<Integer> r = a;
    long db = static_cast<long>(b.size()) - 1;
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        long k = static_cast<long>(r.size()) - 1 - db;
        Integer lr = r.back(), lb = b.back();
        Integer g = gcd(lr, lb);
        Integer mul_r = lb / g, mul_f = lr / g;
        for (auto& c : r) c *= mul_r;
        for (long j = 0; j <= db; ++j) r[k + j] -= mul_f * b[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
}

void strip_content(std::vector<Integer>& v) {
    Integer g(0);
    for (const auto& c : v) g = gcd(g, c);
    if (g > 1) for (auto& c : v) c /= g;
}

} // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() && b.is_zero()) throw ArgumentError("poly_gcd(0, 0) undefined");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    std::vector<Integer> u = content_split(a).primitive;
    std::vector<Integer> v = content_split(b).primitive;
    if (u.size() < v.size()) std::swap(u, v);
    while (!v.empty()) {
        std::vector<Integer> r = prem(u, v);
        strip_content(r);
        u = std::move(v);
        v = std::move(r);
    }
    return from_integer_coeffs(u).monic();
}

std::string Polynomial::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long k = degree_checked(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational ac = ::abs(c);
        bool unit = (ac == 1);
        if (k == 0 || !unit) os << ac.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

} // namespace ellspec
