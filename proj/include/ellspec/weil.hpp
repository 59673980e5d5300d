#pragma once

#include <vector>

#include "ellspec/parser.hpp"
#include "ellspec/polynomial.hpp"
#include "ellspec/real.hpp"

namespace ellspec {

// Point of P^1(Q) in canonical coprime coordinates: q > 0, or q = 0, p = 1.
struct ProjPointQ {
    Integer p, q;

    ProjPointQ(Integer p_in, Integer q_in);
    explicit ProjPointQ(const Rational& t) : ProjPointQ(t.get_num(), t.get_den()) {}
    static ProjPointQ infinity() { return ProjPointQ(1, 0); }

    bool is_infinity() const { return q == 0; }
    Rational affine() const;  // q != 0
    Integer box_height() const { return std::max(abs(p), abs(q)); }

    friend bool operator==(const ProjPointQ& a, const ProjPointQ& b) { return a.p == b.p && a.q == b.q; }
    friend bool operator<(const ProjPointQ& a, const ProjPointQ& b);  // (height, p, q)
};

// h([p:q]) = log max(|p|, |q|) on coprime coordinates; >= 0.
Real weil_height_p1(const ProjPointQ& t);

// Binary form of degree e: coeff[i] * x^i * y^(e-i).
struct BinaryForm {
    long degree;
    std::vector<Integer> coeff;  // size degree+1

    Integer eval(const Integer& x, const Integer& y) const;
};

BinaryForm form_from_bivar(const BivarPoly& p);  // homogeneous integer form or ArgumentError
BinaryForm parse_form(const std::string& text);  // grammar with variables x, y

// Resultant of two binary forms (Sylvester determinant, exact).
Integer binary_resultant(const BinaryForm& f, const BinaryForm& g);

// A system of >= 2 degree-e integer forms with no common projective root.
// The no-common-root invariant is enforced through the resultant of the
// first two forms at construction.
struct FormSystem {
    long degree;
    std::vector<BinaryForm> forms;

    FormSystem(std::vector<BinaryForm> fs);
    static FormSystem parse(const std::vector<std::string>& texts);

    // all pairwise products F_i * G_j, degree = sum
    static FormSystem product(const FormSystem& F, const FormSystem& G);
};

// log max_i |F_i(p, q)| on the canonical representative; base-point error if
// every form vanishes.
Real weil_height_forms(const ProjPointQ& t, const FormSystem& F);

// Northcott enumeration: all [p:q] with max(|p|,|q|) <= H, sorted by
// (height, p, q), each exactly once.
std::vector<ProjPointQ> points_of_bounded_height(long H);

// [q:p], the image of t under coordinate swap; used in tests.
// Squaring map on P^1: [p:q] -> [p^2 : q^2].
ProjPointQ square_point(const ProjPointQ& t);

struct RatioRow {
    long H;
    double max_deviation;  // max over the H-sample of |h_E/h_D - e/d|
};

// Deterministic sample of points at box height exactly H (edge points
// [±H:q], [±p:H] with small coprime cofactors). The sample exhibits the
// degree-ratio limit h_E/h_D -> e/d without enumerating the full box.
std::vector<ProjPointQ> height_band_sample(long H);

std::vector<RatioRow> ratio_limit_table(const FormSystem& D, const FormSystem& E,
                                        const std::vector<long>& heights);

} // namespace ellspec
