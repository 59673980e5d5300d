#pragma once

#include <map>
#include <string>
#include <vector>

#include "ellspec/intfactor.hpp"
#include "ellspec/real.hpp"
#include "ellspec/tate.hpp"

namespace ellspec {

// Normalization used throughout: hhat(P) = lim 4^-n log H(x(2^n P)), the
// convention of the standard tables (so the curve y^2 + y = x^3 - x with
// P = (0,0) has hhat = 0.0511114082...). Local heights satisfy
//   hhat = lambda_inf + sum_p Lambda_p log p
// with lambda_inf the series value on the integral model and Lambda_p exact
// rationals from the reduction-type table.

// Immutable per-curve data: integral model, factored discriminant, reduction
// data at the bad primes. Safe for concurrent reads once constructed.
struct CurveDataQ {
    CurveQ original;
    CurveQ curve;                 // integral model
    ModelTransform integralize;   // original -> integral
    Integer disc;                 // discriminant of the integral model (integer)
    Factorization disc_factors;
    std::map<Integer, ReductionData> reduction;  // of the integral model, per bad prime

    explicit CurveDataQ(const CurveQ& E);
    PointQ to_integral(const PointQ& P) const { return integralize.forward(P); }
};

struct HeightRecordQ {
    PointQ point;
    Real naive;
    Real canonical;
    std::map<std::string, Real> local_terms;  // "inf" and one entry per prime
};

// log max(|num x(P)|, den x(P)) on the given model; 0 at infinity.
Real naive_height_q(const CurveQ& E, const PointQ& P);

// Archimedean local height on the given model (series in the b-invariants,
// case-switched between the x and x+1 charts). Absolute error < eps.
Real local_height_arch(const CurveQ& E, const PointQ& P, const Real& eps);

// Exact rational Lambda with lambda_p = Lambda * log p, for the p-minimal
// model in `red` (computed from the same model the point lives on).
Rational local_height_nonarch_coeff(const PointQ& P_on_original_model, const ReductionData& red);

HeightRecordQ canonical_height_q(const CurveDataQ& C, const PointQ& P);
Real canonical_height_value(const CurveDataQ& C, const PointQ& P);

Real height_pairing_q(const CurveDataQ& C, const PointQ& P, const PointQ& Q);

struct GramQ {
    std::vector<std::vector<Real>> entries;
    Real det;
};
GramQ gram_q(const CurveDataQ& C, const std::vector<PointQ>& pts);

// nP = O for some n <= bound, cross-checked against hhat < 1e-10;
// disagreement raises InconsistencyError.
bool torsion_test_q(const CurveDataQ& C, const PointQ& P, long bound = 16);

} // namespace ellspec
