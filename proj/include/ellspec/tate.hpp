#pragma once

#include <string>

#include "ellspec/weierstrass.hpp"

namespace ellspec {

enum class KodairaClass { I0, In, II, III, IV, I0star, Instar, IVstar, IIIstar, IIstar };

struct KodairaType {
    KodairaClass cls = KodairaClass::I0;
    long n = 0;  // fiber index for In / Instar

    bool is_good() const { return cls == KodairaClass::I0; }
    bool is_multiplicative() const { return cls == KodairaClass::In; }
    std::string str() const;
    // order of the geometric component group
    long component_count() const;
    friend bool operator==(const KodairaType& a, const KodairaType& b) { return a.cls == b.cls && a.n == b.n; }
};

// x = u^2 x' + r, y = u^3 y' + s u^2 x' + t  maps (x', y') on the transformed
// curve to (x, y) on the original.
struct ModelTransform {
    Rational u{1}, r{0}, s{0}, t{0};

    // this transform followed by `next` (applied to the transformed curve)
    ModelTransform then(const ModelTransform& next) const;
    PointQ forward(const PointQ& P) const;   // original -> transformed coords
    PointQ backward(const PointQ& P) const;  // transformed -> original coords
    CurveQ apply(const CurveQ& E) const;
};

struct ReductionData {
    Integer p;
    KodairaType kodaira;
    long v_min_disc;     // valuation of the minimal discriminant
    long tamagawa;
    CurveQ local_model;          // p-minimal integral model
    ModelTransform to_minimal;   // original curve -> local_model
    long u_valuation;            // v_p(u) of to_minimal
    bool split_multiplicative;   // meaningful for In only
};

// Tate's algorithm at p. Accepts any model over Q (denominators are cleared
// by an admissible scaling first). p must be prime.
ReductionData tate_at_prime(const CurveQ& E, const Integer& p);

} // namespace ellspec
