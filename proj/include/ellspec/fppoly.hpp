#pragma once

#include <cstdint>
#include <vector>

#include "ellspec/rational.hpp"

namespace ellspec {

// Polynomials over F_p for word-sized p (p < 2^62), dense representation,
// coefficients ascending, normalized (no trailing zeros). Used for modular
// gcd/degree work and for factoring over Q.
class FpCtx {
  public:
    explicit FpCtx(std::uint64_t p) : p_(p) {}
    std::uint64_t p() const { return p_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a % p_, p_ - 2); }
    std::uint64_t reduce_int(const Integer& z) const;
    // reduces a rational; throws ArgumentError if the denominator kills p
    std::uint64_t reduce_rat(const Rational& q) const;

  private:
    std::uint64_t p_;
};

using FpPoly = std::vector<std::uint64_t>;  // empty = zero

void fp_trim(FpPoly& a);
inline bool fp_is_zero(const FpPoly& a) { return a.empty(); }
inline long fp_deg(const FpPoly& a) { return static_cast<long>(a.size()) - 1; }  // -1 for zero

FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_scale(const FpCtx& F, const FpPoly& a, std::uint64_t c);
void fp_divmod(const FpCtx& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r);
FpPoly fp_mod(const FpCtx& F, const FpPoly& a, const FpPoly& b);
FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b);       // monic
FpPoly fp_monic(const FpCtx& F, const FpPoly& a);
FpPoly fp_derivative(const FpCtx& F, const FpPoly& a);
FpPoly fp_powmod(const FpCtx& F, FpPoly base, const Integer& e, const FpPoly& mod);

// irreducible factors with multiplicity, monic, sorted by (degree, coeffs);
// deterministic (fixed internal seeds). p must be odd.
std::vector<std::pair<FpPoly, int>> fp_factor(const FpCtx& F, const FpPoly& f);

} // namespace ellspec
