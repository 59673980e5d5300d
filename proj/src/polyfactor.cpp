#include <algorithm>
#include <cmath>

#include "ellspec/fppoly.hpp"
#include "ellspec/polynomial.hpp"

// Factorization over Q: squarefree part, factor mod p (Cantor-Zassenhaus),
// quadratic Hensel lifting in a factor tree, subset recombination.

namespace ellspec {

namespace {

using ZPoly = std::vector<Integer>;  // ascending, trailing nonzero if normalized

void z_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly z_mul(const ZPoly& a, const ZPoly& b, const Integer& m) {
    if (a.empty() || b.empty()) return {};
    ZPoly c(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % m;
    }
    z_trim(c);
    return c;
}

ZPoly z_add(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % m;
    z_trim(c);
    return c;
}

ZPoly z_sub(const ZPoly& a, const ZPoly& b, const Integer& m) {
    ZPoly c(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % m + m) % m;
    z_trim(c);
    return c;
}

// division by a monic b, coefficients mod m
void z_divmod_monic(const ZPoly& a, const ZPoly& b, const Integer& m, ZPoly& q, ZPoly& r) {
    r = a;
    long db = static_cast<long>(b.size()) - 1;
    q.assign(static_cast<long>(r.size()) - 1 >= db ? r.size() - db : 0, Integer(0));
    while (static_cast<long>(r.size()) - 1 >= db && !r.empty()) {
        long k = static_cast<long>(r.size()) - 1 - db;
        Integer f = r.back() % m;
        q[k] = f;
        for (long j = 0; j <= db; ++j) r[k + j] = ((r[k + j] - f * b[j]) % m + m) % m;
        z_trim(r);
    }
}

struct HenselPair {
    ZPoly g, h, s, t;  // f = g h, s g + t h = 1 (mod m)
};

// one quadratic step: from modulus m to m^2 (f monic, g,h monic)
HenselPair hensel_step(const ZPoly& f, HenselPair P, const Integer& m) {
    Integer m2 = m * m;
    auto& [g, h, s, t] = P;
    ZPoly e = z_sub(f, z_mul(g, h, m2), m2);
    ZPoly q, r;
    z_divmod_monic(z_mul(s, e, m2), h, m2, q, r);
    ZPoly g1 = z_add(g, z_add(z_mul(t, e, m2), z_mul(q, g, m2), m2), m2);
    ZPoly h1 = z_add(h, r, m2);
    ZPoly b = z_sub(z_add(z_mul(s, g1, m2), z_mul(t, h1, m2), m2), ZPoly{Integer(1)}, m2);
    ZPoly c, d;
    z_divmod_monic(z_mul(s, b, m2), h1, m2, c, d);
    ZPoly s1 = z_sub(s, d, m2);
    ZPoly t1 = z_sub(t, z_add(z_mul(t, b, m2), z_mul(c, g1, m2), m2), m2);
    return {g1, h1, s1, t1};
}

ZPoly from_fp(const FpPoly& a) {
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = Integer(static_cast<unsigned long>(a[i]));
    return r;
}

FpPoly to_fp(const FpCtx& F, const ZPoly& a) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.reduce_int(a[i]);
    fp_trim(r);
    return r;
}

// extended euclid over F_p for monic coprime g, h: s g + t h = 1
void fp_bezout(const FpCtx& F, const FpPoly& g, const FpPoly& h, FpPoly& s, FpPoly& t) {
    FpPoly r0 = g, r1 = h;
    FpPoly s0{1}, s1{}, t0{}, t1{1};
    while (!r1.empty()) {
        FpPoly q, r;
        fp_divmod(F, r0, r1, q, r);
        FpPoly s2 = fp_sub(F, s0, fp_mul(F, q, s1));
        FpPoly t2 = fp_sub(F, t0, fp_mul(F, q, t1));
        r0 = std::move(r1); r1 = std::move(r);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    // r0 is a nonzero constant
    std::uint64_t inv = F.inv(r0[0]);
    s = fp_scale(F, s0, inv);
    t = fp_scale(F, t0, inv);
}

// Lift the mod-p factorization fac[lo..hi) of the monic f to modulus M.
// M must be p^(2^J) so that the doubling chain lands on M exactly at every
// level of the tree; f is known mod M.
void lift_tree(const FpCtx& F, const ZPoly& f, std::vector<FpPoly>& fac, std::size_t lo, std::size_t hi,
               const Integer& p, const Integer& M, std::vector<ZPoly>& out) {
    if (hi - lo == 1) {
        out.push_back(f);
        return;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    FpPoly g0{1}, h0{1};
    for (std::size_t i = lo; i < mid; ++i) g0 = fp_mul(F, g0, fac[i]);
    for (std::size_t i = mid; i < hi; ++i) h0 = fp_mul(F, h0, fac[i]);
    FpPoly s0, t0;
    fp_bezout(F, g0, h0, s0, t0);
    HenselPair P{from_fp(g0), from_fp(h0), from_fp(s0), from_fp(t0)};
    Integer m = p;
    while (m < M) {
        Integer m2 = m * m;
        ZPoly fm = f;
        for (auto& c : fm) c = ((c % m2) + m2) % m2;
        z_trim(fm);
        P = hensel_step(fm, P, m);
        m = m2;
    }
    lift_tree(F, P.g, fac, lo, mid, p, M, out);
    lift_tree(F, P.h, fac, mid, hi, p, M, out);
}

Integer symmetric_rep(const Integer& c, const Integer& m) {
    Integer r = ((c % m) + m) % m;
    if (2 * r > m) r -= m;
    return r;
}

Polynomial primitive_positive(const Polynomial& f) {
    auto cs = content_split(f);
    return from_integer_coeffs(cs.primitive);
}

// exact division test in Z[T] via Q[T]
bool divides(const Polynomial& d, const Polynomial& f, Polynomial& quo) {
    Polynomial q, r;
    Polynomial::divmod(f, d, q, r);
    if (!r.is_zero()) return false;
    quo = q;
    return true;
}

// irreducible factors of a squarefree primitive G (positive leading coeff)
std::vector<Polynomial> factor_squarefree_q(const Polynomial& G) {
    long d = G.degree_checked();
    if (d == 1) return {primitive_positive(G)};

    // monicize: Gm(T) = lc^(d-1) G(T/lc), integral and monic
    auto cs = content_split(G);
    Integer lc = cs.primitive.back();
    ZPoly gm(cs.primitive.size());
    Integer pw(1);
    for (long k = d; k >= 0; --k) {
        gm[k] = cs.primitive[k] * pw;
        if (k > 0) pw *= lc;
    }

    // prime with squarefree reduction
    static const std::vector<FpCtx> ctxs = [] {
        std::vector<FpCtx> v;
        for (std::uint64_t p : {1000003ULL, 1000033ULL, 1000037ULL, 1000039ULL, 1000081ULL,
                                1000099ULL, 1000117ULL, 1000121ULL, 1000133ULL, 1000151ULL})
            v.emplace_back(p);
        return v;
    }();
    const FpCtx* Fsel = nullptr;
    FpPoly fbar;
    for (const auto& F : ctxs) {
        fbar = to_fp(F, gm);
        if (fp_deg(fbar) != d) continue;
        FpPoly g = fp_gcd(F, fbar, fp_derivative(F, fbar));
        if (fp_deg(g) == 0) { Fsel = &F; break; }
    }
    if (!Fsel) throw ResourceError("poly_factor: no squarefree prime found");
    const FpCtx& F = *Fsel;

    auto modular = fp_factor(F, fbar);
    if (modular.size() == 1) return {primitive_positive(G)};
    std::vector<FpPoly> fac;
    for (auto& [f, e] : modular) fac.push_back(f);
    if (fac.size() > 24) throw ResourceError("poly_factor: too many modular factors");

    // coefficient bound (Mignotte-style, crude): 2^d * ||Gm||_2
    double norm2_bits = 0;
    for (const auto& c : gm) {
        double b = static_cast<double>(mpz_sizeinbase(c.get_mpz_t(), 2));
        norm2_bits = std::max(norm2_bits, 2 * b);
    }
    norm2_bits += std::log2(static_cast<double>(gm.size()));
    double bits = d + 0.5 * norm2_bits + 2;
    Integer p_int(static_cast<unsigned long>(F.p()));
    int K = 1;
    double pbits = std::log2(static_cast<double>(F.p()));
    while (K * pbits < bits + 1) ++K;
    unsigned long pw2 = 1;
    while (static_cast<int>(pw2) < K) pw2 *= 2;
    Integer target;
    mpz_pow_ui(target.get_mpz_t(), p_int.get_mpz_t(), pw2);

    std::vector<ZPoly> lifted;
    ZPoly gm_mod = gm;
    for (auto& c : gm_mod) c = ((c % target) + target) % target;
    lift_tree(F, gm_mod, fac, 0, fac.size(), p_int, target, lifted);

    // recombination over subsets, smallest cardinality first
    std::vector<Polynomial> found;
    std::vector<bool> used(lifted.size(), false);
    Polynomial rem = G;
    std::size_t nleft = lifted.size();
    for (std::size_t card = 1; card <= lifted.size() && nleft > 0; ++card) {
        if (card > nleft) break;
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < lifted.size(); ++i)
            if (!used[i]) idx.push_back(i);
        if (card > idx.size()) break;
        std::vector<std::size_t> comb(card);
        // iterate cardinality-card subsets of idx
        std::vector<std::size_t> pos(card);
        for (std::size_t i = 0; i < card; ++i) pos[i] = i;
        while (true) {
            ZPoly prod{Integer(1)};
            for (std::size_t i = 0; i < card; ++i) prod = z_mul(prod, lifted[idx[pos[i]]], target);
            // candidate over Z with symmetric coefficients, variable scaled back
            std::vector<Rational> cq(prod.size());
            Integer pwk(1);
            for (std::size_t k = 0; k < prod.size(); ++k) {
                cq[k] = Rational(symmetric_rep(prod[k], target) * pwk);
                pwk *= lc;
            }
            Polynomial cand(std::move(cq));
            Polynomial quo;
            if (!cand.is_zero()) {
                Polynomial cpp = primitive_positive(cand);
                if (divides(cpp, rem, quo)) {
                    found.push_back(cpp);
                    rem = quo;
                    for (std::size_t i = 0; i < card; ++i) used[idx[pos[i]]] = true;
                    nleft -= card;
                    idx.clear();
                    for (std::size_t i = 0; i < lifted.size(); ++i)
                        if (!used[i]) idx.push_back(i);
                    if (card > idx.size() || nleft == 0) break;
                    for (std::size_t i = 0; i < card; ++i) pos[i] = i;
                    continue;
                }
            }
            // next combination
            long j = static_cast<long>(card) - 1;
            while (j >= 0 && pos[j] == idx.size() - card + j) --j;
            if (j < 0) break;
            ++pos[j];
            for (std::size_t i = j + 1; i < card; ++i) pos[i] = pos[i - 1] + 1;
        }
    }
    if (!rem.is_constant()) found.push_back(primitive_positive(rem));
    return found;
}

} // namespace

std::vector<std::pair<Polynomial, int>> poly_factor(const Polynomial& f) {
    if (f.is_zero()) throw ArgumentError("poly_factor: zero polynomial");
    std::vector<std::pair<Polynomial, int>> out;
    if (f.is_constant()) return out;

    Polynomial F = primitive_positive(f);
    Polynomial sf = F;
    Polynomial g = poly_gcd(F, F.derivative());
    if (!g.is_constant()) {
        Polynomial q, r;
        Polynomial::divmod(F, g, q, r);
        sf = q;
    }
    auto irr = factor_squarefree_q(primitive_positive(sf));
    std::sort(irr.begin(), irr.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree_checked() != b.degree_checked()) return a.degree_checked() < b.degree_checked();
        for (long k = a.degree_checked(); k >= 0; --k)
            if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
        return false;
    });
    Polynomial rem = F;
    for (const auto& fac : irr) {
        int e = 0;
        Polynomial quo;
        while (divides(fac, rem, quo)) {
            rem = quo;
            ++e;
        }
        if (e > 0) out.emplace_back(fac, e);
    }
    return out;
}

} // namespace ellspec
