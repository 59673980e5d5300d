#include "ellspec/fppoly.hpp"

#include <algorithm>

namespace ellspec {

std::uint64_t FpCtx::reduce_int(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += Integer(static_cast<unsigned long>(p_));
    return r.get_ui();
}

std::uint64_t FpCtx::reduce_rat(const Rational& q) const {
    std::uint64_t d = reduce_int(q.get_den());
    if (d == 0) throw ArgumentError("reduce_rat: denominator divisible by p");
    return mul(reduce_int(q.get_num()), inv(d));
}

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_add(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.add(c[i], b[i]);
    fp_trim(c);
    return c;
}

FpPoly fp_sub(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
    FpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = F.sub(c[i], b[i]);
    fp_trim(c);
    return c;
}

FpPoly fp_mul(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    fp_trim(c);
    return c;
}

FpPoly fp_scale(const FpCtx& F, const FpPoly& a, std::uint64_t c) {
    FpPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], c);
    fp_trim(r);
    return r;
}

void fp_divmod(const FpCtx& F, const FpPoly& a, const FpPoly& b, FpPoly& q, FpPoly& r) {
    if (b.empty()) throw DivisionByZeroError("fp_divmod by zero");
    r = a;
    long db = fp_deg(b);
    std::uint64_t inv_lb = F.inv(b.back());
    q.assign(fp_deg(r) >= db ? r.size() - db : 0, 0);
    while (fp_deg(r) >= db) {
        long k = fp_deg(r) - db;
        std::uint64_t f = F.mul(r.back(), inv_lb);
        q[k] = f;
        for (long j = 0; j <= db; ++j) r[k + j] = F.sub(r[k + j], F.mul(f, b[j]));
        fp_trim(r);
    }
}

FpPoly fp_mod(const FpCtx& F, const FpPoly& a, const FpPoly& b) {
    FpPoly q, r;
    fp_divmod(F, a, b, q, r);
    return r;
}

FpPoly fp_monic(const FpCtx& F, const FpPoly& a) {
    if (a.empty()) return a;
    return fp_scale(F, a, F.inv(a.back()));
}

FpPoly fp_gcd(const FpCtx& F, FpPoly a, FpPoly b) {
    while (!b.empty()) {
        FpPoly r = fp_mod(F, a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fp_monic(F, a);
}

FpPoly fp_derivative(const FpCtx& F, const FpPoly& a) {
    if (a.size() <= 1) return {};
    FpPoly d(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = F.mul(a[k], k % F.p());
    fp_trim(d);
    return d;
}

FpPoly fp_powmod(const FpCtx& F, FpPoly base, const Integer& e_in, const FpPoly& mod) {
    FpPoly r{1};
    base = fp_mod(F, base, mod);
    Integer e = e_in;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fp_mod(F, fp_mul(F, r, base), mod);
        base = fp_mod(F, fp_mul(F, base, base), mod);
        e >>= 1;
    }
    return r;
}

namespace {

// equal-degree splitting (Cantor-Zassenhaus), f monic squarefree with all
// irreducible factors of degree d
void edf(const FpCtx& F, const FpPoly& f, long d, std::vector<FpPoly>& out, std::uint64_t& seed) {
    if (fp_deg(f) == d) {
        out.push_back(f);
        return;
    }
    Integer e(0);
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p()), static_cast<unsigned long>(d));
    e = (e - 1) / 2;
    while (true) {
        FpPoly a(fp_deg(f), 0);
        for (auto& c : a) {
            seed = seed * 6364136223846793005ULL + 1442695040888963407ULL;
            c = (seed >> 3) % F.p();
        }
        fp_trim(a);
        if (fp_deg(a) < 1) continue;
        FpPoly b = fp_powmod(F, a, e, f);
        if (b.empty()) continue;
        b.resize(std::max<std::size_t>(b.size(), 1), 0);
        b[0] = F.sub(b[0], 1);
        fp_trim(b);
        FpPoly g = fp_gcd(F, b, f);
        if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
            FpPoly q, r;
            fp_divmod(F, f, g, q, r);
            edf(F, g, d, out, seed);
            edf(F, fp_monic(F, q), d, out, seed);
            return;
        }
    }
}

// irreducible factors of a monic squarefree f (distinct-degree, then
// equal-degree splitting)
std::vector<FpPoly> factor_squarefree(const FpCtx& F, FpPoly f, std::uint64_t& seed) {
    std::vector<FpPoly> out;
    FpPoly h{0, 1};  // x
    long d = 0;
    while (fp_deg(f) > 0) {
        ++d;
        if (2 * d > fp_deg(f)) {
            out.push_back(f);
            break;
        }
        h = fp_powmod(F, h, Integer(static_cast<unsigned long>(F.p())), f);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = F.sub(hx[1], 1);
        fp_trim(hx);
        FpPoly g = fp_gcd(F, hx, f);
        if (fp_deg(g) > 0) {
            edf(F, g, d, out, seed);
            FpPoly q, r;
            fp_divmod(F, f, g, q, r);
            f = fp_monic(F, q);
            h = fp_mod(F, h, f);
        }
    }
    return out;
}

} // namespace

std::vector<std::pair<FpPoly, int>> fp_factor(const FpCtx& F, const FpPoly& f_in) {
    std::vector<std::pair<FpPoly, int>> out;
    FpPoly f = fp_monic(F, f_in);
    if (fp_deg(f) <= 0) return out;

    // p greatly exceeds the degrees we feed in, so the squarefree part is
    // just f / gcd(f, f'); true multiplicities recovered by trial division.
    std::uint64_t seed = 0x9e3779b97f4a7c15ULL ^ F.p();
    FpPoly g = fp_gcd(F, f, fp_derivative(F, f));
    FpPoly sf, r0;
    fp_divmod(F, f, g, sf, r0);
    auto irr = factor_squarefree(F, fp_monic(F, sf), seed);

    FpPoly rem = f;
    for (const auto& fac : irr) {
        int e = 0;
        while (true) {
            FpPoly q, r;
            fp_divmod(F, rem, fac, q, r);
            if (!r.empty()) break;
            rem = q;
            ++e;
        }
        out.emplace_back(fac, e);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
        return a.first < b.first;
    });
    return out;
}

} // namespace ellspec
