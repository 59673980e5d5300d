#include "ellspec/weil.hpp"

#include <algorithm>
#include <numeric>

namespace ellspec {

ProjPointQ::ProjPointQ(Integer p_in, Integer q_in) : p(std::move(p_in)), q(std::move(q_in)) {
    if (p == 0 && q == 0) throw ArgumentError("ProjPointQ: (0,0) is not a point");
    Integer g = gcd(abs(p), abs(q));
    if (g > 1) { p /= g; q /= g; }
    if (q < 0) { p = -p; q = -q; }
    if (q == 0) p = 1;
}

Rational ProjPointQ::affine() const {
    if (q == 0) throw ArgumentError("affine() of the point at infinity");
    return normalize_rational(p, q);
}

bool operator<(const ProjPointQ& a, const ProjPointQ& b) {
    Integer ha = a.box_height(), hb = b.box_height();
    if (ha != hb) return ha < hb;
    if (a.p != b.p) return a.p < b.p;
    return a.q < b.q;
}

Real weil_height_p1(const ProjPointQ& t) { return log_mpz(t.box_height()); }

Integer BinaryForm::eval(const Integer& x, const Integer& y) const {
    // Horner in x against precomputed powers of y
    std::vector<Integer> yp(degree + 1);
    Integer ypow(1);
    for (long k = 0; k <= degree; ++k) { yp[k] = ypow; ypow *= y; }
    Integer acc(0);
    for (long i = degree; i >= 0; --i) acc = acc * x + coeff[i] * yp[degree - i];
    return acc;
}
// (pow_int lives in rational.cpp)

BinaryForm form_from_bivar(const BivarPoly& p) {
    if (p.empty()) throw ArgumentError("zero form");
    long e = -1;
    for (const auto& [k, c] : p) {
        long d = k.first + k.second;
        if (e == -1) e = d;
        else if (d != e) throw ArgumentError("form is not homogeneous");
    }
    if (e < 1) throw ArgumentError("form degree must be >= 1");
    BinaryForm f{e, std::vector<Integer>(e + 1, Integer(0))};
    for (const auto& [k, c] : p) {
        if (!is_integer(c)) throw ArgumentError("form coefficients must be integers");
        f.coeff[k.first] = c.get_num();
    }
    return f;
}

BinaryForm parse_form(const std::string& text) { return form_from_bivar(parse_bivar(text, "x", "y")); }

Integer binary_resultant(const BinaryForm& f, const BinaryForm& g) {
    long m = f.degree, n = g.degree;
    long N = m + n;
    // Sylvester matrix over Z; fraction-free Bareiss elimination
    std::vector<std::vector<Integer>> M(N, std::vector<Integer>(N, Integer(0)));
    // rows of f coefficients (descending in x), n rows
    for (long r = 0; r < n; ++r)
        for (long i = 0; i <= m; ++i) M[r][r + i] = f.coeff[m - i];
    for (long r = 0; r < m; ++r)
        for (long i = 0; i <= n; ++i) M[n + r][r + i] = g.coeff[n - i];

    Integer denom(1);
    int sign = 1;
    for (long k = 0; k < N - 1; ++k) {
        if (M[k][k] == 0) {
            long piv = -1;
            for (long r = k + 1; r < N; ++r)
                if (M[r][k] != 0) { piv = r; break; }
            if (piv == -1) return Integer(0);
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (long r = k + 1; r < N; ++r) {
            for (long c = k + 1; c < N; ++c) {
                M[r][c] = (M[k][k] * M[r][c] - M[r][k] * M[k][c]) / denom;
            }
            M[r][k] = 0;
        }
        denom = M[k][k];
    }
    return sign > 0 ? M[N - 1][N - 1] : -M[N - 1][N - 1];
}

FormSystem::FormSystem(std::vector<BinaryForm> fs) {
    if (fs.size() < 2) throw ArgumentError("FormSystem needs at least 2 forms");
    degree = fs[0].degree;
    for (const auto& f : fs)
        if (f.degree != degree) throw ArgumentError("FormSystem: mixed degrees");
    // a single pair with nonzero resultant certifies the system is base-point
    // free; product systems can fail every pair, so fall back to the exact
    // criterion: gcd of the dehomogenizations constant and no common root at [1:0]
    bool ok = false;
    for (std::size_t i = 0; i < fs.size() && !ok; ++i)
        for (std::size_t j = i + 1; j < fs.size() && !ok; ++j)
            ok = binary_resultant(fs[i], fs[j]) != 0;
    if (!ok) {
        Polynomial g;
        bool top_nonzero = false;
        for (const auto& f : fs) {
            std::vector<Rational> c(f.coeff.size());
            for (std::size_t k = 0; k < c.size(); ++k) c[k] = Rational(f.coeff[k]);
            Polynomial fx(std::move(c));  // f(x, 1)
            if (f.coeff[f.degree] != 0) top_nonzero = true;
            g = g.is_zero() ? fx : poly_gcd(g, fx);
        }
        ok = top_nonzero && (g.is_zero() || g.is_constant());
    }
    if (!ok) throw ArgumentError("FormSystem: forms share a projective root");
    forms = std::move(fs);
}

FormSystem FormSystem::parse(const std::vector<std::string>& texts) {
    std::vector<BinaryForm> fs;
    for (const auto& t : texts) fs.push_back(parse_form(t));
    return FormSystem(std::move(fs));
}

FormSystem FormSystem::product(const FormSystem& F, const FormSystem& G) {
    std::vector<BinaryForm> fs;
    for (const auto& f : F.forms)
        for (const auto& g : G.forms) {
            BinaryForm h{f.degree + g.degree, std::vector<Integer>(f.degree + g.degree + 1, Integer(0))};
            for (long i = 0; i <= f.degree; ++i)
                for (long j = 0; j <= g.degree; ++j) h.coeff[i + j] += f.coeff[i] * g.coeff[j];
            fs.push_back(std::move(h));
        }
    return FormSystem(std::move(fs));
}

Real weil_height_forms(const ProjPointQ& t, const FormSystem& F) {
    Integer best(0);
    for (const auto& f : F.forms) best = std::max(best, Integer(abs(f.eval(t.p, t.q))));
    if (best == 0) throw ArgumentError("all forms vanish at the point (base point)");
    return log_mpz(best);
}

std::vector<ProjPointQ> points_of_bounded_height(long H) {
    if (H < 1) throw ArgumentError("points_of_bounded_height: H >= 1 required");
    std::vector<ProjPointQ> pts;
    pts.push_back(ProjPointQ::infinity());
    for (long q = 1; q <= H; ++q)
        for (long p = -H; p <= H; ++p) {
            if (std::gcd(std::abs(p), q) != 1) continue;
            pts.emplace_back(Integer(p), Integer(q));
        }
    std::sort(pts.begin(), pts.end());
    return pts;
}

ProjPointQ square_point(const ProjPointQ& t) { return ProjPointQ(t.p * t.p, t.q * t.q); }

std::vector<ProjPointQ> height_band_sample(long H) {
    static const long cof[] = {1, 2, 3, 5, 7, 11};
    std::vector<ProjPointQ> out;
    for (long c : cof) {
        if (c > H) break;
        if (std::gcd(H, c) != 1) continue;
        out.emplace_back(Integer(H), Integer(c));
        out.emplace_back(Integer(-H), Integer(c));
        out.emplace_back(Integer(c), Integer(H));
        out.emplace_back(Integer(-c), Integer(H));
    }
    if (out.empty()) out.emplace_back(Integer(H), Integer(1));
    return out;
}

std::vector<RatioRow> ratio_limit_table(const FormSystem& D, const FormSystem& E,
                                        const std::vector<long>& heights) {
    if (D.degree < 1) throw ArgumentError("ratio_limit_table: deg D >= 1 required");
    std::vector<RatioRow> rows;
    double target = static_cast<double>(E.degree) / static_cast<double>(D.degree);
    for (long H : heights) {
        double worst = 0;
        for (const auto& t : height_band_sample(H)) {
            Real hd = weil_height_forms(t, D);
            if (!(hd > Real(0))) continue;
            Real he = weil_height_forms(t, E);
            double dev = std::abs((he / hd).to_double() - target);
            worst = std::max(worst, dev);
        }
        rows.push_back({H, worst});
    }
    return rows;
}

} // namespace ellspec
