#include "ellspec/intfactor.hpp"

#include <algorithm>

namespace ellspec {

namespace {

constexpr unsigned long kTrialBound = 1000000UL;
constexpr unsigned long kRhoBudget = 200000000UL;  // total iterations per factorization

bool prime_p(const Integer& n) { return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0; }

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of composite odd n, spending at most `budget` iterations.
Integer brent_rho(const Integer& n, unsigned long seed, unsigned long& budget) {
    Integer y(seed % 1000 + 2), c(seed % 97 + 1), m(128);
    Integer g(1), r(1), q(1), x, ys;
    while (g == 1 && budget > 0) {
        x = y;
        for (Integer i = 0; i < r; ++i) y = (y * y + c) % n;
        Integer k(0);
        while (k < r && g == 1 && budget > 0) {
            ys = y;
            Integer lim = std::min(m, Integer(r - k));
            for (Integer i = 0; i < lim && budget > 0; ++i, --budget) {
                y = (y * y + c) % n;
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        r *= 2;
    }
    if (g == n) {  // backtrack
        do {
            ys = (ys * ys + c) % n;
            g = gcd(abs(x - ys), n);
        } while (g == 1 && budget-- > 0);
    }
    return g;
}

void factor_rec(Integer n, Factorization& out, unsigned long& budget) {
    if (n == 1) return;
    if (prime_p(n)) {
        out[n] += 1;
        return;
    }
    for (unsigned long seed = 1;; ++seed) {
        if (budget == 0)
            throw ResourceError("int_factor: rho budget exhausted on a " +
                                std::to_string(mpz_sizeinbase(n.get_mpz_t(), 10)) + "-digit cofactor");
        Integer g = brent_rho(n, seed, budget);
        if (g > 1 && g < n) {
            factor_rec(g, out, budget);
            factor_rec(n / g, out, budget);
            return;
        }
    }
}

} // namespace

bool is_probable_prime(const Integer& n) { return prime_p(n); }

Factorization int_factor(const Integer& n_in) {
    if (n_in == 0) throw ArgumentError("int_factor: n must be nonzero");
    Integer n = abs(n_in);
    Factorization out;
    if (n == 1) return out;

    // trial division
    for (unsigned long p = 2; p <= kTrialBound && n > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            out[Integer(p)] += 1;
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        }
    }
    if (n > 1) {
        unsigned long budget = kRhoBudget;
        factor_rec(n, out, budget);
    }
    return out;
}

std::vector<Integer> prime_support(const Integer& n) {
    std::vector<Integer> ps;
    for (const auto& [p, e] : int_factor(n)) ps.push_back(p);
    return ps;
}

} // namespace ellspec
