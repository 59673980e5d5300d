#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ellspec/intfactor.hpp"
#include "ellspec/tate.hpp"

using namespace ellspec;

namespace {

CurveQ curve_q(long a1, long a2, long a3, long a4, long a6) {
    return CurveQ(rat(a1), rat(a2), rat(a3), rat(a4), rat(a6));
}

// Independent classification for p >= 5 from the valuations of (c4, Delta) of
// a p-minimal model; used as an oracle against the full algorithm.
KodairaType kodaira_from_table(long vc4, long vdisc) {
    if (vdisc == 0) return {KodairaClass::I0, 0};
    if (vc4 == 0) return {KodairaClass::In, vdisc};
    if (vc4 == 2 && vdisc >= 7) return {KodairaClass::Instar, vdisc - 6};
    switch (vdisc) {
        case 2: return {KodairaClass::II, 0};
        case 3: return {KodairaClass::III, 0};
        case 4: return {KodairaClass::IV, 0};
        case 6: return {KodairaClass::I0star, 0};
        case 8: return {KodairaClass::IVstar, 0};
        case 9: return {KodairaClass::IIIstar, 0};
        case 10: return {KodairaClass::IIstar, 0};
        default: return {KodairaClass::Instar, vdisc - 6};
    }
}

} // namespace

TEST_CASE("good reduction cases") {
    CurveQ e37 = curve_q(0, 0, 1, -1, 0);
    auto r5 = tate_at_prime(e37, 5);
    CHECK(r5.kodaira.is_good());
    CHECK(r5.v_min_disc == 0);
    CHECK(r5.tamagawa == 1);

    auto r5b = tate_at_prime(curve_q(0, 0, 0, 0, 1), 5);
    CHECK(r5b.kodaira.is_good());
}

TEST_CASE("37a has I1 at 37") {
    auto r = tate_at_prime(curve_q(0, 0, 1, -1, 0), 37);
    CHECK(r.kodaira == KodairaType{KodairaClass::In, 1});
    CHECK(r.tamagawa == 1);
    CHECK(r.v_min_disc == 1);
}

TEST_CASE("11a1 has split I5 at 11 with c = 5") {
    // y^2 + y = x^3 - x^2 - 10x - 20
    auto r = tate_at_prime(curve_q(0, -1, 1, -10, -20), 11);
    CHECK(r.kodaira == KodairaType{KodairaClass::In, 5});
    CHECK(r.tamagawa == 5);
    CHECK(r.split_multiplicative);
}

TEST_CASE("hand-built additive types at p = 5") {
    // y^2 = x^3 + 5x: v(c4)=1, v(disc)=3 -> III
    auto r3 = tate_at_prime(curve_q(0, 0, 0, 5, 0), 5);
    CHECK(r3.kodaira == KodairaType{KodairaClass::III, 0});
    CHECK(r3.tamagawa == 2);

    // y^2 = x^3 + 5: v(disc)=2 -> II
    auto r2 = tate_at_prime(curve_q(0, 0, 0, 0, 5), 5);
    CHECK(r2.kodaira == KodairaType{KodairaClass::II, 0});
    CHECK(r2.tamagawa == 1);

    // y^2 = x^3 + 25: v(disc)=4 -> IV
    auto r4 = tate_at_prime(curve_q(0, 0, 0, 0, 25), 5);
    CHECK(r4.kodaira == KodairaType{KodairaClass::IV, 0});

    // y^2 = x^3 - 25x: v(disc)=6, I0*; all three 2-torsion x-roots rational -> c = 4
    auto r6 = tate_at_prime(curve_q(0, 0, 0, -25, 0), 5);
    CHECK(r6.kodaira == KodairaType{KodairaClass::I0star, 0});
    CHECK(r6.tamagawa == 4);

    // y^2 = x^3 + 125: v(disc)=6, cusp with triple root -> I0*
    auto r6b = tate_at_prime(curve_q(0, 0, 0, 0, 125), 5);
    CHECK(r6b.kodaira == KodairaType{KodairaClass::I0star, 0});

    // y^2 = x^3 + 5^4: v(disc)=8 -> IV*
    auto r8 = tate_at_prime(curve_q(0, 0, 0, 0, 625), 5);
    CHECK(r8.kodaira == KodairaType{KodairaClass::IVstar, 0});

    // y^2 = x^3 + 125x: v(c4)=3, v(disc)=9 -> III*
    auto r9 = tate_at_prime(curve_q(0, 0, 0, 125, 0), 5);
    CHECK(r9.kodaira == KodairaType{KodairaClass::IIIstar, 0});
    CHECK(r9.tamagawa == 2);

    // y^2 = x^3 + 625x is non-minimal at 5; reduces to y^2 = x^3 + x
    auto rnm = tate_at_prime(curve_q(0, 0, 0, 625, 0), 5);
    CHECK(rnm.kodaira.is_good());
    CHECK(rnm.u_valuation == 1);

    // y^2 = x^3 + 5^5: v(disc)=10 -> II*
    auto r10 = tate_at_prime(curve_q(0, 0, 0, 0, 3125), 5);
    CHECK(r10.kodaira == KodairaType{KodairaClass::IIstar, 0});
    CHECK(r10.tamagawa == 1);
}

TEST_CASE("I_n* chain at p = 5") {
    // y^2 = (x - 5)(x - 50)(x + 55) = x^3 - 2800x + 13750: double root structure mod 5
    // simpler: y^2 = x^3 - 5^2 x^2 + 5^3 x gives a I_n* form; verify via table oracle
    for (long a : {1L, 2L, 3L}) {
        CurveQ E(rat(0), rat(-25), rat(0), rat(125 * a), rat(0));
        long vdisc = valuation(E.discriminant(), 5);
        auto r = tate_at_prime(E, 5);
        long vc4_min = valuation(r.local_model.c4(), 5);
        CHECK(r.kodaira == kodaira_from_table(vc4_min, r.v_min_disc));
        (void)vdisc;
    }
}

TEST_CASE("non-minimal model is reduced (u tracked)") {
    // scale 37a by u = 2: [u,0,0,0] gives a_i' = a_i * u^i ... applying the
    // inverse transform; the scaled model has disc * 2^12
    CurveQ e37 = curve_q(0, 0, 1, -1, 0);
    ModelTransform inv{rat(1, 2), rat(0), rat(0), rat(0)};
    CurveQ scaled = inv.apply(e37);  // a1*2, a2*4, ...
    CHECK(scaled.discriminant() == rat(37) * rat(4096));
    auto r = tate_at_prime(scaled, 2);
    CHECK(r.kodaira.is_good());
    CHECK(r.u_valuation == 1);
    CHECK(r.v_min_disc == 0);

    // the minimal model transform maps points correctly
    PointQ P(rat(0), rat(0));
    PointQ Pscaled = inv.forward(P);
    CHECK(scaled.on_curve(Pscaled));
    PointQ Pmin = r.to_minimal.forward(Pscaled);
    CHECK(r.local_model.on_curve(Pmin));
}

TEST_CASE("denominator clearing") {
    // model with p in denominators: y^2 = x^3 + (1/25)x
    CurveQ E(rat(0), rat(0), rat(0), rat(1, 25), rat(0));
    auto r = tate_at_prime(E, 5);
    // x -> u^2 x with u = 1/5 makes it integral: y^2 = x^3 + 25 x ... III*
    CHECK(valuation(r.local_model.a4, 5) >= 0);
    CHECK(r.local_model.on_curve(r.to_minimal.forward(PointQ(rat(0), rat(0)))));
}

TEST_CASE("table oracle on randomized curves, p in {5, 7, 13}") {
    std::mt19937_64 rng(41);
    int checked = 0;
    for (int it = 0; it < 400 && checked < 250; ++it) {
        long p = std::vector<long>{5, 7, 13}[rng() % 3];
        long scale = 1 + static_cast<long>(rng() % 3);
        auto rndc = [&](int w) {
            long lim = pow_int(Integer(p), (rng() % (w * scale + 1))).get_si();
            return static_cast<long>(rng() % 40 - 20) * lim;
        };
        try {
            CurveQ E(rat(rndc(1)), rat(rndc(1)), rat(rndc(2)), rat(rndc(2)), rat(rndc(3)));
            auto r = tate_at_prime(E, p);
            long vc4 = valuation(r.local_model.c4(), p);
            if (vc4 == val_infinite) vc4 = 1000;
            CHECK(r.kodaira == kodaira_from_table(vc4, r.v_min_disc));
            // minimality: v(disc_min) < 12 or v(c4_min) < 4
            CHECK((r.v_min_disc < 12 || vc4 < 4));
            // Tamagawa sanity per type
            if (r.kodaira.cls == KodairaClass::In) {
                CHECK(r.v_min_disc == r.kodaira.n);
                if (r.split_multiplicative) CHECK(r.tamagawa == r.kodaira.n);
                else CHECK((r.tamagawa == 1 || r.tamagawa == 2));
            } else {
                CHECK(r.tamagawa <= 4);
            }
            ++checked;
        } catch (const SingularCurveError&) {
            continue;
        }
    }
    CHECK(checked >= 250);
}

TEST_CASE("Tate at p = 2 and 3 terminates with consistent valuations") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 120; ++it) {
        long p = (it % 2) ? 2 : 3;
        auto rndc = [&](int w) {
            long lim = pow_int(Integer(p), (rng() % (2 * w + 1))).get_si();
            return static_cast<long>(rng() % 20 - 10) * lim;
        };
        try {
            CurveQ E(rat(rndc(1)), rat(rndc(1)), rat(rndc(1)), rat(rndc(2)), rat(rndc(3)));
            auto r = tate_at_prime(E, p);
            // v(disc_min) consistent with type
            switch (r.kodaira.cls) {
                case KodairaClass::I0: CHECK(r.v_min_disc == 0); break;
                case KodairaClass::In: CHECK(r.v_min_disc == r.kodaira.n); break;
                case KodairaClass::Instar: CHECK(r.v_min_disc >= 7); break;
                default: CHECK(r.v_min_disc >= 2); break;
            }
            CHECK(r.v_min_disc <= valuation(E.discriminant(), p));
            // kodaira = I0 iff v = 0 (spec invariant)
            CHECK((r.kodaira.is_good()) == (r.v_min_disc == 0));
        } catch (const SingularCurveError&) {
            continue;
        }
    }
}

TEST_CASE("p must be prime") {
    CHECK_THROWS_AS(tate_at_prime(curve_q(0, 0, 1, -1, 0), 6), ArgumentError);
}
