#include <doctest.h>

#include <cmath>

#include "triq/acin.hpp"
#include "triq/invariants.hpp"
#include "triq/rng.hpp"
#include "triq/statecore.hpp"

using namespace triq;

namespace {

AcinParams random_params(Rng& rng, bool zero_l2 = false, bool zero_l4 = false) {
    double l[5];
    double n2 = 0.0;
    for (int k = 0; k < 5; ++k) {
        l[k] = std::abs(rng.normal());
        if ((zero_l2 && k == 2) || (zero_l4 && k == 4)) l[k] = 0.0;
        n2 += l[k] * l[k];
    }
    double n = std::sqrt(n2);
    return {l[0] / n, l[1] / n, l[2] / n, l[3] / n, l[4] / n, rng.uniform(0.0, kPi)};
}

AcinParams interior_params(Rng& rng) {
    // Generic means bounded away from every dependence locus: coordinate
    // boundaries AND vanishing concurrences / threetangle (rank drops there
    // by construction).
    for (;;) {
        AcinParams p = random_params(rng);
        if (std::min({p.l0, p.l1, p.l2, p.l3, p.l4}) < 0.05) continue;
        if (p.phi < 0.3 || p.phi > kPi - 0.3) continue;
        TangleVector v = tangle_vector(from_acin(p));
        if (std::min({v.c12, v.c13, v.c23, v.tau3}) < 0.02) continue;
        return p;
    }
}

}  // namespace

TEST_CASE("concurrence reference values") {
    PureState3 w = preset_state(Preset::W);
    CHECK(std::abs(concurrence(w, {1, 2}) - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(concurrence(w, {1, 3}) - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(concurrence(w, {2, 3}) - 2.0 / 3.0) < 1e-10);

    PureState3 ghz = preset_state(Preset::GHZ);
    CHECK(concurrence(ghz, {1, 2}) < 1e-10);
    CHECK(concurrence(preset_state(Preset::PRODUCT000), {2, 3}) < 1e-12);

    CHECK_THROWS_AS(concurrence(w, {1, 1}), BadPairError);
    CHECK_THROWS_AS(concurrence(w, {0, 2}), BadPairError);
}

TEST_CASE("three_tangle reference values") {
    CHECK(std::abs(three_tangle(preset_state(Preset::GHZ)) - 1.0) < 1e-12);
    CHECK(three_tangle(preset_state(Preset::W)) < 1e-14);

    // tau3 of psi_alpha is independent of alpha (hyperdeterminant oracle).
    double t0 = three_tangle(preset_state(Preset::PSI_ALPHA, 0.0));
    for (double a : {0.3, 1.1, kPi / 2, 2.5, kPi}) {
        double t = three_tangle(preset_state(Preset::PSI_ALPHA, a));
        CHECK(std::abs(t - t0) < 1e-12);
    }
    CHECK(std::abs(t0 - 4.0 / 25.0) < 1e-12);  // and it equals 4/25, not 8/25
}

TEST_CASE("local tangles") {
    PureState3 ghz = preset_state(Preset::GHZ);
    for (int q : {1, 2, 3}) CHECK(std::abs(local_tangle(ghz, q) - 1.0) < 1e-12);
    for (int q : {1, 2, 3}) CHECK(local_tangle(preset_state(Preset::PRODUCT000), q) == 0.0);
    PureState3 w = preset_state(Preset::W);
    for (int q : {1, 2, 3}) CHECK(std::abs(local_tangle(w, q) - 8.0 / 9.0) < 1e-12);
}

TEST_CASE("kempe_i5 reference values and pair independence") {
    CHECK(std::abs(kempe_i5(preset_state(Preset::GHZ)) - 0.25) < 1e-12);
    CHECK(std::abs(kempe_i5(preset_state(Preset::W)) - 2.0 / 9.0) < 1e-12);
    CHECK(std::abs(kempe_i5(preset_state(Preset::PRODUCT000)) - 1.0) < 1e-12);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PureState3 s = haar_random_state(40000 + seed);
        double a = kempe_i5(s, {1, 2});
        double b = kempe_i5(s, {1, 3});
        double c = kempe_i5(s, {2, 3});
        CHECK(std::abs(a - b) < 1e-10);
        CHECK(std::abs(a - c) < 1e-10);
    }
}

TEST_CASE("I5 and I6 scale as |psi|^6 and |psi|^2") {
    PureState3 s = haar_random_state(77);
    PureState3 doubled = s;
    for (auto& a : doubled.amp) a *= 2.0;
    doubled.normalized = false;
    CHECK(std::abs(modulus_i6(doubled) - 4.0) < 1e-12);
    CHECK(std::abs(kempe_i5(doubled) - 64.0 * kempe_i5(s)) < 1e-10);

    PureState3 ghz_raw;
    ghz_raw.amp[0] = 1.0;
    ghz_raw.amp[7] = 1.0;
    ghz_raw.normalized = false;
    CHECK(std::abs(modulus_i6(ghz_raw) - 2.0) < 1e-15);
}

TEST_CASE("grassl closed form") {
    AcinParams ghz{0, 1 / std::sqrt(2.0), 0, 0, 1 / std::sqrt(2.0), 0};
    GrasslValue g = grassl(ghz);
    CHECK(std::abs(g.re) < 1e-12);
    CHECK(std::abs(g.im) < 1e-12);

    // lambda4 = 0 -> tau3 = 0 -> I_G = 0 identically
    Rng rng(5);
    for (int k = 0; k < 50; ++k) {
        GrasslValue z = grassl(random_params(rng, false, true));
        CHECK(z.re == 0.0);
        CHECK(z.im == 0.0);
    }

    // phi -> -phi flips Im and keeps Re (term-by-term parity)
    for (int k = 0; k < 50; ++k) {
        AcinParams p = random_params(rng);
        AcinParams m = p;
        m.phi = -p.phi;
        GrasslValue gp = grassl(p), gm = grassl(m);
        CHECK(std::abs(gp.re - gm.re) < 1e-14);
        CHECK(std::abs(gp.im + gm.im) < 1e-14);
    }
}

TEST_CASE("closed I5 forms") {
    CHECK(std::abs(i5_closed_one_concurrence_zero(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(i5_closed_one_concurrence_zero(1.0) - 0.25) < 1e-15);
    CHECK(std::abs(i5_closed_one_concurrence_zero(0.5) - 0.625) < 1e-15);

    CHECK(std::abs(i5_closed_w_class(2. / 3, 2. / 3, 2. / 3) - 2.0 / 9.0) < 1e-15);
    CHECK(std::abs(i5_closed_w_class(0, 0, 0) - 1.0) < 1e-15);
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(i5_closed_w_class(r, r, 0) - 0.25) < 1e-15);

    // agreement with the trace formula on constructed states
    Rng rng(6);
    for (int k = 0; k < 200; ++k) {
        PureState3 s = from_acin(random_params(rng, true, false));  // C12 = 0
        CHECK(concurrence(s, {1, 2}) < 1e-10);
        double closed = i5_closed_one_concurrence_zero(local_tangle(s, 3));
        CHECK(std::abs(kempe_i5(s) - closed) < 1e-8);
    }
    for (int k = 0; k < 200; ++k) {
        PureState3 s = from_acin(random_params(rng, false, true));  // tau3 = 0
        TangleVector v = tangle_vector(s);
        CHECK(std::abs(v.i5 - i5_closed_w_class(v.c12, v.c13, v.c23)) < 1e-8);
    }
}

TEST_CASE("concurrence of assistance") {
    CHECK(std::abs(concurrence_of_assistance(preset_state(Preset::GHZ), {1, 2}) - 1.0) <
          1e-10);
    CHECK(concurrence_of_assistance(preset_state(Preset::PRODUCT000), {1, 2}) < 1e-10);
    CHECK(std::abs(concurrence_of_assistance(preset_state(Preset::W), {1, 2}) -
                   2.0 / 3.0) < 1e-10);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PureState3 s = haar_random_state(60000 + seed);
        for (auto pair : {std::pair<int, int>{1, 2}, {1, 3}, {2, 3}}) {
            double ca = concurrence_of_assistance(s, pair);
            double c = concurrence(s, pair);
            CHECK(std::abs(ca * ca - (c * c + three_tangle(s))) < 1e-8);
        }
    }
}

TEST_CASE("tangle_vector reference rows and monogamy") {
    TangleVector ghz = tangle_vector(preset_state(Preset::GHZ));
    CHECK(std::abs(ghz.tau11 - 1.0) < 1e-10);
    CHECK(std::abs(ghz.tau3 - 1.0) < 1e-10);
    CHECK(std::abs(ghz.i5 - 0.25) < 1e-10);
    CHECK(std::abs(ghz.i6 - 1.0) < 1e-10);
    CHECK(ghz.c12 < 1e-10);

    TangleVector w = tangle_vector(preset_state(Preset::W));
    CHECK(std::abs(w.tau11 - 8.0 / 9.0) < 1e-10);
    CHECK(w.tau3 < 1e-12);
    CHECK(std::abs(w.c23 - 2.0 / 3.0) < 1e-10);
    CHECK(std::abs(w.i5 - 2.0 / 9.0) < 1e-10);

    TangleVector z = tangle_vector(preset_state(Preset::PRODUCT000));
    CHECK(z.c12 == 0.0);
    CHECK(z.tau11 == 0.0);
    CHECK(std::abs(z.i5 - 1.0) < 1e-12);
    CHECK(std::abs(z.i6 - 1.0) < 1e-12);

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        TangleVector v = tangle_vector(haar_random_state(80000 + seed));
        CHECK(std::abs(v.tau11 - (v.c12 * v.c12 + v.c13 * v.c13 + v.tau3)) < 1e-8);
        CHECK(std::abs(v.tau12 - (v.c12 * v.c12 + v.c23 * v.c23 + v.tau3)) < 1e-8);
        CHECK(std::abs(v.tau13 - (v.c13 * v.c13 + v.c23 * v.c23 + v.tau3)) < 1e-8);
        CHECK(v.i5 > 2.0 / 9.0 - 1e-9);
        CHECK(v.i5 < 1.0 + 1e-9);
    }
}

TEST_CASE("SL ops scale tau3 but not I5") {
    Rng rng(7);
    int i5_moved = 0;
    auto rand_sl = [&rng]() {
        Eigen::Matrix2cd g;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) g(r, c) = rng.complex_normal();
        g /= std::sqrt(g.determinant());
        return LocalOp::sl2(g, 1e-9);
    };
    for (int trial = 0; trial < 30; ++trial) {
        PureState3 s = haar_random_state(90000 + trial);
        PureState3 out = apply_local_ops(s, rand_sl(), rand_sl(), rand_sl(), true);
        double t3_scaled = three_tangle(out) * std::pow(out.prenorm, 4);
        CHECK(std::abs(t3_scaled - three_tangle(s)) < 1e-8);
        if (std::abs(kempe_i5(out) - kempe_i5(s)) > 1e-4) ++i5_moved;
    }
    CHECK(i5_moved > 20);  // no SL(2,C) invariance of I5 on any qubit
}

TEST_CASE("invariant jacobian ranks") {
    Rng rng(8);
    for (int k = 0; k < 10; ++k) {
        JacobianResult r = invariant_jacobian(interior_params(rng));
        CHECK(r.rank == 6);
    }
    for (int k = 0; k < 10; ++k) {
        AcinParams p = interior_params(rng);
        p.l2 = 0.0;
        CHECK(invariant_jacobian(p, false).rank <= 5);
        AcinParams q = interior_params(rng);
        q.l4 = 0.0;
        CHECK(invariant_jacobian(q, false).rank <= 5);
    }
    AcinParams boundary = interior_params(rng);
    boundary.l2 = 0.0;
    CHECK_THROWS_AS(invariant_jacobian(boundary), BoundaryParamsError);
}
