#include <doctest.h>

#include <cmath>

#include "triq/acin.hpp"
#include "triq/invariants.hpp"
#include "triq/rng.hpp"
#include "triq/statecore.hpp"

using namespace triq;

namespace {

double tangle_distance(const TangleVector& a, const TangleVector& b) {
    double d = 0.0;
    d = std::max(d, std::abs(a.c12 - b.c12));
    d = std::max(d, std::abs(a.c13 - b.c13));
    d = std::max(d, std::abs(a.c23 - b.c23));
    d = std::max(d, std::abs(a.tau3 - b.tau3));
    d = std::max(d, std::abs(a.tau11 - b.tau11));
    d = std::max(d, std::abs(a.tau12 - b.tau12));
    d = std::max(d, std::abs(a.tau13 - b.tau13));
    d = std::max(d, std::abs(a.i5 - b.i5));
    d = std::max(d, std::abs(a.i6 - b.i6));
    return d;
}

double param_distance(const AcinParams& a, const AcinParams& b) {
    double d = std::abs(a.l0 - b.l0);
    d = std::max(d, std::abs(a.l1 - b.l1));
    d = std::max(d, std::abs(a.l2 - b.l2));
    d = std::max(d, std::abs(a.l3 - b.l3));
    d = std::max(d, std::abs(a.l4 - b.l4));
    d = std::max(d, std::abs(a.phi - b.phi));
    return d;
}

}  // namespace

TEST_CASE("from_acin amplitude placement") {
    AcinParams p{0.1, 0.2, 0.3, 0.4, std::sqrt(1 - 0.01 - 0.04 - 0.09 - 0.16), 0.7};
    PureState3 s = from_acin(p);
    CHECK(std::abs(s.amp[0] - cplx(p.l1)) < 1e-15);
    CHECK(std::abs(s.amp[4] - std::polar(p.l0, p.phi)) < 1e-15);
    CHECK(std::abs(s.amp[6] - cplx(p.l2)) < 1e-15);
    CHECK(std::abs(s.amp[5] - cplx(p.l3)) < 1e-15);
    CHECK(std::abs(s.amp[7] - cplx(p.l4)) < 1e-15);
    for (int b : {1, 2, 3}) CHECK(std::abs(s.amp[b]) == 0.0);

    double r = 1.0 / std::sqrt(2.0);
    PureState3 ghz = from_acin({0, r, 0, 0, r, 0});
    PureState3 ghz_ref = preset_state(Preset::GHZ);
    for (int b = 0; b < 8; ++b) CHECK(std::abs(ghz.amp[b] - ghz_ref.amp[b]) < 1e-15);

    double q = 1.0 / std::sqrt(5.0);
    for (double a : {0.0, 0.9, kPi}) {
        PureState3 psi = from_acin({q, q, q, q, q, a});
        PureState3 ref = preset_state(Preset::PSI_ALPHA, a);
        for (int b = 0; b < 8; ++b) CHECK(std::abs(psi.amp[b] - ref.amp[b]) < 1e-15);
    }

    PureState3 zero = from_acin({0, 1, 0, 0, 0, 0});
    CHECK(std::abs(zero.amp[0] - cplx(1.0)) < 1e-15);
}

TEST_CASE("to_acin on GHZ") {
    AcinReduction red = to_acin(preset_state(Preset::GHZ));
    CHECK(std::abs(red.params.l1 - 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(std::abs(red.params.l4 - 1.0 / std::sqrt(2.0)) < 1e-9);
    CHECK(red.params.l0 < 1e-9);
    CHECK(red.params.l2 < 1e-9);
    CHECK(red.params.l3 < 1e-9);
    CHECK(red.residual < 1e-9);
}

TEST_CASE("to_acin canonical-form contract on Haar states") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        PureState3 s = haar_random_state(100000 + seed);
        AcinReduction red = to_acin(s);
        // phi in range, nonnegative lambdas, normalized
        CHECK(red.params.phi >= 0.0);
        CHECK(red.params.phi <= kPi);
        red.params.validate(1e-9);
        CHECK(red.residual < 1e-9);
        // the witnesses really map the input onto the canonical state
        PureState3 mapped = apply_local_ops(s, red.u1, red.u2, red.u3, false);
        PureState3 canon = from_acin(red.params);
        for (int b = 0; b < 8; ++b) CHECK(std::abs(mapped.amp[b] - canon.amp[b]) < 1e-9);
    }
}

TEST_CASE("to_acin round trip preserves the tangle vector") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PureState3 s = haar_random_state(110000 + seed);
        AcinReduction red = to_acin(s);
        TangleVector in = tangle_vector(s);
        TangleVector out = tangle_vector(from_acin(red.params));
        CHECK(tangle_distance(in, out) < 1e-8);
    }
}

TEST_CASE("to_acin idempotence on canonical inputs") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        AcinParams p = to_acin(haar_random_state(120000 + seed)).params;
        AcinParams again = to_acin(from_acin(p)).params;
        CHECK(param_distance(p, again) < 1e-9);
    }
}

TEST_CASE("tau3 closed form vs hyperdeterminant") {
    double r = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(tau3_closed({0, r, 0, 0, r, 0}) - 1.0) < 1e-15);
    CHECK(tau3_closed({0.5, 0.5, 0.5, 0.5, 0.0, 1.0}) == 0.0);
    double q = 1.0 / std::sqrt(5.0);
    CHECK(std::abs(tau3_closed({q, q, q, q, q, 0}) - 4.0 / 25.0) < 1e-15);

    Rng rng(9);
    for (int k = 0; k < 2000; ++k) {
        double l[5];
        double n2 = 0;
        for (auto& x : l) {
            x = std::abs(rng.normal());
            n2 += x * x;
        }
        double n = std::sqrt(n2);
        AcinParams p{l[0] / n, l[1] / n, l[2] / n, l[3] / n, l[4] / n,
                     rng.uniform(0.0, kPi)};
        CHECK(std::abs(tau3_closed(p) - three_tangle(from_acin(p))) < 1e-10);
    }
}

TEST_CASE("phase removability when l2 or l3 vanishes") {
    Rng rng(10);
    for (int k = 0; k < 50; ++k) {
        double l[5];
        double n2 = 0;
        for (auto& x : l) {
            x = std::abs(rng.normal());
            n2 += x * x;
        }
        int kill = (k % 2) ? 2 : 3;
        n2 -= l[kill] * l[kill];
        l[kill] = 0.0;
        double n = std::sqrt(n2);
        double phi = rng.uniform(0.1, kPi - 0.1);
        AcinParams with{l[0] / n, l[1] / n, l[2] / n, l[3] / n, l[4] / n, phi};
        AcinParams without = with;
        without.phi = 0.0;
        TangleVector a = tangle_vector(from_acin(with));
        TangleVector b = tangle_vector(from_acin(without));
        CHECK(tangle_distance(a, b) < 1e-9);
    }
}

TEST_CASE("to_acin rejects unnormalized input") {
    PureState3 bad;
    bad.amp[0] = 1.0;
    bad.amp[7] = 1.0;  // norm sqrt(2)
    CHECK_THROWS_AS(to_acin(bad), BadParamError);
}
