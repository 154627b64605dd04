#include <doctest.h>

#include <cmath>

#include "triq/acin.hpp"
#include "triq/invariants.hpp"
#include "triq/kernels.hpp"
#include "triq/rng.hpp"
#include "triq/sampling.hpp"
#include "triq/statecore.hpp"

using namespace triq;

namespace {

kernels::StateBatch mixed_batch(std::size_t n) {
    kernels::StateBatch batch;
    batch.reserve(n);
    batch.push_back(preset_state(Preset::GHZ));
    batch.push_back(preset_state(Preset::W));
    batch.push_back(preset_state(Preset::PRODUCT000));
    batch.push_back(preset_state(Preset::PSI_ALPHA, 1.3));
    for (std::size_t k = batch.n; k < n; ++k) {
        switch (k % 3) {
            case 0: batch.push_back(haar_random_state(200000 + k)); break;
            case 1: batch.push_back(sample_state(Ensemble::AcinRandom, 200000 + k)); break;
            default: batch.push_back(sample_state(Ensemble::WClass, 200000 + k)); break;
        }
    }
    return batch;
}

double max_row_diff(const kernels::TangleRows& a, const kernels::TangleRows& b) {
    double d = 0.0;
    for (std::size_t k = 0; k < a.c12.size(); ++k) {
        d = std::max(d, std::abs(a.c12[k] - b.c12[k]));
        d = std::max(d, std::abs(a.c13[k] - b.c13[k]));
        d = std::max(d, std::abs(a.c23[k] - b.c23[k]));
        d = std::max(d, std::abs(a.tau3[k] - b.tau3[k]));
        d = std::max(d, std::abs(a.tau11[k] - b.tau11[k]));
        d = std::max(d, std::abs(a.tau12[k] - b.tau12[k]));
        d = std::max(d, std::abs(a.tau13[k] - b.tau13[k]));
        d = std::max(d, std::abs(a.i5[k] - b.i5[k]));
        d = std::max(d, std::abs(a.i6[k] - b.i6[k]));
    }
    return d;
}

}  // namespace

TEST_CASE("scalar kernels match the spin-flip / reduced-density route") {
    kernels::StateBatch batch = mixed_batch(500);
    kernels::TangleRows rows;
    kernels::scalar_kernels().tangles(batch, rows);
    for (std::size_t k = 0; k < batch.n; ++k) {
        PureState3 s = batch.state(k);
        CHECK(std::abs(rows.c12[k] - concurrence(s, {1, 2})) < 1e-9);
        CHECK(std::abs(rows.c13[k] - concurrence(s, {1, 3})) < 1e-9);
        CHECK(std::abs(rows.c23[k] - concurrence(s, {2, 3})) < 1e-9);
        CHECK(std::abs(rows.tau3[k] - three_tangle(s)) < 1e-12);
        CHECK(std::abs(rows.tau11[k] - local_tangle(s, 1)) < 1e-12);
        CHECK(std::abs(rows.tau12[k] - local_tangle(s, 2)) < 1e-12);
        CHECK(std::abs(rows.tau13[k] - local_tangle(s, 3)) < 1e-12);
        CHECK(std::abs(rows.i5[k] - kempe_i5(s)) < 1e-12);
        CHECK(std::abs(rows.i6[k] - modulus_i6(s)) < 1e-14);
    }
}

TEST_CASE("avx2 kernels agree with the scalar reference") {
    const kernels::KernelSet* avx2 = kernels::avx2_kernels();
    if (!avx2) {
        MESSAGE("avx2 kernels unavailable on this host; skipping equivalence");
        return;
    }
    for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 64u, 1001u}) {
        kernels::StateBatch batch = mixed_batch(n);
        kernels::TangleRows a, b;
        kernels::scalar_kernels().tangles(batch, a);
        avx2->tangles(batch, b);
        CHECK(max_row_diff(a, b) < 1e-12);

        std::vector<double> ka, kb;
        kernels::scalar_kernels().kempe(batch, ka);
        avx2->kempe(batch, kb);
        for (std::size_t k = 0; k < n; ++k) CHECK(std::abs(ka[k] - kb[k]) < 1e-12);
    }
}

TEST_CASE("kernel dispatch") {
    kernels::force("scalar");
    CHECK(std::string(kernels::active().name) == "scalar");
    kernels::force("auto");
    if (kernels::avx2_kernels())
        CHECK(std::string(kernels::active().name) == "avx2");
    CHECK_THROWS_AS(kernels::force("nope"), BadParamError);
    kernels::force("auto");
}
