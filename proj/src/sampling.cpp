#include "triq/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "triq/acin.hpp"
#include "triq/invariants.hpp"
#include "triq/kernels.hpp"
#include "triq/rng.hpp"
#include "triq/statecore.hpp"

namespace triq {

namespace {

PureState3 draw_haar(Rng& rng) {
    std::array<cplx, 8> a{};
    for (int b = 0; b < 8; ++b) a[b] = rng.complex_normal();
    return make_state(a);
}

AcinParams draw_acin(Rng& rng, bool zero_l4) {
    double l[5];
    double n2 = 0.0;
    for (int k = 0; k < 5; ++k) {
        l[k] = (zero_l4 && k == 4) ? 0.0 : std::abs(rng.normal());
        n2 += l[k] * l[k];
    }
    double n = std::sqrt(n2);
    AcinParams p;
    p.l0 = l[0] / n;
    p.l1 = l[1] / n;
    p.l2 = l[2] / n;
    p.l3 = l[3] / n;
    p.l4 = l[4] / n;
    p.phi = rng.uniform(0.0, kPi);
    return p;
}

}  // namespace

Ensemble parse_ensemble(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), ::tolower);
    if (n == "haar") return Ensemble::Haar;
    if (n == "ghz" || n == "ghz_class") return Ensemble::GhzClass;
    if (n == "acin" || n == "acin_random") return Ensemble::AcinRandom;
    if (n == "w" || n == "w_class") return Ensemble::WClass;
    throw BadParamError("unknown ensemble '" + name + "'");
}

PureState3 sample_state(Ensemble ensemble, std::uint64_t stream_seed) {
    Rng rng(stream_seed);
    switch (ensemble) {
        case Ensemble::Haar:
            return draw_haar(rng);
        case Ensemble::GhzClass:
            for (;;) {
                PureState3 s = draw_haar(rng);
                if (three_tangle(s) > 1e-6) return s;
            }
        case Ensemble::AcinRandom:
            return from_acin(draw_acin(rng, false));
        case Ensemble::WClass:
            return from_acin(draw_acin(rng, true));
    }
    throw BadParamError("ensemble");
}

std::vector<ScatterRow> sample_scatter(Ensemble ensemble, std::size_t n,
                                       std::uint64_t seed) {
    kernels::StateBatch batch;
    batch.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        batch.push_back(sample_state(ensemble, seed + k));

    kernels::TangleRows rows;
    kernels::active().tangles(batch, rows);

    std::vector<ScatterRow> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k].index = k;
        out[k].tau3 = rows.tau3[k];
        out[k].i5 = rows.i5[k];
        out[k].c12 = rows.c12[k];
        out[k].c13 = rows.c13[k];
        out[k].c23 = rows.c23[k];
        out[k].cls = classify_from_values(rows.c12[k], rows.c13[k], rows.c23[k],
                                          rows.tau3[k]);
    }
    return out;
}

PureState3 min_curve_state(double a) {
    if (!(a >= 0.0 && a <= 1.0)) throw BadParamError("a must lie in [0,1]");
    double b = std::sqrt(std::max(0.0, 1.0 - a * a)) / std::sqrt(3.0);
    std::array<cplx, 8> amp{};
    amp[7] = a;
    amp[4] = b;
    amp[2] = b;
    amp[1] = b;
    return make_state(amp);
}

}  // namespace triq
