#pragma once

// Random-ensemble experiments: the I5 vs tau3 scatter, class-conditioned
// sampling, and the minimum curve a|111> + sqrt(1-a^2)|W>.

#include <cstdint>
#include <vector>

#include "triq/slocc.hpp"
#include "triq/types.hpp"

namespace triq {

enum class Ensemble { Haar, GhzClass, AcinRandom, WClass };

Ensemble parse_ensemble(const std::string& name);

struct ScatterRow {
    std::size_t index = 0;
    double tau3 = 0, i5 = 0;
    double c12 = 0, c13 = 0, c23 = 0;
    SloccClass cls;
};

// Sample index k is drawn from its own stream seeded with seed + k, so rows
// are order- and thread-count-independent. GhzClass rejection-samples Haar
// states on tau3 > 1e-6; AcinRandom draws lambda uniformly on the positive
// unit 4-sphere octant and phi uniform on [0, pi]; WClass is AcinRandom with
// lambda4 forced to 0.
std::vector<ScatterRow> sample_scatter(Ensemble ensemble, std::size_t n,
                                       std::uint64_t seed);

// Draw one state of the given ensemble from an explicit stream seed.
PureState3 sample_state(Ensemble ensemble, std::uint64_t stream_seed);

// a|111> + sqrt(1-a^2) |W>, the lower envelope of I5 over tau3.
PureState3 min_curve_state(double a);

}  // namespace triq
