#pragma once

// Canonical-form coordinates (l0..l4, phi) for the five-amplitude normal form
//   l1|000> + l0 e^{i phi}|100> + l2|110> + l3|101> + l4|111>.

#include <string>

#include "triq/types.hpp"

namespace triq {

struct AcinParams {
    double l0 = 0, l1 = 0, l2 = 0, l3 = 0, l4 = 0;
    double phi = 0;

    double norm2() const {
        return l0 * l0 + l1 * l1 + l2 * l2 + l3 * l3 + l4 * l4;
    }

    // Canonical-form validity: nonnegative amplitudes, unit norm, phi in
    // [0, pi]. Functions that merely evaluate closed forms accept raw
    // (even slightly negative or unnormalized) coordinates and do not call
    // this; construction sites for canonical output do.
    void validate(double norm_tol = 1e-10) const {
        for (double l : {l0, l1, l2, l3, l4})
            if (l < 0.0) throw BadParamError("AcinParams: negative lambda");
        if (std::abs(norm2() - 1.0) > norm_tol)
            throw BadParamError("AcinParams: not normalized (norm2 = " +
                                std::to_string(norm2()) + ")");
        if (phi < -1e-12 || phi > kPi + 1e-12)
            throw BadParamError("AcinParams: phi outside [0, pi]");
    }
};

}  // namespace triq
