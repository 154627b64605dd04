#pragma once

// Reduction of a pure three-qubit state to the five-amplitude canonical form
// and evaluation of closed forms defined on it.

#include "triq/acin_params.hpp"
#include "triq/types.hpp"

namespace triq {

struct AcinReduction {
    AcinParams params;
    // Local unitaries mapping the input to the canonical form.
    LocalOp u1, u2, u3;
    // Max amplitude deviation between from_acin(params) and the transformed
    // input; < 1e-9 on valid normalized input.
    double residual = 0.0;
};

// Places l1 at |000>, l0 e^{i phi} at |100>, l2 at |110>, l3 at |101>,
// l4 at |111>. Accepts raw coordinates (no normalization or sign check) so
// closed forms stay differentiable; callers needing a canonical state
// validate the params first.
PureState3 from_acin(const AcinParams& params);

// Canonical reduction. Both roots of the slice quadratic are tried; the
// candidate with phi in [0, pi] wins, ties broken by larger l1 then larger
// (l1, l4) lexicographically.
AcinReduction to_acin(const PureState3& state);

// tau3 = 4 l1^2 l4^2.
double tau3_closed(const AcinParams& params);

}  // namespace triq
