#pragma once

// One-parameter families of canonical-form states with all tangles held
// fixed, driven by lambda4, plus the admissible lambda4 interval.
//
// The published closed-form interval expressions are evaluated and logged,
// but feasibility is decided by direct evaluation on a grid with bisection
// refinement: the published closed forms disagree with the direct algebra in
// places (see constraints_log and the conformance report).

#include <string>
#include <vector>

#include "triq/acin_params.hpp"
#include "triq/invariants.hpp"

namespace triq {

struct TangleTarget {
    double tau3 = 0;             // must be > 0
    double c12 = 0, c13 = 0, c23 = 0;

    void validate() const;
    double tau11() const { return c12 * c12 + c13 * c13 + tau3; }
};

// Oracle target: the tangles of an arbitrary state.
TangleTarget target_from_state(const PureState3& state);

struct ConstraintLogEntry {
    std::string name;
    double lo = 0, hi = 0;
    std::string note;
};

struct ValidityInterval {
    double lo = 0, hi = 0;
    // Connected feasible components inside [lo, hi]; a component with
    // hi - lo < 1e-9 is an isolated point (extremal-C23 targets degenerate
    // to those; see scan()).
    std::vector<std::pair<double, double>> components;
    std::vector<ConstraintLogEntry> constraints_log;

    bool degenerate() const {
        for (const auto& [a, b] : components)
            if (b - a > 1e-9) return false;
        return true;
    }
};

// params at a given lambda4: l1 = sqrt(tau3)/(2 l4), l2 = l4 c12/sqrt(tau3),
// l3 = l4 c13/sqrt(tau3), l0 from normalization, phi from the C23 relation
// cos(phi) = (4 l2^2 l3^2 + 4 l0^2 l4^2 - C23^2) / (8 l0 l2 l3 l4),
// with phi = 0 when c12 or c13 vanishes.
// Throws OutOfIntervalError / NegativeRadicandError outside the feasible set.
AcinParams params_at(const TangleTarget& target, double lambda4);

// Diagnostic variant used beyond the feasible set: lambda0 clamped at 0 and
// cos(phi) clamped into [-1, 1]; the result may be unnormalized. tau3 of the
// constructed state still matches the target, other tangles drift.
AcinParams params_at_clamped(const TangleTarget& target, double lambda4);

ValidityInterval validity_interval(const TangleTarget& target);

struct FamilyRow {
    double lambda4 = 0;
    AcinParams params;
    double cos_phi = 0;
    TangleVector tangles;
    GrasslValue ig;
};

struct FamilyTable {
    TangleTarget target;
    ValidityInterval interval;
    std::vector<FamilyRow> rows;
};

// npoints rows over the feasible set: uniform on the open interval (endpoint
// margin 1e-6 of the width) in the generic single-component case; for a
// degenerate set the rows sit on the isolated feasible points, repeated to
// honor npoints, lambda4 nondecreasing.
FamilyTable scan(const TangleTarget& target, int npoints);

// Diagnostic sweep over an explicit lambda4 range with lambda0 and cos(phi)
// clamped: reproduces the plotted behavior outside (or between) the feasible
// set, where tau3 stays at the target while norm and concurrences drift.
FamilyTable probe_scan(const TangleTarget& target, int npoints, double lo,
                       double hi);

}  // namespace triq
