#pragma once

// SL(2,C) orbit machinery: the normalization-preserving diagonal
// transformation on the canonical form, random local SLOCC channels, the I5
// monotonicity fuzzer, and SLOCC-class labeling.

#include <cstdint>
#include <utility>
#include <vector>

#include "triq/acin_params.hpp"
#include "triq/types.hpp"

namespace triq {

enum class Branch { Plus, Minus };

// |s|^2 for the transformation diag(t,1/t) on qubit 1, diag(s,1/s) on qubit 2,
//   |s|^2 = [ |t|^2 +- sqrt(|t|^4 (1-4 l1^2 (l2^2+l4^2))
//                           - 4 (l2^2+l4^2)(l0^2+l3^2)) ]
//           / ( 2 (l1^2 |t|^4 + l0^2 + l3^2) ).
// The discriminant is nonnegative for |t| >= t_bound (the published
// fourth-root expression); note the published inequality direction is
// inverted relative to its own discriminant -- t = 1 always satisfies
// disc = (A-B)^2 >= 0.
// Throws OutOfBoundError for |t| < t_bound, NegativeDiscriminantError if
// the discriminant still ends up below -1e-12.
double diagonal_s_of_t(const AcinParams& params, double t, Branch branch);

// The fourth-root bound from the same relation.
double diagonal_t_bound(const AcinParams& params);

// Applies diag(t,1/t) (x) diag(s,1/s) (x) 1 with s = sqrt(|s|^2 plus branch);
// the result is normalized by construction.
PureState3 apply_diagonal_orbit(const AcinParams& params, double t, Branch branch);

// Three invertible local operators, renormalized output plus the norm before
// normalization. tau3' = tau3 |det1 det2 det3|^2 / prenorm^4.
std::pair<PureState3, double> apply_slocc(const PureState3& state,
                                          const LocalOp& op1, const LocalOp& op2,
                                          const LocalOp& op3);

struct KrausChannel {
    std::vector<int> qubits;  // 1 or 2 acted qubits, ascending
    // One operator tuple per branch: tuple[k][q] acts on qubits[q].
    std::vector<std::vector<Eigen::Matrix2cd>> kraus;

    // Max deviation of sum_k A_k^dag A_k from the identity on the acted
    // subsystem.
    double completeness_defect() const;
};

// One- or two-qubit channel with <= 2 branches. A1 is a Gaussian contraction
// (largest singular value scaled below 1), A2 = V sqrt(1 - A1^dag A1) with V
// a random unitary. For two qubits the second factor of each branch is a
// branch-conditioned random unitary, which keeps the tuple product form while
// preserving completeness. Deterministic per seed.
KrausChannel random_two_kraus_channel(std::uint64_t seed, int nqubits);

struct MonotonicityTrial {
    double i5_before = 0;
    double i5_after_avg = 0;
    // avg - before: nonnegative margin = monotone behavior (average I5 does
    // not decrease under local channels; see README on the direction).
    double margin = 0;
    std::vector<double> branch_probs;
};

MonotonicityTrial monotonicity_trial(const PureState3& state,
                                     const KrausChannel& channel);

enum class SloccLabel { Product, Biseparable, W, GHZ };

struct SloccClass {
    SloccLabel label = SloccLabel::Product;
    // For Biseparable: the entangled pair.
    std::pair<int, int> pair{0, 0};
    // (Theta(C12), Theta(C13), Theta(C23)).
    std::array<int, 3> char_vector{0, 0, 0};

    std::string name() const;
};

SloccClass classify(const PureState3& state, double eps = 1e-9);

// Same labeling from precomputed invariants (used by the batched ensembles).
SloccClass classify_from_values(double c12, double c13, double c23, double tau3,
                                double eps = 1e-9);

}  // namespace triq
