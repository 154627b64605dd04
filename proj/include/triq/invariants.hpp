#pragma once

// Scalar invariants of a three-qubit pure state: concurrences, threetangle,
// local tangles, Kempe I5, modulus I6, the Grassl invariant on canonical
// parameters, closed-form I5 relations, concurrence of assistance, and the
// finite-difference Jacobian probe for functional independence.

#include <utility>

#include "triq/acin_params.hpp"
#include "triq/types.hpp"

namespace triq {

struct TangleVector {
    double c12 = 0, c13 = 0, c23 = 0;
    double tau3 = 0;
    double tau11 = 0, tau12 = 0, tau13 = 0;
    double i5 = 0;
    double i6 = 0;

    double concurrence(int i, int j) const;
    double local_tangle(int i) const;
};

struct GrasslValue {
    double re = 0, im = 0;
};

// Wootters concurrence of the reduced pair (i,j): the mu's are the decreasing
// square roots of the eigenvalues of rho*rho~ (4x4 non-Hermitian product,
// real parts clamped at 0), C = max(0, mu1-mu2-mu3-mu4).
double concurrence(const PureState3& state, std::pair<int, int> pair);

// Sum of the same four mu's (concurrence of assistance, Uhlmann fidelity).
double concurrence_of_assistance(const PureState3& state, std::pair<int, int> pair);

// tau3 = 4|d1 - 2 d2 + 4 d3| (modulus of Cayley's 2x2x2 hyperdeterminant,
// times 4). Defined for unnormalized amplitudes too (scales as |psi|^4);
// no clamping, so the value stays differentiable in the amplitudes.
double three_tangle(const PureState3& state);

// 4 det rho_i, clamped to [0,1] for normalized states.
double local_tangle(const PureState3& state, int qubit);

// Unclamped 4 det rho_i; well-defined and smooth for unnormalized states,
// which the Jacobian stencil needs.
double local_tangle_raw(const PureState3& state, int qubit);

// I5 = 3 tr((rho_i x rho_j) rho_ij) - tr rho_i^3 - tr rho_j^3. Computed from
// unnormalized reduced matrices, so the value scales as |psi|^6.
double kempe_i5(const PureState3& state, std::pair<int, int> pair = {1, 2});

// Squared 2-norm of the amplitudes.
double modulus_i6(const PureState3& state);

// Grassl invariant evaluated on canonical-form parameters.
GrasslValue grassl(const AcinParams& params);

// I5 = n2 * (n2^2 - 3/4 * tau) for a state with one vanishing concurrence;
// `tau` is the local tangle of the qubit complementary to the vanishing pair
// (see the conformance report for the index bookkeeping).
double i5_closed_one_concurrence_zero(double tau, double norm2 = 1.0);

// I5 = n2^3 - 3/4 n2 (C12^2+C13^2+C23^2) + 3/4 C12 C13 C23 on the W class.
double i5_closed_w_class(double c12, double c13, double c23, double norm2 = 1.0);

// All nine invariants; asserts the monogamy identity for normalized input.
TangleVector tangle_vector(const PureState3& state);

struct JacobianResult {
    Eigen::Matrix<double, 6, 6> j;        // d(inv)/d(l0,l1,l2,l3,l4,phi)
    Eigen::Matrix<double, 6, 1> singular_values;
    int rank = 0;
};

// Central finite differences (step 1e-6) of
// (tau11, tau12, tau13, tau3, I5, I6) as functions of the raw canonical
// parameters; rank counts singular values above 1e-6 * sigma_max.
// With require_interior=true (the default), params must satisfy
// lambda_i > 1e-6 and phi in (0.01, pi-0.01) or BoundaryParamsError is
// thrown; the dependence probes at lambda2=0 / lambda4=0 pass false.
JacobianResult invariant_jacobian(const AcinParams& params,
                                  bool require_interior = true);

}  // namespace triq
