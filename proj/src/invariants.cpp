#include "triq/invariants.hpp"

#include <algorithm>
#include <cmath>

#include "triq/acin.hpp"
#include "triq/statecore.hpp"

namespace triq {

namespace {

void check_pair(std::pair<int, int> pair) {
    auto [i, j] = pair;
    if (i == j || i < 1 || i > 3 || j < 1 || j > 3)
        throw BadPairError("pair must be two distinct qubits in {1,2,3}");
}

Eigen::Matrix4cd spin_flip(const Eigen::Matrix4cd& rho) {
    // sigma_y (x) sigma_y in the pair basis (00,01,10,11).
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy * rho.conjugate() * yy;
}

// Decreasing square roots of the eigenvalues of rho * rho~.
std::array<double, 4> spin_flip_mus(const PureState3& state,
                                    std::pair<int, int> pair) {
    check_pair(pair);
    int i = std::min(pair.first, pair.second);
    int j = std::max(pair.first, pair.second);
    Eigen::Matrix4cd rho = reduced_density(state, {i, j}).m;
    Eigen::Matrix4cd prod = rho * spin_flip(rho);
    Eigen::ComplexEigenSolver<Eigen::Matrix4cd> es(prod, false);
    // rho rho~ has a structural two-dimensional zero eigenspace (the reduced
    // state of a pure three-qubit state has rank <= 2); the solver reports
    // those zeros with O(eps * ||A||) noise, which the square root would
    // amplify to ~1e-8. Floor real parts relative to the largest eigenvalue.
    double top = 0.0;
    for (int k = 0; k < 4; ++k)
        top = std::max(top, es.eigenvalues()(k).real());
    std::array<double, 4> mu{};
    for (int k = 0; k < 4; ++k) {
        double v = es.eigenvalues()(k).real();
        if (v < 1e-12 * top) v = 0.0;
        mu[k] = std::sqrt(v);
    }
    std::sort(mu.begin(), mu.end(), std::greater<>());
    return mu;
}

}  // namespace

double TangleVector::concurrence(int i, int j) const {
    int a = std::min(i, j), b = std::max(i, j);
    if (a == 1 && b == 2) return c12;
    if (a == 1 && b == 3) return c13;
    if (a == 2 && b == 3) return c23;
    throw BadPairError("concurrence lookup");
}

double TangleVector::local_tangle(int i) const {
    switch (i) {
        case 1: return tau11;
        case 2: return tau12;
        case 3: return tau13;
    }
    throw BadQubitSetError("local tangle lookup");
}

double concurrence(const PureState3& state, std::pair<int, int> pair) {
    auto mu = spin_flip_mus(state, pair);
    return std::max(0.0, mu[0] - mu[1] - mu[2] - mu[3]);
}

double concurrence_of_assistance(const PureState3& state,
                                 std::pair<int, int> pair) {
    auto mu = spin_flip_mus(state, pair);
    return mu[0] + mu[1] + mu[2] + mu[3];
}

double three_tangle(const PureState3& state) {
    const auto& a = state.amp;
    cplx p07 = a[0] * a[7], p16 = a[1] * a[6], p25 = a[2] * a[5], p34 = a[3] * a[4];
    cplx d1 = p07 * p07 + p16 * p16 + p25 * p25 + p34 * p34;
    cplx d2 = p07 * p34 + p07 * p25 + p07 * p16 + p34 * p25 + p34 * p16 + p25 * p16;
    cplx d3 = (a[0] * a[3]) * (a[5] * a[6]) + (a[1] * a[2]) * (a[4] * a[7]);
    return 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

double local_tangle_raw(const PureState3& state, int qubit) {
    if (qubit < 1 || qubit > 3) throw BadQubitSetError("qubit index");
    Eigen::MatrixXcd rho = reduced_density(state, {qubit}).m;
    return 4.0 * (rho(0, 0).real() * rho(1, 1).real() - std::norm(rho(0, 1)));
}

double local_tangle(const PureState3& state, int qubit) {
    double t = local_tangle_raw(state, qubit);
    if (t < 0.0 && t > -1e-12) t = 0.0;
    if (t > 1.0 && t < 1.0 + 1e-12) t = 1.0;
    return t;
}

double kempe_i5(const PureState3& state, std::pair<int, int> pair) {
    check_pair(pair);
    int i = std::min(pair.first, pair.second);
    int j = std::max(pair.first, pair.second);
    Eigen::Matrix2cd ri = reduced_density(state, {i}).m;
    Eigen::Matrix2cd rj = reduced_density(state, {j}).m;
    Eigen::Matrix4cd rij = reduced_density(state, {i, j}).m;
    Eigen::Matrix4cd kron = Eigen::Matrix4cd::Zero();
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            kron(r, c) = ri(r >> 1, c >> 1) * rj(r & 1, c & 1);
    double t = (kron * rij).trace().real();
    double ti = (ri * ri * ri).trace().real();
    double tj = (rj * rj * rj).trace().real();
    return 3.0 * t - ti - tj;
}

double modulus_i6(const PureState3& state) { return state.norm2(); }

GrasslValue grassl(const AcinParams& p) {
    double tau3 = 4.0 * p.l1 * p.l1 * p.l4 * p.l4;
    double prod = p.l0 * p.l2 * p.l3;       // lambda0 lambda2 lambda3
    double w = 1.0 - 2.0 * (p.l0 * p.l0 + p.l1 * p.l1);
    double cphi = std::cos(p.phi), c2phi = std::cos(2.0 * p.phi);
    double sphi = std::sin(p.phi);
    GrasslValue g;
    g.re = tau3 * p.l1 * p.l1 *
           (c2phi * prod * prod +
            (cphi * prod * p.l4 + 0.25 * p.l4 * p.l4 * w) * w);
    g.im = -tau3 * sphi * prod * (2.0 * cphi * prod + p.l4 * w);
    return g;
}

double i5_closed_one_concurrence_zero(double tau, double norm2) {
    return norm2 * (norm2 * norm2 - 0.75 * tau);
}

double i5_closed_w_class(double c12, double c13, double c23, double norm2) {
    return norm2 * norm2 * norm2 -
           0.75 * norm2 * (c12 * c12 + c13 * c13 + c23 * c23) +
           0.75 * c12 * c13 * c23;
}

TangleVector tangle_vector(const PureState3& state) {
    TangleVector v;
    v.c12 = concurrence(state, {1, 2});
    v.c13 = concurrence(state, {1, 3});
    v.c23 = concurrence(state, {2, 3});
    v.tau3 = three_tangle(state);
    v.tau11 = local_tangle(state, 1);
    v.tau12 = local_tangle(state, 2);
    v.tau13 = local_tangle(state, 3);
    v.i5 = kempe_i5(state, {1, 2});
    v.i6 = modulus_i6(state);
    if (std::abs(v.i6 - 1.0) < 1e-6) {
        double defect = std::abs(v.tau11 - (v.c12 * v.c12 + v.c13 * v.c13 + v.tau3));
        if (defect > 1e-8)
            throw NumericError("monogamy identity violated (defect " +
                               std::to_string(defect) + ")");
    }
    return v;
}

JacobianResult invariant_jacobian(const AcinParams& params, bool require_interior) {
    if (require_interior) {
        for (double l : {params.l0, params.l1, params.l2, params.l3, params.l4})
            if (l <= 1e-6) throw BoundaryParamsError("lambda at boundary");
        if (params.phi <= 0.01 || params.phi >= kPi - 0.01)
            throw BoundaryParamsError("phi at boundary");
    }

    // Invariants of the raw (not renormalized) canonical-form state; I6 must
    // vary with the parameters or the Jacobian could never reach rank 6.
    auto invs = [](const AcinParams& p) {
        PureState3 s = from_acin(p);
        Eigen::Matrix<double, 6, 1> f;
        f(0) = local_tangle_raw(s, 1);
        f(1) = local_tangle_raw(s, 2);
        f(2) = local_tangle_raw(s, 3);
        f(3) = three_tangle(s);
        f(4) = kempe_i5(s, {1, 2});
        f(5) = modulus_i6(s);
        return f;
    };

    const double h = 1e-6;
    JacobianResult out;
    for (int k = 0; k < 6; ++k) {
        AcinParams plus = params, minus = params;
        double* fields_plus[6] = {&plus.l0, &plus.l1, &plus.l2, &plus.l3, &plus.l4, &plus.phi};
        double* fields_minus[6] = {&minus.l0, &minus.l1, &minus.l2, &minus.l3, &minus.l4, &minus.phi};
        *fields_plus[k] += h;
        *fields_minus[k] -= h;
        out.j.col(k) = (invs(plus) - invs(minus)) / (2.0 * h);
    }
    Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(out.j);
    out.singular_values = svd.singularValues();
    double smax = out.singular_values(0);
    out.rank = 0;
    for (int k = 0; k < 6; ++k)
        if (out.singular_values(k) > 1e-6 * smax) ++out.rank;
    return out;
}

}  // namespace triq
