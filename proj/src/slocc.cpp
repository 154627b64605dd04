#include "triq/slocc.hpp"

#include <cmath>

#include "triq/acin.hpp"
#include "triq/invariants.hpp"
#include "triq/rng.hpp"
#include "triq/statecore.hpp"

namespace triq {

namespace {

struct DiagPieces {
    double a;   // l2^2 + l4^2
    double bp;  // l0^2 + l3^2
    double l1sq;
};

DiagPieces pieces(const AcinParams& p) {
    return {p.l2 * p.l2 + p.l4 * p.l4, p.l0 * p.l0 + p.l3 * p.l3, p.l1 * p.l1};
}

Eigen::Matrix2cd random_unitary(Rng& rng) {
    // QR of a complex Ginibre matrix with the phase convention fixed.
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = rng.complex_normal();
    Eigen::HouseholderQR<Eigen::Matrix2cd> qr(g);
    Eigen::Matrix2cd q = qr.householderQ();
    Eigen::Matrix2cd rmat = q.adjoint() * g;
    for (int c = 0; c < 2; ++c) {
        cplx d = rmat(c, c);
        q.col(c) *= d / std::abs(d);
    }
    return q;
}

}  // namespace

double diagonal_t_bound(const AcinParams& p) {
    auto [a, bp, l1sq] = pieces(p);
    double den = 1.0 - 4.0 * l1sq * a;
    if (den <= 0.0) return 0.0;  // never reached for normalized params
    return std::pow(4.0 * a * bp / den, 0.25);
}

double diagonal_s_of_t(const AcinParams& p, double t, Branch branch) {
    auto [a, bp, l1sq] = pieces(p);
    double t2 = t * t, t4 = t2 * t2;
    double bound = diagonal_t_bound(p);
    if (std::abs(t) < bound - 1e-12)
        throw OutOfBoundError("|t| = " + std::to_string(std::abs(t)) +
                              " below the discriminant bound " + std::to_string(bound));
    double disc = t4 * (1.0 - 4.0 * l1sq * a) - 4.0 * a * bp;
    if (disc < -1e-12) throw NegativeDiscriminantError(std::to_string(disc));
    if (disc < 0.0) disc = 0.0;
    double root = std::sqrt(disc);
    double num = branch == Branch::Plus ? t2 + root : t2 - root;
    return 0.5 * num / (l1sq * t4 + bp);
}

PureState3 apply_diagonal_orbit(const AcinParams& p, double t, Branch branch) {
    double s2 = diagonal_s_of_t(p, t, branch);
    if (s2 <= 0.0) throw NegativeDiscriminantError("|s|^2 <= 0");
    double s = std::sqrt(s2);
    Eigen::Matrix2cd d1, d2;
    d1 << t, 0, 0, 1.0 / t;
    d2 << s, 0, 0, 1.0 / s;
    return apply_local_ops(from_acin(p), LocalOp::general(d1), LocalOp::general(d2),
                           LocalOp::identity(), false);
}

std::pair<PureState3, double> apply_slocc(const PureState3& state,
                                          const LocalOp& op1, const LocalOp& op2,
                                          const LocalOp& op3) {
    for (const LocalOp* op : {&op1, &op2, &op3})
        if (std::abs(op->m.determinant()) < 1e-14)
            throw SingularOpError("operator determinant below 1e-14");
    PureState3 out = apply_local_ops(state, op1, op2, op3, true);
    return {out, out.prenorm};
}

double KrausChannel::completeness_defect() const {
    int dim = qubits.size() == 1 ? 2 : 4;
    Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& tuple : kraus) {
        Eigen::MatrixXcd a;
        if (qubits.size() == 1) {
            a = tuple[0];
        } else {
            a = Eigen::MatrixXcd::Zero(4, 4);
            for (int r = 0; r < 4; ++r)
                for (int c = 0; c < 4; ++c)
                    a(r, c) = tuple[0](r >> 1, c >> 1) * tuple[1](r & 1, c & 1);
        }
        sum += a.adjoint() * a;
    }
    return (sum - Eigen::MatrixXcd::Identity(dim, dim)).cwiseAbs().maxCoeff();
}

KrausChannel random_two_kraus_channel(std::uint64_t seed, int nqubits) {
    if (nqubits != 1 && nqubits != 2)
        throw BadParamError("nqubits must be 1 or 2");
    Rng rng(seed);

    KrausChannel ch;
    int q1 = 1 + static_cast<int>(rng.integer() % 3);
    if (nqubits == 1) {
        ch.qubits = {q1};
    } else {
        int q2 = 1 + static_cast<int>(rng.integer() % 3);
        while (q2 == q1) q2 = 1 + static_cast<int>(rng.integer() % 3);
        ch.qubits = {std::min(q1, q2), std::max(q1, q2)};
    }

    // Contraction A1 with sigma_max = u in (0.05, 0.95), completion
    // A2 = V sqrt(1 - A1^dag A1).
    Eigen::Matrix2cd g;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) g(r, c) = rng.complex_normal();
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(g);
    double u = rng.uniform(0.05, 0.95);
    Eigen::Matrix2cd a1 = g * (u / svd.singularValues()(0));

    Eigen::Matrix2cd h = Eigen::Matrix2cd::Identity() - a1.adjoint() * a1;
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
    Eigen::Vector2d ev = es.eigenvalues().cwiseMax(0.0);
    Eigen::Matrix2cd sqrt_h = es.eigenvectors() *
                              ev.cwiseSqrt().asDiagonal() *
                              es.eigenvectors().adjoint();
    Eigen::Matrix2cd v = random_unitary(rng);
    Eigen::Matrix2cd a2 = v * sqrt_h;

    if (nqubits == 1) {
        ch.kraus = {{a1}, {a2}};
    } else {
        // Branch-conditioned unitaries on the second qubit keep each branch a
        // product operator while sum_k A_k^dag A_k stays the identity.
        Eigen::Matrix2cd w1 = random_unitary(rng);
        Eigen::Matrix2cd w2 = random_unitary(rng);
        ch.kraus = {{a1, w1}, {a2, w2}};
    }
    return ch;
}

MonotonicityTrial monotonicity_trial(const PureState3& state,
                                     const KrausChannel& channel) {
    MonotonicityTrial out;
    out.i5_before = kempe_i5(state, {1, 2});

    double avg = 0.0;
    for (const auto& tuple : channel.kraus) {
        std::array<LocalOp, 3> ops = {LocalOp::identity(), LocalOp::identity(),
                                      LocalOp::identity()};
        for (std::size_t q = 0; q < channel.qubits.size(); ++q)
            ops[channel.qubits[q] - 1] = LocalOp::general(tuple[q]);
        PureState3 raw = apply_local_ops(state, ops[0], ops[1], ops[2], false);
        double pk = raw.norm2();
        out.branch_probs.push_back(pk);
        if (pk < 1e-30) continue;
        PureState3 branch = raw;
        double n = std::sqrt(pk);
        for (auto& a : branch.amp) a /= n;
        branch.normalized = true;
        avg += pk * kempe_i5(branch, {1, 2});
    }
    out.i5_after_avg = avg;
    out.margin = avg - out.i5_before;
    return out;
}

std::string SloccClass::name() const {
    switch (label) {
        case SloccLabel::Product: return "PRODUCT";
        case SloccLabel::W: return "W";
        case SloccLabel::GHZ: return "GHZ";
        case SloccLabel::Biseparable:
            return "BISEPARABLE_" + std::to_string(pair.first) +
                   std::to_string(pair.second);
    }
    return "?";
}

SloccClass classify(const PureState3& state, double eps) {
    return classify_from_values(concurrence(state, {1, 2}), concurrence(state, {1, 3}),
                                concurrence(state, {2, 3}), three_tangle(state), eps);
}

SloccClass classify_from_values(double c12, double c13, double c23, double t3,
                                double eps) {
    if (!(eps > 0.0)) throw BadParamError("eps must be > 0");
    SloccClass cls;
    cls.char_vector = {c12 > eps ? 1 : 0, c13 > eps ? 1 : 0, c23 > eps ? 1 : 0};
    int nc = cls.char_vector[0] + cls.char_vector[1] + cls.char_vector[2];
    if (t3 > eps) {
        cls.label = SloccLabel::GHZ;
    } else if (nc >= 2) {
        // With tau3 = 0, two nonzero concurrences force the third (monogamy);
        // >= 2 is the W class.
        cls.label = SloccLabel::W;
    } else if (nc == 1) {
        cls.label = SloccLabel::Biseparable;
        if (cls.char_vector[0]) cls.pair = {1, 2};
        if (cls.char_vector[1]) cls.pair = {1, 3};
        if (cls.char_vector[2]) cls.pair = {2, 3};
    } else {
        cls.label = SloccLabel::Product;
    }
    return cls;
}

}  // namespace triq
