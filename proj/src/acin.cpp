#include "triq/acin.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "triq/statecore.hpp"

namespace triq {

namespace {

// Slice of the amplitude tensor along qubit 1: T_q[j,k] = amp[4q + 2j + k].
Eigen::Matrix2cd slice(const PureState3& s, int q) {
    Eigen::Matrix2cd t;
    t << s.amp[4 * q + 0], s.amp[4 * q + 1], s.amp[4 * q + 2], s.amp[4 * q + 3];
    return t;
}

// Projective roots (p:q) of det(p T0 + q T1) = 0, i.e. of
// c p^2 + b p q + a q^2 with a = det T1, c = det T0 and b the mixed term.
// Returns one or two normalized (|p|^2+|q|^2 = 1) roots; for the identically
// vanishing quadratic (fully degenerate slices) returns (1,0) so the original
// slice ordering is kept.
std::vector<std::pair<cplx, cplx>> slice_pencil_roots(const Eigen::Matrix2cd& t0,
                                                      const Eigen::Matrix2cd& t1) {
    cplx c = t0.determinant();
    cplx a = t1.determinant();
    cplx b = t0(0, 0) * t1(1, 1) + t1(0, 0) * t0(1, 1) - t0(0, 1) * t1(1, 0) -
             t1(0, 1) * t0(1, 0);

    double scale = std::max({std::abs(a), std::abs(b), std::abs(c)});
    std::vector<std::pair<cplx, cplx>> roots;
    auto push = [&roots](cplx p, cplx q) {
        double n = std::sqrt(std::norm(p) + std::norm(q));
        roots.emplace_back(p / n, q / n);
    };

    if (scale < 1e-28) {
        // Every slice combination is singular (e.g. product states).
        push(1.0, 0.0);
        return roots;
    }
    a /= scale;
    b /= scale;
    c /= scale;

    const double tiny = 1e-14;
    if (std::abs(a) < tiny && std::abs(c) < tiny) {
        // b p q = 0: roots at 0 and infinity.
        push(1.0, 0.0);
        push(0.0, 1.0);
        return roots;
    }
    if (std::abs(a) < tiny) {
        // Linear in the ratio q/p plus a root at infinity.
        push(-b / c, 1.0);  // c p + b q = 0 with q = 1
        push(0.0, 1.0);
        return roots;
    }
    // Generic case: with z = q/p the pencil determinant becomes
    // a z^2 + b z + c = 0.
    cplx disc = std::sqrt(b * b - 4.0 * a * c);
    // Sign choice that avoids cancellation.
    cplx bp = (std::real(std::conj(b) * disc) >= 0.0) ? b + disc : b - disc;
    if (std::abs(bp) < tiny) {
        // Double root at z = 0 paired with -b/a; here b ~ 0 and c ~ 0.
        push(1.0, -b / (2.0 * a));
        return roots;
    }
    cplx z1 = -2.0 * c / bp;
    cplx z2 = -bp / (2.0 * a);
    push(1.0, z1);
    if (std::abs(z2 - z1) > 1e-12 * std::max(1.0, std::abs(z1))) push(1.0, z2);
    return roots;
}

struct Candidate {
    AcinParams params;
    Eigen::Matrix2cd u1, u2, u3;
    double residual = 0.0;
    bool phi_in_range = false;
};

// Wrap into (-pi, pi].
double wrap_phase(double x) {
    x = std::fmod(x, 2.0 * kPi);
    if (x <= -kPi) x += 2.0 * kPi;
    if (x > kPi) x -= 2.0 * kPi;
    return x;
}

Candidate reduce_with_root(const PureState3& state, cplx p, cplx q) {
    // Qubit-1 rotation sending the top slice to p T0 + q T1.
    Eigen::Matrix2cd w1;
    w1 << p, q, -std::conj(q), std::conj(p);

    PureState3 rot = apply_local_ops(state, LocalOp::general(w1),
                                     LocalOp::identity(), LocalOp::identity(),
                                     false);

    Eigen::Matrix2cd t0 = slice(rot, 0);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(t0, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix2cd a2 = svd.matrixU().adjoint();
    Eigen::Matrix2cd a3 = svd.matrixV().transpose();

    PureState3 diag = apply_local_ops(rot, LocalOp::identity(),
                                      LocalOp::general(a2), LocalOp::general(a3),
                                      false);

    // Phase gauge: a global phase and one diagonal phase per qubit zero the
    // phases of the |000>, |101>, |110>, |111> amplitudes; the leftover phase
    // on |100> is phi. Near-zero amplitudes leave their knob free, and any
    // freedom is spent making phi = 0.
    const double sig = 1e-10;
    auto arg_of = [&](int b) { return std::arg(diag.amp[b]); };
    bool f0 = std::abs(diag.amp[0]) > sig;
    bool f4 = std::abs(diag.amp[4]) > sig;
    bool f5 = std::abs(diag.amp[5]) > sig;
    bool f6 = std::abs(diag.amp[6]) > sig;
    bool f7 = std::abs(diag.amp[7]) > sig;

    double gamma = f0 ? -arg_of(0) : 0.0;
    double b1 = 0.0, b2 = 0.0, b3 = 0.0;
    if (f5 && f6 && f7) {
        b3 = arg_of(6) - arg_of(7);
        b2 = arg_of(5) - arg_of(7);
        b1 = -arg_of(7) - gamma - b2 - b3;
    } else if (f6 && f7) {
        if (f4) b1 = -arg_of(4) - gamma;
        b2 = -arg_of(6) - gamma - b1;
        b3 = arg_of(6) - arg_of(7);
    } else if (f5 && f7) {
        if (f4) b1 = -arg_of(4) - gamma;
        b3 = -arg_of(5) - gamma - b1;
        b2 = -arg_of(7) - gamma - b1 - b3;
    } else if (f5 && f6) {
        if (f4) b1 = -arg_of(4) - gamma;
        b3 = -arg_of(5) - gamma - b1;
        b2 = -arg_of(6) - gamma - b1;
    } else if (f7) {
        if (f4) b1 = -arg_of(4) - gamma;
        b2 = -arg_of(7) - gamma - b1;
    } else if (f6) {
        if (f4) b1 = -arg_of(4) - gamma;
        b2 = -arg_of(6) - gamma - b1;
    } else if (f5) {
        if (f4) b1 = -arg_of(4) - gamma;
        b3 = -arg_of(5) - gamma - b1;
    } else {
        if (f4) b1 = -arg_of(4) - gamma;
    }

    Eigen::Matrix2cd ph1, ph2, ph3;
    ph1 << std::polar(1.0, gamma), 0.0, 0.0, std::polar(1.0, gamma + b1);
    ph2 << 1.0, 0.0, 0.0, std::polar(1.0, b2);
    ph3 << 1.0, 0.0, 0.0, std::polar(1.0, b3);

    PureState3 canon = apply_local_ops(diag, LocalOp::general(ph1),
                                       LocalOp::general(ph2), LocalOp::general(ph3),
                                       false);

    Candidate cand;
    cand.params.l1 = std::abs(canon.amp[0]);
    cand.params.l0 = std::abs(canon.amp[4]);
    cand.params.l3 = std::abs(canon.amp[5]);
    cand.params.l2 = std::abs(canon.amp[6]);
    cand.params.l4 = std::abs(canon.amp[7]);
    double phi = f4 ? wrap_phase(std::arg(canon.amp[4])) : 0.0;
    // Snap boundary round-off.
    if (phi < 0.0 && phi > -1e-9) phi = 0.0;
    if (phi > kPi) phi = kPi;  // wrap_phase already bounds by pi
    cand.params.phi = phi;
    cand.phi_in_range = phi >= 0.0 && phi <= kPi;

    cand.u1 = ph1 * w1;
    cand.u2 = ph2 * a2;
    cand.u3 = ph3 * a3;

    PureState3 rebuilt = from_acin(cand.params);
    double res = 0.0;
    for (int b = 0; b < 8; ++b)
        res = std::max(res, std::abs(rebuilt.amp[b] - canon.amp[b]));
    cand.residual = res;
    return cand;
}

}  // namespace

PureState3 from_acin(const AcinParams& p) {
    PureState3 s;
    s.amp[0] = p.l1;
    s.amp[4] = std::polar(p.l0, p.phi);
    s.amp[6] = p.l2;
    s.amp[5] = p.l3;
    s.amp[7] = p.l4;
    s.prenorm = 1.0;
    s.normalized = std::abs(p.norm2() - 1.0) < 1e-10;
    return s;
}

AcinReduction to_acin(const PureState3& state) {
    if (std::abs(state.norm2() - 1.0) > 1e-9)
        throw BadParamError("to_acin requires a normalized state");

    auto roots = slice_pencil_roots(slice(state, 0), slice(state, 1));
    std::vector<Candidate> cands;
    for (auto& [p, q] : roots) cands.push_back(reduce_with_root(state, p, q));

    auto better = [](const Candidate& a, const Candidate& b) {
        if (a.phi_in_range != b.phi_in_range) return a.phi_in_range;
        if (std::abs(a.params.l1 - b.params.l1) > 1e-12)
            return a.params.l1 > b.params.l1;
        return a.params.l4 > b.params.l4;
    };
    std::sort(cands.begin(), cands.end(), better);
    const Candidate& best = cands.front();

    AcinReduction red;
    red.params = best.params;
    red.u1 = LocalOp::unitary(best.u1, 1e-9);
    red.u2 = LocalOp::unitary(best.u2, 1e-9);
    red.u3 = LocalOp::unitary(best.u3, 1e-9);
    red.residual = best.residual;
    return red;
}

double tau3_closed(const AcinParams& p) {
    return 4.0 * p.l1 * p.l1 * p.l4 * p.l4;
}

}  // namespace triq
