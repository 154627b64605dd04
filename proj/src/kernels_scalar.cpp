// Scalar reference kernels. Straight-line closed forms per state:
//  - local tangles from 2x2 reduced-density determinants,
//  - concurrences from the singular values of the 2x2 spin-flip tau matrix
//    tau = M^T (sy (x) sy) M (M = 4x2 amplitude matrix of the kept pair),
//  - threetangle from the 2x2x2 hyperdeterminant,
//  - Kempe I5 from the reduced-density trace formula.
// The AVX2 variant in kernels_avx2.cpp computes the same expressions four
// states at a time and is equivalence-tested against this file.

#include <cmath>
#include <complex>

#include "triq/kernels.hpp"

namespace triq::kernels {

namespace {

// C = mu1 - mu2 from the tau matrix [[t00,t01],[t01,t11]] (complex symmetric).
inline double concurrence_from_tau(cplx t00, cplx t01, cplx t11) {
    double f = std::norm(t00) + 2.0 * std::norm(t01) + std::norm(t11);
    double d = std::abs(t00 * t11 - t01 * t01);
    double disc = f * f - 4.0 * d * d;
    if (disc < 0.0) disc = 0.0;
    double s = std::sqrt(disc);
    double hi = 0.5 * (f + s);
    double lo = 0.5 * (f - s);
    if (lo < 0.0) lo = 0.0;
    return std::sqrt(hi) - std::sqrt(lo);
}

inline double tr_rho3(double p, double r, cplx q) {
    return p * p * p + r * r * r + 3.0 * std::norm(q) * (p + r);
}

struct ScalarRow {
    double c12, c13, c23, tau3, tau11, tau12, tau13, i5, i6;
};

ScalarRow tangles_one(const cplx* a) {
    ScalarRow o{};

    double n2 = 0.0;
    for (int b = 0; b < 8; ++b) n2 += std::norm(a[b]);
    o.i6 = n2;

    // Single-qubit reduced matrices: rho = [[p, q], [conj q, r]].
    double p1 = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[2]) + std::norm(a[3]);
    cplx q1 = a[0] * std::conj(a[4]) + a[1] * std::conj(a[5]) +
              a[2] * std::conj(a[6]) + a[3] * std::conj(a[7]);
    double r1 = n2 - p1;

    double p2 = std::norm(a[0]) + std::norm(a[1]) + std::norm(a[4]) + std::norm(a[5]);
    cplx q2 = a[0] * std::conj(a[2]) + a[1] * std::conj(a[3]) +
              a[4] * std::conj(a[6]) + a[5] * std::conj(a[7]);
    double r2 = n2 - p2;

    double p3 = std::norm(a[0]) + std::norm(a[2]) + std::norm(a[4]) + std::norm(a[6]);
    cplx q3 = a[0] * std::conj(a[1]) + a[2] * std::conj(a[3]) +
              a[4] * std::conj(a[5]) + a[6] * std::conj(a[7]);
    double r3 = n2 - p3;

    o.tau11 = 4.0 * (p1 * r1 - std::norm(q1));
    o.tau12 = 4.0 * (p2 * r2 - std::norm(q2));
    o.tau13 = 4.0 * (p3 * r3 - std::norm(q3));

    // Concurrences.
    o.c12 = concurrence_from_tau(2.0 * (a[2] * a[4] - a[0] * a[6]),
                                 a[2] * a[5] + a[4] * a[3] - a[0] * a[7] - a[6] * a[1],
                                 2.0 * (a[3] * a[5] - a[1] * a[7]));
    o.c13 = concurrence_from_tau(2.0 * (a[1] * a[4] - a[0] * a[5]),
                                 a[1] * a[6] + a[4] * a[3] - a[0] * a[7] - a[5] * a[2],
                                 2.0 * (a[3] * a[6] - a[2] * a[7]));
    o.c23 = concurrence_from_tau(2.0 * (a[1] * a[2] - a[0] * a[3]),
                                 a[1] * a[6] + a[2] * a[5] - a[0] * a[7] - a[3] * a[4],
                                 2.0 * (a[5] * a[6] - a[4] * a[7]));

    // Hyperdeterminant.
    cplx P07 = a[0] * a[7], P16 = a[1] * a[6], P25 = a[2] * a[5], P34 = a[3] * a[4];
    cplx d1 = P07 * P07 + P16 * P16 + P25 * P25 + P34 * P34;
    cplx d2 = P07 * P34 + P07 * P25 + P07 * P16 + P34 * P25 + P34 * P16 + P25 * P16;
    cplx d3 = (a[0] * a[3]) * (a[5] * a[6]) + (a[1] * a[2]) * (a[4] * a[7]);
    o.tau3 = 4.0 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);

    // Kempe I5 = 3 tr((rho1 x rho2) rho12) - tr rho1^3 - tr rho2^3.
    // rho12[i][j] over the (q1 q2) pair index i = 2 q1 + q2.
    cplx rho12[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho12[i][j] = a[2 * i] * std::conj(a[2 * j]) +
                          a[2 * i + 1] * std::conj(a[2 * j + 1]);
    cplx rho1[2][2] = {{p1, q1}, {std::conj(q1), r1}};
    cplx rho2[2][2] = {{p2, q2}, {std::conj(q2), r2}};
    cplx t = 0.0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t += rho1[i >> 1][j >> 1] * rho2[i & 1][j & 1] * rho12[j][i];
    o.i5 = 3.0 * t.real() - tr_rho3(p1, r1, q1) - tr_rho3(p2, r2, q2);

    return o;
}

void tangles_scalar(const StateBatch& in, TangleRows& out) {
    out.resize(in.n);
    cplx a[8];
    for (std::size_t s = 0; s < in.n; ++s) {
        for (int b = 0; b < 8; ++b) a[b] = cplx(in.re[b][s], in.im[b][s]);
        ScalarRow r = tangles_one(a);
        out.c12[s] = r.c12;
        out.c13[s] = r.c13;
        out.c23[s] = r.c23;
        out.tau3[s] = r.tau3;
        out.tau11[s] = r.tau11;
        out.tau12[s] = r.tau12;
        out.tau13[s] = r.tau13;
        out.i5[s] = r.i5;
        out.i6[s] = r.i6;
    }
}

void kempe_scalar(const StateBatch& in, std::vector<double>& out) {
    out.resize(in.n);
    cplx a[8];
    for (std::size_t s = 0; s < in.n; ++s) {
        for (int b = 0; b < 8; ++b) a[b] = cplx(in.re[b][s], in.im[b][s]);
        out[s] = tangles_one(a).i5;
    }
}

}  // namespace

const KernelSet& scalar_kernels() {
    static const KernelSet set{"scalar", &tangles_scalar, &kempe_scalar};
    return set;
}

}  // namespace triq::kernels
