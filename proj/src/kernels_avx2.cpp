// AVX2 kernel variant: the closed forms from kernels_scalar.cpp evaluated for
// four states per iteration on the structure-of-arrays batch. Compiled with
// -mavx2 -mfma; only reached through the runtime dispatch in
// kernels_dispatch.cpp when the CPU reports both features.

#include "triq/kernels.hpp"

#ifdef TRIQ_BUILD_AVX2

#include <immintrin.h>

#include <cstring>

namespace triq::kernels {

namespace {

struct VC {
    __m256d re, im;
};

inline VC vc(__m256d re, __m256d im) { return {re, im}; }

inline VC vadd(VC a, VC b) {
    return vc(_mm256_add_pd(a.re, b.re), _mm256_add_pd(a.im, b.im));
}
inline VC vsub(VC a, VC b) {
    return vc(_mm256_sub_pd(a.re, b.re), _mm256_sub_pd(a.im, b.im));
}
// a * b
inline VC vmul(VC a, VC b) {
    return vc(_mm256_fmsub_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
              _mm256_fmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re)));
}
// a * conj(b)
inline VC vmulc(VC a, VC b) {
    return vc(_mm256_fmadd_pd(a.re, b.re, _mm256_mul_pd(a.im, b.im)),
              _mm256_fnmadd_pd(a.re, b.im, _mm256_mul_pd(a.im, b.re)));
}
inline VC vconj(VC a) {
    return vc(a.re, _mm256_sub_pd(_mm256_setzero_pd(), a.im));
}
inline VC vscale(__m256d k, VC a) {
    return vc(_mm256_mul_pd(k, a.re), _mm256_mul_pd(k, a.im));
}
// |a|^2
inline __m256d vnorm(VC a) {
    return _mm256_fmadd_pd(a.re, a.re, _mm256_mul_pd(a.im, a.im));
}
inline __m256d vabs(VC a) { return _mm256_sqrt_pd(vnorm(a)); }

inline __m256d vmax0(__m256d x) { return _mm256_max_pd(x, _mm256_setzero_pd()); }

// C = mu1 - mu2 from the 2x2 complex-symmetric tau matrix.
inline __m256d concurrence_from_tau(VC t00, VC t01, VC t11) {
    __m256d two = _mm256_set1_pd(2.0);
    __m256d half = _mm256_set1_pd(0.5);
    __m256d f = _mm256_add_pd(_mm256_fmadd_pd(two, vnorm(t01), vnorm(t00)), vnorm(t11));
    __m256d d = vabs(vsub(vmul(t00, t11), vmul(t01, t01)));
    __m256d disc = vmax0(_mm256_fnmadd_pd(_mm256_mul_pd(two, d), _mm256_mul_pd(two, d),
                                          _mm256_mul_pd(f, f)));
    __m256d s = _mm256_sqrt_pd(disc);
    __m256d hi = _mm256_mul_pd(half, _mm256_add_pd(f, s));
    __m256d lo = vmax0(_mm256_mul_pd(half, _mm256_sub_pd(f, s)));
    return _mm256_sub_pd(_mm256_sqrt_pd(hi), _mm256_sqrt_pd(lo));
}

inline __m256d tr_rho3(__m256d p, __m256d r, VC q) {
    __m256d three = _mm256_set1_pd(3.0);
    __m256d p3 = _mm256_mul_pd(p, _mm256_mul_pd(p, p));
    __m256d r3 = _mm256_mul_pd(r, _mm256_mul_pd(r, r));
    return _mm256_fmadd_pd(_mm256_mul_pd(three, vnorm(q)), _mm256_add_pd(p, r),
                           _mm256_add_pd(p3, r3));
}

struct Lanes {
    __m256d c12, c13, c23, tau3, tau11, tau12, tau13, i5, i6;
};

Lanes tangles_lanes(const VC a[8]) {
    Lanes o;
    __m256d four = _mm256_set1_pd(4.0);
    __m256d two = _mm256_set1_pd(2.0);

    __m256d n2 = vnorm(a[0]);
    for (int b = 1; b < 8; ++b) n2 = _mm256_add_pd(n2, vnorm(a[b]));
    o.i6 = n2;

    __m256d p1 = _mm256_add_pd(_mm256_add_pd(vnorm(a[0]), vnorm(a[1])),
                               _mm256_add_pd(vnorm(a[2]), vnorm(a[3])));
    VC q1 = vadd(vadd(vmulc(a[0], a[4]), vmulc(a[1], a[5])),
                 vadd(vmulc(a[2], a[6]), vmulc(a[3], a[7])));
    __m256d r1 = _mm256_sub_pd(n2, p1);

    __m256d p2 = _mm256_add_pd(_mm256_add_pd(vnorm(a[0]), vnorm(a[1])),
                               _mm256_add_pd(vnorm(a[4]), vnorm(a[5])));
    VC q2 = vadd(vadd(vmulc(a[0], a[2]), vmulc(a[1], a[3])),
                 vadd(vmulc(a[4], a[6]), vmulc(a[5], a[7])));
    __m256d r2 = _mm256_sub_pd(n2, p2);

    __m256d p3 = _mm256_add_pd(_mm256_add_pd(vnorm(a[0]), vnorm(a[2])),
                               _mm256_add_pd(vnorm(a[4]), vnorm(a[6])));
    VC q3 = vadd(vadd(vmulc(a[0], a[1]), vmulc(a[2], a[3])),
                 vadd(vmulc(a[4], a[5]), vmulc(a[6], a[7])));
    __m256d r3 = _mm256_sub_pd(n2, p3);

    o.tau11 = _mm256_mul_pd(four, _mm256_fnmadd_pd(q1.re, q1.re,
                  _mm256_fnmadd_pd(q1.im, q1.im, _mm256_mul_pd(p1, r1))));
    o.tau12 = _mm256_mul_pd(four, _mm256_fnmadd_pd(q2.re, q2.re,
                  _mm256_fnmadd_pd(q2.im, q2.im, _mm256_mul_pd(p2, r2))));
    o.tau13 = _mm256_mul_pd(four, _mm256_fnmadd_pd(q3.re, q3.re,
                  _mm256_fnmadd_pd(q3.im, q3.im, _mm256_mul_pd(p3, r3))));

    o.c12 = concurrence_from_tau(
        vscale(two, vsub(vmul(a[2], a[4]), vmul(a[0], a[6]))),
        vsub(vadd(vmul(a[2], a[5]), vmul(a[4], a[3])),
             vadd(vmul(a[0], a[7]), vmul(a[6], a[1]))),
        vscale(two, vsub(vmul(a[3], a[5]), vmul(a[1], a[7]))));
    o.c13 = concurrence_from_tau(
        vscale(two, vsub(vmul(a[1], a[4]), vmul(a[0], a[5]))),
        vsub(vadd(vmul(a[1], a[6]), vmul(a[4], a[3])),
             vadd(vmul(a[0], a[7]), vmul(a[5], a[2]))),
        vscale(two, vsub(vmul(a[3], a[6]), vmul(a[2], a[7]))));
    o.c23 = concurrence_from_tau(
        vscale(two, vsub(vmul(a[1], a[2]), vmul(a[0], a[3]))),
        vsub(vadd(vmul(a[1], a[6]), vmul(a[2], a[5])),
             vadd(vmul(a[0], a[7]), vmul(a[3], a[4]))),
        vscale(two, vsub(vmul(a[5], a[6]), vmul(a[4], a[7]))));

    VC P07 = vmul(a[0], a[7]), P16 = vmul(a[1], a[6]);
    VC P25 = vmul(a[2], a[5]), P34 = vmul(a[3], a[4]);
    VC d1 = vadd(vadd(vmul(P07, P07), vmul(P16, P16)),
                 vadd(vmul(P25, P25), vmul(P34, P34)));
    VC d2 = vadd(vadd(vadd(vmul(P07, P34), vmul(P07, P25)),
                      vadd(vmul(P07, P16), vmul(P34, P25))),
                 vadd(vmul(P34, P16), vmul(P25, P16)));
    VC d3 = vadd(vmul(vmul(a[0], a[3]), vmul(a[5], a[6])),
                 vmul(vmul(a[1], a[2]), vmul(a[4], a[7])));
    VC g = vadd(vsub(d1, vscale(two, d2)), vscale(four, d3));
    o.tau3 = _mm256_mul_pd(four, vabs(g));

    // I5 contraction over the (q1 q2) pair index.
    VC rho12[4][4];
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            rho12[i][j] = vadd(vmulc(a[2 * i], a[2 * j]),
                               vmulc(a[2 * i + 1], a[2 * j + 1]));
    VC zero = vc(_mm256_setzero_pd(), _mm256_setzero_pd());
    VC rho1[2][2] = {{vc(p1, _mm256_setzero_pd()), q1},
                     {vconj(q1), vc(r1, _mm256_setzero_pd())}};
    VC rho2[2][2] = {{vc(p2, _mm256_setzero_pd()), q2},
                     {vconj(q2), vc(r2, _mm256_setzero_pd())}};
    VC t = zero;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            t = vadd(t, vmul(vmul(rho1[i >> 1][j >> 1], rho2[i & 1][j & 1]),
                             rho12[j][i]));
    __m256d three = _mm256_set1_pd(3.0);
    o.i5 = _mm256_fmsub_pd(three, t.re,
                           _mm256_add_pd(tr_rho3(p1, r1, q1), tr_rho3(p2, r2, q2)));
    return o;
}

inline void load_lanes(const StateBatch& in, std::size_t s, std::size_t cnt, VC a[8]) {
    if (cnt == 4) {
        for (int b = 0; b < 8; ++b)
            a[b] = vc(_mm256_loadu_pd(in.re[b].data() + s),
                      _mm256_loadu_pd(in.im[b].data() + s));
    } else {
        // Tail: pad missing lanes with zero states (all outputs stay finite).
        alignas(32) double tre[4], tim[4];
        for (int b = 0; b < 8; ++b) {
            for (int l = 0; l < 4; ++l) {
                tre[l] = l < static_cast<int>(cnt) ? in.re[b][s + l] : 0.0;
                tim[l] = l < static_cast<int>(cnt) ? in.im[b][s + l] : 0.0;
            }
            a[b] = vc(_mm256_load_pd(tre), _mm256_load_pd(tim));
        }
    }
}

inline void store_lanes(__m256d v, double* dst, std::size_t s, std::size_t cnt) {
    if (cnt == 4) {
        _mm256_storeu_pd(dst + s, v);
    } else {
        alignas(32) double tmp[4];
        _mm256_store_pd(tmp, v);
        for (std::size_t l = 0; l < cnt; ++l) dst[s + l] = tmp[l];
    }
}

void tangles_avx2(const StateBatch& in, TangleRows& out) {
    out.resize(in.n);
    for (std::size_t s = 0; s < in.n; s += 4) {
        std::size_t cnt = in.n - s < 4 ? in.n - s : 4;
        VC a[8];
        load_lanes(in, s, cnt, a);
        Lanes l = tangles_lanes(a);
        store_lanes(l.c12, out.c12.data(), s, cnt);
        store_lanes(l.c13, out.c13.data(), s, cnt);
        store_lanes(l.c23, out.c23.data(), s, cnt);
        store_lanes(l.tau3, out.tau3.data(), s, cnt);
        store_lanes(l.tau11, out.tau11.data(), s, cnt);
        store_lanes(l.tau12, out.tau12.data(), s, cnt);
        store_lanes(l.tau13, out.tau13.data(), s, cnt);
        store_lanes(l.i5, out.i5.data(), s, cnt);
        store_lanes(l.i6, out.i6.data(), s, cnt);
    }
}

void kempe_avx2(const StateBatch& in, std::vector<double>& out) {
    out.resize(in.n);
    for (std::size_t s = 0; s < in.n; s += 4) {
        std::size_t cnt = in.n - s < 4 ? in.n - s : 4;
        VC a[8];
        load_lanes(in, s, cnt, a);
        Lanes l = tangles_lanes(a);
        store_lanes(l.i5, out.data(), s, cnt);
    }
}

}  // namespace

const KernelSet* avx2_kernels_impl() {
    static const KernelSet set{"avx2", &tangles_avx2, &kempe_avx2};
    return &set;
}

}  // namespace triq::kernels

#endif  // TRIQ_BUILD_AVX2
