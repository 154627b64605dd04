#pragma once

// Batched invariant kernels over state ensembles, stored structure-of-arrays.
//
// Two implementations share one signature set: a scalar reference and an AVX2
// variant (4 states per lane). The active set is picked once at startup from
// CPU capability; TRIQ_KERNELS=scalar|avx2 in the environment overrides the
// choice. The variants are equivalence-tested against each other, and the
// closed-form concurrence route used here is tested against the spin-flip
// eigenvalue route in invariants.cpp.

#include <cstddef>
#include <string>
#include <vector>

#include "triq/types.hpp"

namespace triq::kernels {

struct StateBatch {
    std::size_t n = 0;
    // re[b][s], im[b][s]: component b of state s.
    std::array<std::vector<double>, 8> re, im;

    void reserve(std::size_t cap) {
        for (auto& v : re) v.reserve(cap);
        for (auto& v : im) v.reserve(cap);
    }
    void push_back(const PureState3& s) {
        for (int b = 0; b < 8; ++b) {
            re[b].push_back(s.amp[b].real());
            im[b].push_back(s.amp[b].imag());
        }
        ++n;
    }
    PureState3 state(std::size_t i) const {
        PureState3 s;
        for (int b = 0; b < 8; ++b) s.amp[b] = cplx(re[b][i], im[b][i]);
        return s;
    }
};

struct TangleRows {
    std::vector<double> c12, c13, c23, tau3, tau11, tau12, tau13, i5, i6;
    void resize(std::size_t n) {
        for (auto* v : {&c12, &c13, &c23, &tau3, &tau11, &tau12, &tau13, &i5, &i6})
            v->resize(n);
    }
};

using TangleFn = void (*)(const StateBatch&, TangleRows&);
using KempeFn = void (*)(const StateBatch&, std::vector<double>&);

struct KernelSet {
    const char* name;
    TangleFn tangles;
    KempeFn kempe;
};

const KernelSet& scalar_kernels();

// Null when the binary was built without AVX2 support or the CPU lacks it.
const KernelSet* avx2_kernels();

// Runtime-selected set (env override applied on first use).
const KernelSet& active();

// Test hook: force a named set ("scalar" / "avx2" / "auto").
void force(const std::string& name);

}  // namespace triq::kernels
