// Runtime kernel selection. The AVX2 set is used when the translation unit
// was built (x86-64 toolchain) and the CPU reports both avx2 and fma;
// TRIQ_KERNELS=scalar|avx2|auto overrides.

#include <atomic>
#include <cstdlib>

#include "triq/kernels.hpp"

namespace triq::kernels {

#ifdef TRIQ_BUILD_AVX2
const KernelSet* avx2_kernels_impl();  // defined in kernels_avx2.cpp
#endif

const KernelSet* avx2_kernels() {
#ifdef TRIQ_BUILD_AVX2
    static const bool supported =
        __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported ? avx2_kernels_impl() : nullptr;
#else
    return nullptr;
#endif
}

namespace {

std::atomic<const KernelSet*> g_forced{nullptr};

const KernelSet* resolve_default() {
    if (const char* env = std::getenv("TRIQ_KERNELS")) {
        std::string v(env);
        if (v == "scalar") return &scalar_kernels();
        if (v == "avx2" && avx2_kernels()) return avx2_kernels();
        // "auto" or unusable value falls through
    }
    if (const KernelSet* k = avx2_kernels()) return k;
    return &scalar_kernels();
}

}  // namespace

const KernelSet& active() {
    if (const KernelSet* f = g_forced.load(std::memory_order_acquire)) return *f;
    static const KernelSet* chosen = resolve_default();
    return *chosen;
}

void force(const std::string& name) {
    if (name == "scalar") {
        g_forced.store(&scalar_kernels(), std::memory_order_release);
    } else if (name == "avx2") {
        g_forced.store(avx2_kernels(), std::memory_order_release);
        if (!avx2_kernels()) throw BadParamError("avx2 kernels unavailable");
    } else if (name == "auto") {
        g_forced.store(nullptr, std::memory_order_release);
    } else {
        throw BadParamError("unknown kernel set '" + name + "'");
    }
}

}  // namespace triq::kernels
