#include "triq/statecore.hpp"

#include <algorithm>
#include <cmath>

#include "triq/rng.hpp"

namespace triq {

PureState3 make_state(const std::array<cplx, 8>& amplitudes) {
    double n2 = 0.0;
    bool any = false;
    for (const auto& a : amplitudes) {
        n2 += std::norm(a);
        if (std::abs(a) >= 1e-15) any = true;
    }
    if (!any) throw AllZeroError("all amplitudes below 1e-15");
    PureState3 s;
    double n = std::sqrt(n2);
    for (int b = 0; b < 8; ++b) s.amp[b] = amplitudes[b] / n;
    s.prenorm = n;
    s.normalized = true;
    return s;
}

DensityMatrix reduced_density(const PureState3& state, const std::set<int>& keep) {
    if (keep.empty() || keep.size() > 2)
        throw BadQubitSetError("keep must contain 1 or 2 qubits");
    for (int q : keep)
        if (q < 1 || q > 3) throw BadQubitSetError("qubit index out of range");

    // Bit position of qubit q inside the amplitude index (q1 is the high bit).
    auto bit = [](int q) { return 3 - q; };

    std::array<int, 2> kq{};
    int nk = 0;
    for (int q : keep) kq[nk++] = q;  // std::set iterates ascending

    const int dim = 1 << nk;
    DensityMatrix rho;
    rho.dim = dim;
    rho.m = Eigen::MatrixXcd::Zero(dim, dim);

    for (int b = 0; b < 8; ++b) {
        for (int bp = 0; bp < 8; ++bp) {
            // Indices must agree on all traced-out qubits.
            bool match = true;
            for (int q = 1; q <= 3; ++q) {
                if (keep.count(q)) continue;
                if (((b >> bit(q)) & 1) != ((bp >> bit(q)) & 1)) match = false;
            }
            if (!match) continue;
            int r = 0, c = 0;
            for (int k = 0; k < nk; ++k) {
                r = (r << 1) | ((b >> bit(kq[k])) & 1);
                c = (c << 1) | ((bp >> bit(kq[k])) & 1);
            }
            rho.m(r, c) += state.amp[b] * std::conj(state.amp[bp]);
        }
    }
    return rho;
}

PureState3 apply_local_ops(const PureState3& state, const LocalOp& op1,
                           const LocalOp& op2, const LocalOp& op3,
                           bool renormalize) {
    PureState3 out;
    for (int i2 = 0; i2 < 2; ++i2)
        for (int j2 = 0; j2 < 2; ++j2)
            for (int k2 = 0; k2 < 2; ++k2) {
                cplx acc = 0.0;
                for (int i = 0; i < 2; ++i)
                    for (int j = 0; j < 2; ++j)
                        for (int k = 0; k < 2; ++k)
                            acc += op1.m(i2, i) * op2.m(j2, j) * op3.m(k2, k) *
                                   state.amp[4 * i + 2 * j + k];
                out.amp[4 * i2 + 2 * j2 + k2] = acc;
            }
    double n = std::sqrt(out.norm2());
    out.prenorm = n;
    if (renormalize) {
        if (n < 1e-15) throw SingularOpError("output norm below 1e-15");
        for (auto& a : out.amp) a /= n;
        out.normalized = true;
    } else {
        out.normalized = false;
    }
    return out;
}

PureState3 haar_random_state(std::uint64_t seed) {
    Rng rng(seed);
    std::array<cplx, 8> a{};
    for (int b = 0; b < 8; ++b) a[b] = rng.complex_normal();
    return make_state(a);
}

PureState3 preset_state(Preset which, double alpha) {
    std::array<cplx, 8> a{};
    switch (which) {
        case Preset::GHZ:
            a[0] = 1.0;
            a[7] = 1.0;
            break;
        case Preset::W:
            a[4] = 1.0;
            a[2] = 1.0;
            a[1] = 1.0;
            break;
        case Preset::PRODUCT000:
            a[0] = 1.0;
            break;
        case Preset::PSI_ALPHA:
            if (!std::isfinite(alpha))
                throw BadParamError("PSI_ALPHA needs a finite alpha");
            a[0] = 1.0;
            a[4] = std::polar(1.0, alpha);
            a[5] = 1.0;
            a[6] = 1.0;
            a[7] = 1.0;
            break;
    }
    return make_state(a);
}

Preset parse_preset(const std::string& name) {
    std::string n = name;
    std::transform(n.begin(), n.end(), n.begin(), ::tolower);
    if (n == "ghz") return Preset::GHZ;
    if (n == "w") return Preset::W;
    if (n == "product000") return Preset::PRODUCT000;
    if (n == "psi_alpha") return Preset::PSI_ALPHA;
    throw UnknownPresetError("'" + name + "'");
}

}  // namespace triq
