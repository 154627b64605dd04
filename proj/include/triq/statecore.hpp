#pragma once

// State construction, partial traces, local operator action, presets and
// Haar sampling. All functions are pure; RNG state is owned per call.

#include <cstdint>
#include <set>
#include <string>

#include "triq/types.hpp"

namespace triq {

// Normalizes the given amplitudes; records the original norm in `prenorm`.
// Throws AllZeroError if every amplitude is below 1e-15.
PureState3 make_state(const std::array<cplx, 8>& amplitudes);

// Partial trace onto the kept qubits (1-based, subset of {1,2,3}, size 1 or 2).
// For a kept pair {i,j} with i<j the row index of the result is 2*q_i + q_j.
DensityMatrix reduced_density(const PureState3& state, const std::set<int>& keep);

// amp'_{i'j'k'} = sum op1_{i'i} op2_{j'j} op3_{k'k} amp_{ijk}.
// With renormalize=true the result is normalized and `prenorm` holds the norm
// before normalization (SingularOpError if that norm is < 1e-15); with
// renormalize=false the raw amplitudes are returned and flagged unnormalized.
PureState3 apply_local_ops(const PureState3& state, const LocalOp& op1,
                           const LocalOp& op2, const LocalOp& op3,
                           bool renormalize);

// Eight i.i.d. standard complex Gaussians, normalized. Deterministic per seed.
PureState3 haar_random_state(std::uint64_t seed);

enum class Preset { GHZ, W, PRODUCT000, PSI_ALPHA };

// GHZ = (|000>+|111>)/sqrt2, W = (|100>+|010>+|001>)/sqrt3,
// PSI_ALPHA = (|000>+e^{ia}|100>+|101>+|110>+|111>)/sqrt5.
PureState3 preset_state(Preset which, double alpha = 0.0);

// Name lookup for the CLI ("ghz", "w", "product000", "psi_alpha");
// throws UnknownPresetError.
Preset parse_preset(const std::string& name);

}  // namespace triq
