// Copyright 2026 The dcnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DCNET_QEC_MODELS_HPP
#define DCNET_QEC_MODELS_HPP

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dcnet/common.hpp"

namespace dcnet {

/// How the two-qubit gate error feeds the per-cycle failure fits.
enum class IdlingMode {
    /// `gate_error` is used as-is for every patch.
    Fixed,
    /// `gate_error` is a bare value inflated per patch by its own rearrangement time.
    PerPatch,
};

/// Neutral-atom hardware constants. Stored in SI units (seconds, metres).
struct PhysicalParams {
    double transfer_time = 50e-6;  // trap-to-trap transfer, s
    double acceleration = 2.0e4;   // max atom acceleration, m/s^2 (0.02 um/us^2)
    double spacing = 5e-6;         // atom pitch in the grid, m
    double gate_time = 2e-6;       // one-qubit gate, s
    double coherence_time = 10.0;  // s
    double gate_error = 1e-3;      // two-qubit gate error
    IdlingMode idling = IdlingMode::Fixed;

    /// The built-in reference parameter set.
    static PhysicalParams reference_defaults() { return {}; }

    /// Bare near-term gate error of 8e-4 with per-patch idling inflation.
    static PhysicalParams per_patch_defaults() {
        PhysicalParams p;
        p.gate_error = 8e-4;
        p.idling = IdlingMode::PerPatch;
        return p;
    }

    void validate() const {
        detail::require_positive(transfer_time, "transfer_time");
        detail::require_positive(acceleration, "acceleration");
        detail::require_positive(spacing, "spacing");
        detail::require_positive(gate_time, "gate_time");
        detail::require_positive(coherence_time, "coherence_time");
        detail::require_probability_open(gate_error, "gate_error");
    }
};

/// Hypergraph-product memory patch of rate 1/25 and distance sqrt(n)/5.
///
/// All derived quantities are continuous; use snap_to_realizable() for a
/// patch size with an integral distance.
class HgpConfig {
   public:
    explicit HgpConfig(double memory_qubits) : memory_qubits_(memory_qubits) {
        detail::require_finite(memory_qubits, "n_m");
        // The teleportation ancilla has n_m/25 qubits and must hold at least one.
        detail::require(memory_qubits >= 25, "n_m must be >= 25");
    }

    double memory_qubits() const { return memory_qubits_; }
    double logical_qubits() const { return memory_qubits_ / 25; }
    double distance() const { return std::sqrt(memory_qubits_) / 5; }
    double ancilla_qubits() const { return memory_qubits_ / 25; }
    /// Distance of the surface patch used for loading and unloading.
    double surface_distance() const { return distance(); }

   private:
    double memory_qubits_;
};

class SurfaceConfig {
   public:
    explicit SurfaceConfig(double patch_qubits) : patch_qubits_(patch_qubits) {
        detail::require_finite(patch_qubits, "n_ms");
        detail::require(patch_qubits >= 1, "n_ms must be >= 1");
    }

    double patch_qubits() const { return patch_qubits_; }
    double distance() const { return std::sqrt(patch_qubits_); }

   private:
    double patch_qubits_;
};

/// Nearest patch size of the form 25*d^2 with integer d >= 1.
inline double snap_to_realizable(double memory_qubits) {
    detail::require_positive(memory_qubits, "n_m");
    const double d = std::max(1.0, std::round(std::sqrt(memory_qubits) / 5));
    return 25 * d * d;
}

inline constexpr double kHgpThresholdGateError = 0.006;
inline constexpr double kSurfaceThresholdGateError = 1.0 / 70.0;

struct CycleRate {
    double rate;
    /// The fit is being extrapolated past its threshold; rates grow with size.
    bool above_threshold;
};

/// Time for one atom rearrangement over a patch of `n` qubits, in seconds.
///
/// The atom line length is sqrt(n) (not rounded). The log is natural.
inline double rearrangement_time(double n, const PhysicalParams &params) {
    detail::require_finite(n, "n");
    detail::require(n >= 1, "n must be >= 1");
    const double line = std::sqrt(n);
    const double transfer = 2 * params.transfer_time * std::log(line);
    const double travel = (3 + 2 * std::numbers::sqrt2) *
                          std::sqrt(6 * line * params.spacing / params.acceleration);
    return transfer + travel;
}

/// One syndrome-extraction cycle: eight rearrangements.
inline double cycle_time(double n, const PhysicalParams &params) {
    return 8 * rearrangement_time(n, params);
}

inline CycleRate hgp_lfr_per_cycle(double n, double gate_error) {
    detail::require_finite(n, "n");
    detail::require(n >= 1, "n must be >= 1");
    detail::require_probability_open(gate_error, "p_g");
    const double exponent = 0.47 * std::pow(n, 0.27);
    return {0.07 * std::pow(gate_error / kHgpThresholdGateError, exponent),
            gate_error >= kHgpThresholdGateError};
}

inline CycleRate surface_lfr_per_cycle(double distance, double gate_error) {
    detail::require_finite(distance, "d_sc");
    detail::require(distance >= 1, "d_sc must be >= 1");
    detail::require_probability_open(gate_error, "p_g");
    return {0.3 * std::pow(70 * gate_error, (distance + 1) / 2),
            70 * gate_error >= 1};
}

/// Multiplier applied to the gate error to account for idling during rearrangement.
inline double idling_factor(double n, const PhysicalParams &params) {
    return 1 + 3 * rearrangement_time(n, params) / (0.005 * params.coherence_time);
}

inline double idling_adjusted_pg(double base_gate_error, double n, const PhysicalParams &params) {
    detail::require_probability_open(base_gate_error, "p_g");
    return base_gate_error * idling_factor(n, params);
}

/// Gate error seen by a patch of `n` physical qubits under `params.idling`.
inline double effective_gate_error(double n, const PhysicalParams &params) {
    if (params.idling == IdlingMode::Fixed) {
        return params.gate_error;
    }
    return idling_adjusted_pg(params.gate_error, n, params);
}

}  // namespace dcnet

#endif  // DCNET_QEC_MODELS_HPP
