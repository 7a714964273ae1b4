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

#ifndef DCNET_PIPELINE_SURFACE_HPP
#define DCNET_PIPELINE_SURFACE_HPP

#include <algorithm>
#include <cmath>

#include "dcnet/common.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/qec_models.hpp"

namespace dcnet {

/// Surface-code-only baseline network: no memory code, no teleportation.
struct SurfaceScenario {
    SurfaceConfig code;
    PhysicalParams params;
    double transport_time;  // one-way, s
    /// Physical qubits per memory device, for maintenance accounting.
    double device_qubits;
    NetworkParams network;

    void validate() const {
        params.validate();
        network.validate();
        detail::require_non_negative(transport_time, "T_3s");
        detail::require_finite(device_qubits, "device_qubits");
        detail::require(device_qubits >= code.patch_qubits(),
                        "device_qubits must be >= n_ms");
        detail::require(network.truck_capacity_qubits >= code.patch_qubits(),
                        "truck_capacity_qubits must hold at least one surface patch");
    }
};

struct SurfaceBreakdown {
    double cycle_lfr;         // R_ss
    double bell_pair_lfr;     // R_1s
    double transport_lfr;     // R_3s
    double network_lfr;       // R_nets
    double store_lfr;         // R_stores
    double bell_measure_lfr;  // R_BMs
    double total_lfr;         // R_tots
    double bell_pair_time;    // T_1s, s
    double transport_time;    // T_3s, s
    double total_time;        // T_tots, s
    double cycle_time;        // 6 t_g, s
    double fidelity;          // F_final_s
    bool feasible;
    Warnings warnings;
};

/// Surface cycles are gate-limited: six gate layers per round.
inline double surface_cycle_time(const PhysicalParams &params) { return 6 * params.gate_time; }

inline SurfaceBreakdown evaluate_sc(const SurfaceScenario &scenario) {
    scenario.validate();
    const double n = scenario.code.patch_qubits();
    const double d = scenario.code.distance();
    const CycleRate rss =
        surface_lfr_per_cycle(d, effective_gate_error(n, scenario.params));
    const double cycle = surface_cycle_time(scenario.params);

    SurfaceBreakdown b{};
    b.cycle_lfr = rss.rate;
    b.cycle_time = cycle;
    b.bell_pair_lfr = 2 * d * b.cycle_lfr;
    b.bell_pair_time = cycle * d;
    b.transport_time = scenario.transport_time;
    b.transport_lfr = (b.transport_time / cycle) * b.cycle_lfr;
    // Patches are measured in parallel on arrival: one extra round.
    b.network_lfr = b.bell_pair_lfr + b.transport_lfr + b.cycle_lfr;
    b.total_time = b.bell_pair_time + b.transport_time + cycle;
    b.store_lfr = 2 * (b.total_time / cycle) * b.cycle_lfr;
    b.bell_measure_lfr = 4 * d * b.cycle_lfr;
    b.total_lfr = b.bell_measure_lfr + b.store_lfr + 2 * b.network_lfr;
    b.fidelity = 1 - b.total_lfr;
    b.feasible = b.total_lfr >= 0 && b.total_lfr < 1;

    if (rss.above_threshold) {
        add_warning(b.warnings, {WarningKind::SurfaceAboveThreshold,
                                 "gate error at or above the surface threshold 1/70; "
                                 "per-cycle fit extrapolated"});
    }
    detail::warn_if_large(b.warnings, "R_ss", b.cycle_lfr);
    detail::warn_if_large(b.warnings, "R_1s", b.bell_pair_lfr);
    detail::warn_if_large(b.warnings, "R_3s", b.transport_lfr);
    detail::warn_if_large(b.warnings, "R_stores", b.store_lfr);
    detail::warn_if_large(b.warnings, "R_BMs", b.bell_measure_lfr);
    if (!b.feasible) {
        add_warning(b.warnings, {WarningKind::Infeasible, "R_tots >= 1; no usable correlation"});
    }
    return b;
}

/// R_tots for a bare patch/transport pair, using default network inputs.
inline double total_lfr_sc(const SurfaceConfig &code, const PhysicalParams &params,
                           double transport_time) {
    const double n = code.patch_qubits();
    SurfaceScenario s{code, params, transport_time, n, {}};
    s.network.truck_capacity_qubits = std::max(s.network.truck_capacity_qubits, n);
    return evaluate_sc(s).total_lfr;
}

}  // namespace dcnet

#endif  // DCNET_PIPELINE_SURFACE_HPP
