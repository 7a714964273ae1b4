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

#ifndef DCNET_PIPELINE_QLDPC_HPP
#define DCNET_PIPELINE_QLDPC_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "dcnet/common.hpp"
#include "dcnet/qec_models.hpp"

namespace dcnet {

/// Fleet and economics inputs shared by both code families.
struct NetworkParams {
    int destinations = 5;                  // qATM sites
    double truck_capacity_qubits = 1e6;    // physical qubits per vehicle
    double bandwidth = 2300;               // target E-bit rate per destination, bits/s
    double rent_per_hour = 150;            // USD per vehicle-hour
    double maintenance_per_year = 2e6;     // USD per memory device per year

    void validate() const {
        detail::require(destinations >= 1, "destinations must be >= 1");
        detail::require_positive(truck_capacity_qubits, "truck_capacity_qubits");
        detail::require_positive(bandwidth, "bandwidth");
        detail::require_non_negative(rent_per_hour, "rent_per_hour");
        detail::require_non_negative(maintenance_per_year, "maintenance_per_year");
    }
};

/// One qLDPC delayed-choice network instance.
struct Scenario {
    HgpConfig code;
    PhysicalParams params;
    double transport_time;  // one-way, s
    NetworkParams network;

    static Scenario reference_defaults() {
        return {HgpConfig(60000), PhysicalParams::reference_defaults(), 5400, {}};
    }

    void validate() const {
        params.validate();
        network.validate();
        detail::require_non_negative(transport_time, "T_3");
        detail::require(network.truck_capacity_qubits >= code.memory_qubits(),
                        "truck_capacity_qubits must hold at least one memory patch");
    }
};

/// Per-cycle failure rates and cycle times of the three patch kinds in play.
struct PatchRates {
    double memory;          // R_L(n_m)
    double ancilla;         // R_L(n_a)
    double surface;         // R_S at d_sc = sqrt(n_m)/5
    double memory_cycle;    // t_cyc(n_m), s
    double ancilla_cycle;   // t_cyc(n_a), s
    Warnings warnings;
};

inline PatchRates patch_rates(const HgpConfig &code, const PhysicalParams &params) {
    const double n_m = code.memory_qubits();
    const double n_a = code.ancilla_qubits();
    const double d = code.surface_distance();
    // Surface patch of distance d holds d^2 = n_m/25 physical qubits.
    const CycleRate memory = hgp_lfr_per_cycle(n_m, effective_gate_error(n_m, params));
    const CycleRate ancilla = hgp_lfr_per_cycle(n_a, effective_gate_error(n_a, params));
    const CycleRate surface = surface_lfr_per_cycle(d, effective_gate_error(d * d, params));

    PatchRates out{memory.rate, ancilla.rate, surface.rate,
                   cycle_time(n_m, params), cycle_time(n_a, params), {}};
    if (memory.above_threshold || ancilla.above_threshold) {
        add_warning(out.warnings, {WarningKind::HgpAboveThreshold,
                                   "gate error at or above the HGP threshold 0.006; "
                                   "per-cycle fit extrapolated"});
    }
    if (surface.above_threshold) {
        add_warning(out.warnings, {WarningKind::SurfaceAboveThreshold,
                                   "gate error at or above the surface threshold 1/70; "
                                   "per-cycle fit extrapolated"});
    }
    return out;
}

/// Creation, loading, transport and delivery stages (R_0..R_4, T_2, T_4).
struct DistributionStages {
    double init_lfr;        // R_0: two memory patches initialized
    double bell_pair_lfr;   // R_1: surface Bell pair creation
    double load_lfr;        // R_2: teleport both halves into memories
    double transport_lfr;   // R_3
    double deliver_lfr;     // R_4: unload and measure at the qATM
    double load_time;       // T_2, s
    double deliver_time;    // T_4, s
    double transport_cycles;  // M_t
    Warnings warnings;
};

/// Storage at the hub and the final swap (R_store, R_unload, R_BM).
struct SwapStages {
    double store_lfr;
    double unload_lfr;
    double bell_measure_lfr;
    double storage_cycles;  // M_tot_c
};

struct StageBreakdown {
    double init_lfr;          // R_0
    double bell_pair_lfr;     // R_1
    double load_lfr;          // R_2
    double transport_lfr;     // R_3
    double deliver_lfr;       // R_4
    double network_lfr;       // R_net
    double store_lfr;         // R_store
    double unload_lfr;        // R_unload
    double bell_measure_lfr;  // R_BM
    double total_lfr;         // R_tot
    double load_time;         // T_2, s
    double transport_time;    // T_3, s
    double deliver_time;      // T_4, s
    double total_time;        // T_tot, s
    double transport_cycles;  // M_t
    double storage_cycles;    // M_tot_c
    double fidelity;          // F_final
    bool feasible;
    Warnings warnings;
};

namespace detail {

// One teleportation between a surface patch and a memory through the ancilla:
// ancilla init, surface/ancilla surgery, ancilla/memory surgery. The memory
// term is repeated n_m/25 times for the first-loaded logical qubit.
inline double teleport_lfr(const HgpConfig &code, const PatchRates &r) {
    const double d = code.distance();
    return std::sqrt(code.ancilla_qubits()) * r.ancilla + d * (r.surface + r.ancilla) +
           d * (r.ancilla + code.logical_qubits() * r.memory);
}

inline double teleport_time(const HgpConfig &code, const PatchRates &r) {
    const double d = code.distance();
    return std::sqrt(code.ancilla_qubits()) * r.ancilla_cycle + d * r.ancilla_cycle +
           d * r.memory_cycle;
}

inline void warn_if_large(Warnings &out, const char *name, double rate) {
    if (rate > 0.1) {
        char buf[160];
        std::snprintf(buf, sizeof buf,
                      "%s = %.6g exceeds 0.1; additive error propagation is inaccurate",
                      name, rate);
        add_warning(out, {WarningKind::StageRateLarge, buf});
    }
}

}  // namespace detail

inline DistributionStages stage_lfrs(const Scenario &scenario, const PatchRates &r) {
    const HgpConfig &code = scenario.code;
    const double d = code.distance();
    const double k = code.logical_qubits();
    const PhysicalParams &p = scenario.params;

    DistributionStages s{};
    s.init_lfr = 2 * d * r.memory;
    s.bell_pair_lfr = 2 * d * r.surface;
    s.load_lfr = 2 * detail::teleport_lfr(code, r);
    s.load_time = k * detail::teleport_time(code, r);
    s.transport_cycles = scenario.transport_time / r.memory_cycle;
    s.transport_lfr = s.transport_cycles * r.memory;
    // Surface init before the teleport and one measurement round after it.
    s.deliver_lfr = d * r.surface + detail::teleport_lfr(code, r) + r.surface;
    s.deliver_time =
        k * (6 * d * p.gate_time + detail::teleport_time(code, r) + 6 * p.gate_time);
    s.warnings = r.warnings;
    return s;
}

inline DistributionStages stage_lfrs(const Scenario &scenario) {
    scenario.validate();
    return stage_lfrs(scenario, patch_rates(scenario.code, scenario.params));
}

/// `total_time` is both T_tot and the time at which the swap is requested.
inline SwapStages storage_and_swap_lfrs(const Scenario &scenario, const PatchRates &r,
                                        double total_time) {
    detail::require_non_negative(total_time, "T_tot");
    const HgpConfig &code = scenario.code;
    const double d = code.distance();

    SwapStages s{};
    s.storage_cycles = total_time / r.memory_cycle;
    s.store_lfr = 2 * s.storage_cycles * r.memory;
    s.unload_lfr = 2 * (d * r.surface + std::sqrt(code.ancilla_qubits()) * r.ancilla +
                        d * (r.ancilla + code.logical_qubits() * r.memory) +
                        d * (r.ancilla + r.surface));
    s.bell_measure_lfr = 4 * d * r.surface;
    return s;
}

inline SwapStages storage_and_swap_lfrs(const Scenario &scenario, double total_time) {
    scenario.validate();
    return storage_and_swap_lfrs(scenario, patch_rates(scenario.code, scenario.params),
                                 total_time);
}

inline StageBreakdown evaluate(const Scenario &scenario) {
    scenario.validate();
    const PatchRates rates = patch_rates(scenario.code, scenario.params);
    const DistributionStages dist = stage_lfrs(scenario, rates);

    StageBreakdown b{};
    b.init_lfr = dist.init_lfr;
    b.bell_pair_lfr = dist.bell_pair_lfr;
    b.load_lfr = dist.load_lfr;
    b.transport_lfr = dist.transport_lfr;
    b.deliver_lfr = dist.deliver_lfr;
    b.load_time = dist.load_time;
    b.transport_time = scenario.transport_time;
    b.deliver_time = dist.deliver_time;
    b.transport_cycles = dist.transport_cycles;
    b.network_lfr = b.init_lfr + b.bell_pair_lfr + b.load_lfr + b.transport_lfr + b.deliver_lfr;
    b.total_time = b.load_time + b.transport_time + b.deliver_time;

    const SwapStages swap = storage_and_swap_lfrs(scenario, rates, b.total_time);
    b.store_lfr = swap.store_lfr;
    b.unload_lfr = swap.unload_lfr;
    b.bell_measure_lfr = swap.bell_measure_lfr;
    b.storage_cycles = swap.storage_cycles;

    b.total_lfr = b.bell_measure_lfr + b.unload_lfr + b.store_lfr + 2 * b.network_lfr;
    b.fidelity = 1 - b.total_lfr;
    b.feasible = b.total_lfr >= 0 && b.total_lfr < 1;

    b.warnings = dist.warnings;
    detail::warn_if_large(b.warnings, "R_0", b.init_lfr);
    detail::warn_if_large(b.warnings, "R_1", b.bell_pair_lfr);
    detail::warn_if_large(b.warnings, "R_2", b.load_lfr);
    detail::warn_if_large(b.warnings, "R_3", b.transport_lfr);
    detail::warn_if_large(b.warnings, "R_4", b.deliver_lfr);
    detail::warn_if_large(b.warnings, "R_store", b.store_lfr);
    detail::warn_if_large(b.warnings, "R_unload", b.unload_lfr);
    detail::warn_if_large(b.warnings, "R_BM", b.bell_measure_lfr);
    if (!b.feasible) {
        add_warning(b.warnings, {WarningKind::Infeasible, "R_tot >= 1; no usable correlation"});
    }
    return b;
}

/// R_tot for a bare code/transport pair, using default network inputs.
inline double total_lfr(const HgpConfig &code, const PhysicalParams &params,
                        double transport_time) {
    Scenario s{code, params, transport_time, {}};
    s.network.truck_capacity_qubits = std::max(s.network.truck_capacity_qubits,
                                               code.memory_qubits());
    return evaluate(s).total_lfr;
}

}  // namespace dcnet

#endif  // DCNET_PIPELINE_QLDPC_HPP
