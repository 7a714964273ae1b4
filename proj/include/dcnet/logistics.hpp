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

#ifndef DCNET_LOGISTICS_HPP
#define DCNET_LOGISTICS_HPP

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

#include "dcnet/common.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/pipeline_surface.hpp"

namespace dcnet {

enum class CodeFamily { Qldpc, Surface };

inline const char *to_string(CodeFamily family) {
    return family == CodeFamily::Qldpc ? "QLDPC" : "SURFACE";
}

struct CostPerBit {
    double transport;  // C_t, USD/bit
    double quantum;    // C_q, USD/bit
    double total;      // C_o = C_t + C_q
};

struct FleetReport {
    CodeFamily family;
    /// Logical bits delivered per second by one block (qLDPC) or one patch (surface).
    double logical_rate;
    /// Blocks needed in parallel per destination (qLDPC); patches per second (surface).
    double parallel_blocks;
    double blocks_per_vehicle;
    /// Vehicles dispatched per window: one T_4 for qLDPC, one second for surface.
    double trucks_per_cycle;
    double truck_total_unrounded;
    std::int64_t truck_total;
    CostPerBit cost;
};

struct UsageProfile {
    double messages_per_day;
    double bits_per_message;
    double wait_seconds;  // time a user spends at the qATM per refill
};

struct BandwidthEstimate {
    double bits_per_second;
    double users_per_day;  // refill slots per destination per day
};

inline BandwidthEstimate bandwidth_from_usage(const UsageProfile &profile) {
    detail::require_positive(profile.messages_per_day, "messages_per_day");
    detail::require_positive(profile.bits_per_message, "bits_per_message");
    detail::require_positive(profile.wait_seconds, "wait_seconds");
    const double bits_per_refill = profile.messages_per_day * profile.bits_per_message;
    return {bits_per_refill / profile.wait_seconds, 86'400 / profile.wait_seconds};
}

/// Human-readable rate with one decimal, e.g. "2.3 kbps".
inline std::string format_bandwidth(double bits_per_second) {
    const char *unit = "bps";
    double value = bits_per_second;
    if (value >= 1e9) {
        value /= 1e9;
        unit = "Gbps";
    } else if (value >= 1e6) {
        value /= 1e6;
        unit = "Mbps";
    } else if (value >= 1e3) {
        value /= 1e3;
        unit = "kbps";
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.1f %s", value, unit);
    return buf;
}

/// Dollars rounded half-up to the cent, e.g. "1.40".
inline std::string format_usd(double dollars) {
    const double cents = std::floor(dollars * 100 + 0.5);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.2f", cents / 100);
    return buf;
}

/// Per-bit transport and quantum-maintenance cost for a fleet of `truck_total` vehicles.
///
/// `device_qubits` is the physical size of one memory device; it is n_m for
/// both families.
inline CostPerBit cost_per_bit(std::int64_t truck_total, const NetworkParams &network,
                               double device_qubits) {
    network.validate();
    detail::require_positive(device_qubits, "device_qubits");
    detail::require(truck_total >= 0, "truck_total must be >= 0");
    const double trucks = static_cast<double>(truck_total);
    const double bits_per_second = network.bandwidth * network.destinations;
    const double devices_per_truck = network.truck_capacity_qubits / device_qubits;

    CostPerBit c{};
    c.transport = network.rent_per_hour * trucks / (3600 * bits_per_second);
    c.quantum = 2 * devices_per_truck * trucks * network.maintenance_per_year /
                (bits_per_second * 86'400 * 365);
    c.total = c.transport + c.quantum;
    return c;
}

inline FleetReport fleet_qldpc(const Scenario &scenario, const StageBreakdown &breakdown) {
    scenario.validate();
    const NetworkParams &net = scenario.network;
    const double n_m = scenario.code.memory_qubits();
    detail::require_positive(breakdown.deliver_time, "T_4");

    FleetReport r{};
    r.family = CodeFamily::Qldpc;
    r.logical_rate = scenario.code.logical_qubits() / breakdown.deliver_time;
    r.parallel_blocks = net.bandwidth / r.logical_rate;
    r.blocks_per_vehicle = net.truck_capacity_qubits / n_m;
    r.trucks_per_cycle = net.destinations * r.parallel_blocks / r.blocks_per_vehicle;
    // Load, drive out, unload, drive back.
    const double round_trip = breakdown.load_time + 2 * scenario.transport_time +
                              breakdown.deliver_time;
    r.truck_total_unrounded = r.trucks_per_cycle * round_trip / breakdown.deliver_time;
    r.truck_total = static_cast<std::int64_t>(std::ceil(r.truck_total_unrounded));
    r.cost = cost_per_bit(r.truck_total, net, n_m);
    return r;
}

inline FleetReport fleet_surface(const SurfaceScenario &scenario,
                                 const SurfaceBreakdown &breakdown) {
    scenario.validate();
    const NetworkParams &net = scenario.network;
    const double n_ms = scenario.code.patch_qubits();
    detail::require_positive(breakdown.cycle_time, "surface cycle time");

    FleetReport r{};
    r.family = CodeFamily::Surface;
    // Every patch carries one logical bit and is read out in a single round.
    r.logical_rate = 1 / breakdown.cycle_time;
    r.parallel_blocks = net.bandwidth;
    r.blocks_per_vehicle = net.truck_capacity_qubits / n_ms;
    r.trucks_per_cycle = net.destinations * net.bandwidth / r.blocks_per_vehicle;
    r.truck_total_unrounded =
        r.trucks_per_cycle * (breakdown.total_time + scenario.transport_time);
    r.truck_total = static_cast<std::int64_t>(std::ceil(r.truck_total_unrounded));
    r.cost = cost_per_bit(r.truck_total, net, scenario.device_qubits);
    return r;
}

}  // namespace dcnet

#endif  // DCNET_LOGISTICS_HPP
