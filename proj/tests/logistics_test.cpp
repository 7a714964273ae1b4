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

#include "dcnet/logistics.hpp"

#include <cmath>

#include "dcnet/solvers.hpp"
#include "gtest/gtest.h"

namespace {

using dcnet::FleetReport;
using dcnet::PhysicalParams;
using dcnet::Scenario;
using dcnet::SurfaceConfig;
using dcnet::SurfaceScenario;

FleetReport qldpc_fleet(const Scenario &s) { return dcnet::fleet_qldpc(s, dcnet::evaluate(s)); }

SurfaceScenario reference_point_surface(double n_ms) {
    return {SurfaceConfig(n_ms), PhysicalParams::reference_defaults(), 5'400, 60'000, {}};
}

FleetReport surface_fleet(const SurfaceScenario &s) {
    return dcnet::fleet_surface(s, dcnet::evaluate_sc(s));
}

TEST(logistics, BandwidthFromSmsUsage) {
    const auto bw = dcnet::bandwidth_from_usage({85, 16'000, 600});
    EXPECT_NEAR(bw.bits_per_second, 1'360'000.0 / 600, 1e-9);
    EXPECT_DOUBLE_EQ(bw.users_per_day, 144);
    EXPECT_EQ(dcnet::format_bandwidth(bw.bits_per_second), "2.3 kbps");
    EXPECT_DOUBLE_EQ(dcnet::bandwidth_from_usage({1, 600, 600}).bits_per_second, 1.0);
    EXPECT_THROW(dcnet::bandwidth_from_usage({0, 16'000, 600}), dcnet::InvalidInput);
    EXPECT_THROW(dcnet::bandwidth_from_usage({85, 16'000, 0}), dcnet::InvalidInput);
}

TEST(logistics, QldpcReferencePointFleet) {
    const FleetReport f = qldpc_fleet(Scenario::reference_defaults());
    EXPECT_EQ(f.family, dcnet::CodeFamily::Qldpc);
    EXPECT_NEAR(f.truck_total_unrounded, 7443.7140853513129, 1e-6);
    EXPECT_EQ(f.truck_total, 7444);
    EXPECT_NEAR(f.cost.total, 1.3953634291428613, 1e-10);
    EXPECT_EQ(dcnet::format_usd(f.cost.total), "1.40");
    EXPECT_EQ(f.cost.total, f.cost.transport + f.cost.quantum);
}

TEST(logistics, QldpcLinearInDestinations) {
    Scenario s = Scenario::reference_defaults();
    const double five = qldpc_fleet(s).truck_total_unrounded;
    s.network.destinations = 1;
    const FleetReport one = qldpc_fleet(s);
    EXPECT_NEAR(one.truck_total_unrounded, five / 5, five * 1e-15);
    EXPECT_EQ(one.truck_total, static_cast<std::int64_t>(std::ceil(five / 5)));
}

TEST(logistics, QldpcSensitiveToBandwidth) {
    Scenario s = Scenario::reference_defaults();
    s.network.bandwidth = 1'360'000.0 / 600;
    EXPECT_NEAR(qldpc_fleet(s).truck_total_unrounded, 7335.8341710708591, 1e-6);
    const double base = qldpc_fleet(Scenario::reference_defaults()).truck_total_unrounded;
    s.network.bandwidth = 4'600;
    EXPECT_NEAR(qldpc_fleet(s).truck_total_unrounded, 2 * base, base * 1e-12);
}

TEST(logistics, QldpcRejectsUndersizedTruck) {
    Scenario s = Scenario::reference_defaults();
    s.network.truck_capacity_qubits = 50'000;
    const auto b = dcnet::StageBreakdown{};
    EXPECT_THROW(dcnet::fleet_qldpc(s, b), dcnet::InvalidInput);
}

TEST(logistics, SurfaceReferencePointFleet) {
    const FleetReport f = surface_fleet(reference_point_surface(257));
    EXPECT_NEAR(f.truck_total_unrounded, 31919.400604029232, 1e-6);
    EXPECT_EQ(f.truck_total, 31920);
    EXPECT_NEAR(f.cost.total, 5.9833423775174817, 1e-10);
    EXPECT_GE(f.cost.total, 5.97);
    EXPECT_LE(f.cost.total, 6.01);
}

TEST(logistics, SurfaceContinuousRootUndershootsReferencePoint) {
    const auto root = dcnet::min_surface_patch(5'400, PhysicalParams::reference_defaults(), 0.08);
    const FleetReport f = surface_fleet(reference_point_surface(root.value));
    EXPECT_NEAR(f.truck_total_unrounded, 31882.237337205934, 1e-3);
}

TEST(logistics, SurfaceLinearInPatchSize) {
    const double a = surface_fleet(reference_point_surface(257)).truck_total_unrounded;
    const double b = surface_fleet(reference_point_surface(514)).truck_total_unrounded;
    // Doubling n_ms doubles the trucks per second; T_1s moves the lifecycle by microseconds.
    EXPECT_NEAR(b / a, 2.0, 1e-7);
}

TEST(logistics, SurfaceNoTransportIsNearlyFree) {
    const FleetReport f = surface_fleet(reference_point_surface(257));
    auto s = reference_point_surface(257);
    s.transport_time = 0;
    const FleetReport g = surface_fleet(s);
    EXPECT_LT(g.truck_total_unrounded, 1.0);
    EXPECT_EQ(g.truck_total, 1);
    EXPECT_LT(g.truck_total_unrounded, f.truck_total_unrounded * 1e-7);
}

TEST(logistics, CostsAreLinearAndZeroWhenFree) {
    dcnet::NetworkParams net;
    const auto base = dcnet::cost_per_bit(7'444, net, 60'000);
    net.rent_per_hour = 300;
    net.maintenance_per_year = 4e6;
    const auto doubled = dcnet::cost_per_bit(7'444, net, 60'000);
    EXPECT_NEAR(doubled.transport, 2 * base.transport, 1e-15);
    EXPECT_NEAR(doubled.quantum, 2 * base.quantum, 1e-15);
    net.rent_per_hour = 0;
    net.maintenance_per_year = 0;
    const auto free = dcnet::cost_per_bit(7'444, net, 60'000);
    EXPECT_EQ(free.total, 0.0);
    net.bandwidth = 0;
    EXPECT_THROW(dcnet::cost_per_bit(7'444, net, 60'000), dcnet::InvalidInput);
}

TEST(logistics, TruckRatioFavoursQldpc) {
    const auto q = qldpc_fleet(Scenario::reference_defaults());
    const auto s = surface_fleet(reference_point_surface(257));
    EXPECT_GE(static_cast<double>(s.truck_total) / q.truck_total, 4.0);
}

TEST(logistics, TrucksFallAsToleranceRises) {
    const auto params = PhysicalParams::reference_defaults();
    double prev = INFINITY;
    for (double target = 0.05; target <= 0.3; target += 0.01) {
        const auto r = dcnet::min_hgp_patch(5'400, params, target);
        ASSERT_TRUE(r.feasible);
        Scenario s = Scenario::reference_defaults();
        s.code = dcnet::HgpConfig(r.value);
        const double trucks = qldpc_fleet(s).truck_total_unrounded;
        EXPECT_LE(trucks, prev) << target;
        prev = trucks;
    }
}

TEST(logistics, UsdFormatting) {
    EXPECT_EQ(dcnet::format_usd(1.395), "1.40");
    EXPECT_EQ(dcnet::format_usd(5.98334), "5.98");
    EXPECT_EQ(dcnet::format_usd(0), "0.00");
    EXPECT_EQ(dcnet::format_usd(0.125), "0.13");
}

}  // namespace
