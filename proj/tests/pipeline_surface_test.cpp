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

#include "dcnet/pipeline_surface.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

namespace {

using dcnet::PhysicalParams;
using dcnet::SurfaceConfig;
using dcnet::SurfaceScenario;

SurfaceScenario scenario(double n_ms, double t3, double pg = 0.001) {
    PhysicalParams p = PhysicalParams::reference_defaults();
    p.gate_error = pg;
    return {SurfaceConfig(n_ms), p, t3, std::max(60'000.0, n_ms), {}};
}

TEST(pipeline_surface, ReferencePointBaselineMatchesOracle) {
    const auto b = dcnet::evaluate_sc(scenario(257, 5'400));
    EXPECT_NEAR(b.cycle_lfr, 4.3896191293436627e-11, 4.4e-11 * 1e-11);
    EXPECT_NEAR(b.total_lfr, 0.079013151540865491, 0.08 * 1e-11);
    EXPECT_NEAR(b.total_time, 5400.0002043746345, 1e-9);
    EXPECT_NEAR(b.fidelity, 0.921, 5e-4);
    // Storage and the two transport legs dominate equally.
    EXPECT_NEAR(b.store_lfr / (2 * b.transport_lfr), 1.0, 1e-6);
    EXPECT_TRUE(b.feasible);
}

TEST(pipeline_surface, NoTransportLargePatchIsTiny) {
    for (double n : {400.0, 900.0, 2'500.0}) {
        const auto b = dcnet::evaluate_sc(scenario(n, 0));
        EXPECT_LT(b.total_lfr, 1e-9);
    }
    EXPECT_NEAR(dcnet::evaluate_sc(scenario(400, 0)).total_lfr, 4.5738386735564857e-11,
                4.6e-11 * 1e-11);
}

TEST(pipeline_surface, AtThresholdRateIsConstant) {
    for (double n : {9.0, 257.0, 10'000.0}) {
        const auto b = dcnet::evaluate_sc(scenario(n, 10, 1.0 / 70));
        EXPECT_NEAR(b.cycle_lfr, 0.3, 1e-15);
        EXPECT_FALSE(b.feasible);
        EXPECT_EQ(b.warnings.front().kind, dcnet::WarningKind::SurfaceAboveThreshold);
    }
}

TEST(pipeline_surface, IdentitiesAndGateClock) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> n_dist(50, 5'000);
    std::uniform_real_distribution<double> t_dist(1, 2e4);
    for (int i = 0; i < 200; ++i) {
        const auto s = scenario(n_dist(rng), t_dist(rng));
        const auto b = dcnet::evaluate_sc(s);
        EXPECT_EQ(b.network_lfr, b.bell_pair_lfr + b.transport_lfr + b.cycle_lfr);
        EXPECT_EQ(b.total_time, b.bell_pair_time + b.transport_time + 6 * s.params.gate_time);
        EXPECT_EQ(b.total_lfr, b.bell_measure_lfr + b.store_lfr + 2 * b.network_lfr);
        EXPECT_EQ(b.fidelity, 1 - b.total_lfr);
        EXPECT_NEAR(b.transport_lfr * (6 * s.params.gate_time) / b.transport_time, b.cycle_lfr,
                    b.cycle_lfr * 1e-15);
    }
}

TEST(pipeline_surface, AffineInTransportTime) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> n_dist(100, 600);
    for (int i = 0; i < 20; ++i) {
        const double n = n_dist(rng);
        const auto lo = dcnet::evaluate_sc(scenario(n, 0));
        const auto hi = dcnet::evaluate_sc(scenario(n, 1e4));
        const double slope = 4 * lo.cycle_lfr / (6 * 2e-6);
        EXPECT_NEAR((hi.total_lfr - lo.total_lfr) / 1e4, slope, slope * 1e-9);
    }
}

TEST(pipeline_surface, DecreasesWithPatchSize) {
    double prev = dcnet::evaluate_sc(scenario(50, 5'400)).total_lfr;
    for (double n = 55; n < 2'000; n += 5) {
        const double r = dcnet::evaluate_sc(scenario(n, 5'400)).total_lfr;
        EXPECT_LT(r, prev) << n;
        prev = r;
    }
}

TEST(pipeline_surface, Validation) {
    auto s = scenario(257, 5'400);
    s.device_qubits = 100;
    EXPECT_THROW(dcnet::evaluate_sc(s), dcnet::InvalidInput);
    s = scenario(257, -5);
    EXPECT_THROW(dcnet::evaluate_sc(s), dcnet::InvalidInput);
}

}  // namespace
