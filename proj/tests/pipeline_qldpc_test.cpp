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

#include "dcnet/pipeline_qldpc.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"

// Reference values come from tests/oracle/model_oracle.py (50-digit mpmath).

namespace {

using dcnet::HgpConfig;
using dcnet::PhysicalParams;
using dcnet::Scenario;
using dcnet::StageBreakdown;

void expect_rel(double actual, double expected, double rel = 1e-11) {
    EXPECT_NEAR(actual, expected, std::abs(expected) * rel) << "expected " << expected;
}

Scenario scenario(double n_m, double t3, double pg = 0.001) {
    Scenario s = Scenario::reference_defaults();
    s.code = HgpConfig(n_m);
    s.transport_time = t3;
    s.params.gate_error = pg;
    s.network.truck_capacity_qubits = std::max(1e6, n_m);
    return s;
}

TEST(pipeline_qldpc, StagesMatchOracleAtReferencePointPoint) {
    const auto st = dcnet::stage_lfrs(scenario(60'000, 5'400));
    expect_rel(st.init_lfr, 5.0511449481308527e-7);
    expect_rel(st.bell_pair_lfr, 3.9957733148766471e-28);
    expect_rel(st.load_lfr, 0.022218000726039897);
    expect_rel(st.transport_lfr, 0.00085226582858115731);
    expect_rel(st.deliver_lfr, 0.011109000363019948);
    expect_rel(st.load_time, 7544.8698606085356);
    expect_rel(st.deliver_time, 7546.3095667003787);
}

TEST(pipeline_qldpc, ZeroTransportHasZeroTransportRate) {
    const auto st = dcnet::stage_lfrs(scenario(60'000, 0));
    EXPECT_EQ(st.transport_lfr, 0.0);
    EXPECT_EQ(st.transport_cycles, 0.0);
}

TEST(pipeline_qldpc, StorageAndSwapMatchOracle) {
    const Scenario s = scenario(60'000, 5'400);
    const auto sw = dcnet::storage_and_swap_lfrs(s, 20491.179427308914);
    expect_rel(sw.store_lfr, 0.0064681229678594802);
    expect_rel(sw.unload_lfr, 0.022218000726039897);
    expect_rel(sw.bell_measure_lfr, 7.9915466297532942e-28);
    EXPECT_EQ(dcnet::storage_and_swap_lfrs(s, 0).store_lfr, 0.0);
    EXPECT_THROW(dcnet::storage_and_swap_lfrs(s, -1), dcnet::InvalidInput);
}

TEST(pipeline_qldpc, BellMeasurementNegligibleAtScale) {
    for (double n : {10'000.0, 35'000.0, 60'000.0, 200'000.0}) {
        const Scenario s = scenario(n, 5'400);
        const auto sw = dcnet::storage_and_swap_lfrs(s, 0);
        const double d = std::sqrt(n) / 5;
        const double rs = dcnet::surface_lfr_per_cycle(d, 0.001).rate;
        EXPECT_DOUBLE_EQ(sw.bell_measure_lfr, 4 * d * rs);
        // 1.79e-11 at n_m = 10,000; below 1e-20 from n_m ~ 35,000 on.
        EXPECT_LT(sw.bell_measure_lfr, 1e-9 * dcnet::evaluate(s).total_lfr);
        if (n >= 35'000) {
            EXPECT_LT(sw.bell_measure_lfr, 1e-20);
        }
    }
}

TEST(pipeline_qldpc, EvaluateMatchesOracle) {
    const StageBreakdown b = dcnet::evaluate(scenario(60'000, 5'400));
    expect_rel(b.total_time, 20491.179427308914);
    expect_rel(b.store_lfr, 0.0064681229678594802);
    expect_rel(b.total_lfr, 0.097045667758171008);
    EXPECT_NEAR(b.fidelity, 0.903, 5e-4);
    EXPECT_TRUE(b.feasible);
    EXPECT_TRUE(b.warnings.empty());

    const StageBreakdown c = dcnet::evaluate(scenario(53'000, 3'600));
    expect_rel(c.total_lfr, 0.11680628019575777);
}

TEST(pipeline_qldpc, PerPatchIdlingGivesHigherFidelity) {
    Scenario s = scenario(60'000, 5'400);
    s.params = PhysicalParams::per_patch_defaults();
    const StageBreakdown b = dcnet::evaluate(s);
    EXPECT_NEAR(b.fidelity, 0.933, 1e-3);
}

TEST(pipeline_qldpc, IdentitiesHoldExactly) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> n_dist(1e3, 3e5);
    std::uniform_real_distribution<double> t_dist(0, 2e4);
    std::uniform_real_distribution<double> p_dist(1e-4, 5e-3);
    for (int i = 0; i < 200; ++i) {
        const StageBreakdown b = dcnet::evaluate(scenario(n_dist(rng), t_dist(rng), p_dist(rng)));
        EXPECT_EQ(b.network_lfr,
                  b.init_lfr + b.bell_pair_lfr + b.load_lfr + b.transport_lfr + b.deliver_lfr);
        EXPECT_EQ(b.total_time, b.load_time + b.transport_time + b.deliver_time);
        EXPECT_EQ(b.total_lfr, b.bell_measure_lfr + b.unload_lfr + b.store_lfr + 2 * b.network_lfr);
        EXPECT_EQ(b.fidelity, 1 - b.total_lfr);
        EXPECT_EQ(b.feasible, b.total_lfr >= 0 && b.total_lfr < 1);
        for (double r : {b.init_lfr, b.bell_pair_lfr, b.load_lfr, b.transport_lfr, b.deliver_lfr,
                         b.store_lfr, b.unload_lfr, b.bell_measure_lfr}) {
            EXPECT_GE(r, 0.0);
            EXPECT_TRUE(std::isfinite(r));
        }
    }
}

TEST(pipeline_qldpc, AffineInTransportTime) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> n_dist(2e4, 1.2e5);
    for (int i = 0; i < 20; ++i) {
        const double n = n_dist(rng);
        const auto params = PhysicalParams::reference_defaults();
        const double lo = dcnet::evaluate(scenario(n, 0)).total_lfr;
        const double hi = dcnet::evaluate(scenario(n, 1e5)).total_lfr;
        const double slope = 4 * dcnet::hgp_lfr_per_cycle(n, 0.001).rate / dcnet::cycle_time(n, params);
        expect_rel((hi - lo) / 1e5, slope, 1e-9);
    }
}

TEST(pipeline_qldpc, TotalDecreasesWithPatchSize) {
    for (double t3 : {3'600.0, 5'400.0, 10'800.0}) {
        double prev = dcnet::evaluate(scenario(10'000, t3)).total_lfr;
        for (double n = 12'000; n <= 200'000; n += 2'000) {
            const double r = dcnet::evaluate(scenario(n, t3)).total_lfr;
            EXPECT_LT(r, prev) << n << " " << t3;
            prev = r;
        }
    }
}

TEST(pipeline_qldpc, VanishingGateErrorIsPerfect) {
    const StageBreakdown b = dcnet::evaluate(scenario(60'000, 5'400, 1e-200));
    EXPECT_EQ(b.total_lfr, 0.0);
    EXPECT_EQ(b.fidelity, 1.0);
}

TEST(pipeline_qldpc, AtThresholdIsInfeasible) {
    const StageBreakdown b = dcnet::evaluate(scenario(60'000, 5'400, 0.006));
    const auto r = dcnet::patch_rates(HgpConfig(60'000), scenario(60'000, 0, 0.006).params);
    EXPECT_DOUBLE_EQ(r.memory, 0.07);
    EXPECT_DOUBLE_EQ(r.ancilla, 0.07);
    EXPECT_GT(b.total_lfr, 1.0);
    EXPECT_FALSE(b.feasible);
    bool threshold = false, infeasible = false, large = false;
    for (const auto &w : b.warnings) {
        threshold |= w.kind == dcnet::WarningKind::HgpAboveThreshold;
        infeasible |= w.kind == dcnet::WarningKind::Infeasible;
        large |= w.kind == dcnet::WarningKind::StageRateLarge;
    }
    EXPECT_TRUE(threshold);
    EXPECT_TRUE(infeasible);
    EXPECT_TRUE(large);
}

TEST(pipeline_qldpc, LargeStageWarnsButStaysFeasible) {
    const StageBreakdown b = dcnet::evaluate(scenario(20'000, 5'400));
    EXPECT_TRUE(b.feasible);
    ASSERT_FALSE(b.warnings.empty());
    EXPECT_EQ(b.warnings.front().kind, dcnet::WarningKind::StageRateLarge);
}

TEST(pipeline_qldpc, InvalidScenarioRejected) {
    Scenario s = scenario(60'000, 5'400);
    s.transport_time = -1;
    EXPECT_THROW(dcnet::evaluate(s), dcnet::InvalidInput);
    s = scenario(60'000, 5'400);
    s.network.truck_capacity_qubits = 10'000;
    EXPECT_THROW(dcnet::evaluate(s), dcnet::InvalidInput);
    s = scenario(60'000, 5'400);
    s.network.destinations = 0;
    EXPECT_THROW(dcnet::evaluate(s), dcnet::InvalidInput);
    s = scenario(60'000, 5'400);
    s.params.gate_error = 0;
    EXPECT_THROW(dcnet::evaluate(s), dcnet::InvalidInput);
}

TEST(pipeline_qldpc, Deterministic) {
    const StageBreakdown a = dcnet::evaluate(scenario(47'123, 4'321));
    const StageBreakdown b = dcnet::evaluate(scenario(47'123, 4'321));
    EXPECT_EQ(a.total_lfr, b.total_lfr);
    EXPECT_EQ(a.total_time, b.total_time);
}

}  // namespace
