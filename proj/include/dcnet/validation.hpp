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

#ifndef DCNET_VALIDATION_HPP
#define DCNET_VALIDATION_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <thread>
#include <vector>

#include "dcnet/common.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/pipeline_surface.hpp"

namespace dcnet {

/// `cycles` independent rounds, each failing with probability `rate`.
struct StageTerm {
    double cycles;
    double rate;
};

using StageSpec = std::vector<StageTerm>;

inline void validate_stage_spec(std::span<const StageTerm> spec) {
    for (const StageTerm &t : spec) {
        detail::require_non_negative(t.cycles, "cycles");
        detail::require_finite(t.rate, "rate");
        detail::require(t.rate >= 0 && t.rate <= 1, "rate must lie in [0, 1]");
    }
}

/// Probability that a single term fails at least once: 1 - (1 - p)^n.
inline double term_failure_prob(const StageTerm &t) {
    if (t.cycles == 0 || t.rate == 0) {
        return 0;
    }
    if (t.rate == 1) {
        return 1;
    }
    return -std::expm1(t.cycles * std::log1p(-t.rate));
}

inline double exact_failure_prob(std::span<const StageTerm> spec) {
    validate_stage_spec(spec);
    double log_survival = 0;
    for (const StageTerm &t : spec) {
        if (t.cycles == 0 || t.rate == 0) {
            continue;
        }
        if (t.rate == 1) {
            return 1;
        }
        log_survival += t.cycles * std::log1p(-t.rate);
    }
    return -std::expm1(log_survival);
}

struct ApproxFailure {
    double probability;  // sum of cycles * rate, never truncated
    bool exceeds_one;
};

inline ApproxFailure approx_failure_prob(std::span<const StageTerm> spec) {
    validate_stage_spec(spec);
    double sum = 0;
    for (const StageTerm &t : spec) {
        sum += t.cycles * t.rate;
    }
    return {sum, sum > 1};
}

struct MonteCarloEstimate {
    double estimate;
    double std_error;
    std::uint64_t trials;
    std::uint64_t failures;
};

namespace detail {

// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

// Uniform in [0, 1) keyed on (seed, trial, stage); independent of scheduling.
inline double keyed_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t stage) {
    const std::uint64_t trial_key = mix64(seed + 0x9E3779B97F4A7C15ULL * (trial + 1));
    const std::uint64_t bits = mix64(trial_key ^ (0xD1B54A32D192ED03ULL * (stage + 1)));
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Samples `trials` independent runs of the spec. Each term is a single Bernoulli
/// draw with its whole-term failure probability.
///
/// Results depend only on (spec, trials, seed); `workers` only changes speed.
inline MonteCarloEstimate monte_carlo_failure(std::span<const StageTerm> spec,
                                              std::uint64_t trials, std::uint64_t seed,
                                              unsigned workers = 0) {
    validate_stage_spec(spec);
    detail::require(trials >= 1, "trials must be >= 1");

    std::vector<double> term_prob;
    term_prob.reserve(spec.size());
    for (const StageTerm &t : spec) {
        term_prob.push_back(term_failure_prob(t));
    }

    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, trials));

    auto count_range = [&](std::uint64_t begin, std::uint64_t end) {
        std::uint64_t failures = 0;
        for (std::uint64_t trial = begin; trial < end; ++trial) {
            for (std::size_t s = 0; s < term_prob.size(); ++s) {
                if (detail::keyed_uniform(seed, trial, s) < term_prob[s]) {
                    ++failures;
                    break;
                }
            }
        }
        return failures;
    };

    std::vector<std::uint64_t> partial(workers, 0);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        const std::uint64_t chunk = trials / workers;
        const std::uint64_t extra = trials % workers;
        std::uint64_t begin = 0;
        for (unsigned w = 0; w < workers; ++w) {
            const std::uint64_t end = begin + chunk + (w < extra ? 1 : 0);
            pool.emplace_back([&, w, begin, end] { partial[w] = count_range(begin, end); });
            begin = end;
        }
    }

    std::uint64_t failures = 0;
    for (std::uint64_t f : partial) {
        failures += f;
    }
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(failures) / n;
    return {p, std::sqrt(p * (1 - p) / n), trials, failures};
}

/// Per-cycle decomposition of every qLDPC stage. Its additive approximation
/// is R_tot; its exact product is the unapproximated failure probability.
inline StageSpec qldpc_stage_spec(const Scenario &scenario) {
    scenario.validate();
    const PatchRates r = patch_rates(scenario.code, scenario.params);
    const HgpConfig &code = scenario.code;
    const double d = code.distance();
    const double k = code.logical_qubits();
    const double ancilla_rounds = std::sqrt(code.ancilla_qubits());
    const DistributionStages dist = stage_lfrs(scenario, r);
    const double total_time = dist.load_time + scenario.transport_time + dist.deliver_time;

    StageSpec spec;
    // Two network legs, Alice's and Bob's.
    for (int leg = 0; leg < 2; ++leg) {
        // Memory initialization.
        spec.push_back({2 * d, r.memory});
        // Bell pair creation.
        spec.push_back({2 * d, r.surface});
        // Loading both halves.
        spec.push_back({2 * ancilla_rounds, r.ancilla});
        spec.push_back({2 * d, r.surface});
        spec.push_back({2 * d, r.ancilla});
        spec.push_back({2 * d, r.ancilla});
        spec.push_back({2 * d * k, r.memory});
        // Transport.
        spec.push_back({dist.transport_cycles, r.memory});
        // Unload and measure at the qATM.
        spec.push_back({d, r.surface});
        spec.push_back({ancilla_rounds, r.ancilla});
        spec.push_back({d, r.surface});
        spec.push_back({d, r.ancilla});
        spec.push_back({d, r.ancilla});
        spec.push_back({d * k, r.memory});
        spec.push_back({1, r.surface});
    }
    // Hub storage of both drives.
    spec.push_back({2 * total_time / r.memory_cycle, r.memory});
    // Unload at the hub.
    spec.push_back({2 * d, r.surface});
    spec.push_back({2 * ancilla_rounds, r.ancilla});
    spec.push_back({2 * d, r.ancilla});
    spec.push_back({2 * d * k, r.memory});
    spec.push_back({2 * d, r.ancilla});
    spec.push_back({2 * d, r.surface});
    // Bell measurement.
    spec.push_back({4 * d, r.surface});
    return spec;
}

inline StageSpec surface_stage_spec(const SurfaceScenario &scenario) {
    const SurfaceBreakdown b = evaluate_sc(scenario);
    const double d = scenario.code.distance();
    StageSpec spec;
    for (int leg = 0; leg < 2; ++leg) {
        spec.push_back({2 * d, b.cycle_lfr});
        spec.push_back({b.transport_time / b.cycle_time, b.cycle_lfr});
        spec.push_back({1, b.cycle_lfr});
    }
    spec.push_back({2 * b.total_time / b.cycle_time, b.cycle_lfr});
    spec.push_back({4 * d, b.cycle_lfr});
    return spec;
}

}  // namespace dcnet

#endif  // DCNET_VALIDATION_HPP
