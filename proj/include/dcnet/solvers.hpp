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

#ifndef DCNET_SOLVERS_HPP
#define DCNET_SOLVERS_HPP

#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "dcnet/common.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/pipeline_surface.hpp"
#include "dcnet/qec_models.hpp"

namespace dcnet {

struct SolveResult {
    double value;      // seconds or physical qubits, depending on the query
    bool feasible;
    double residual;   // forward-evaluated rate minus target
    int iterations;
    std::string diagnostic;
};

struct Bracket {
    double lo;
    double hi;
};

inline constexpr Bracket kDefaultHgpBracket{5'000, 500'000};
inline constexpr Bracket kDefaultSurfaceBracket{1, 500'000};
inline constexpr double kSolveRelTol = 1e-9;
inline constexpr int kMaxBisections = 200;

namespace detail {

inline void require_target(double target) {
    require_finite(target, "target");
    require(target > 0 && target < 1, "target must lie in (0, 1)");
}

inline bool within_tolerance(double residual, double target) {
    return std::abs(residual) <= kSolveRelTol * target;
}

}  // namespace detail

/// Smallest x in `bracket` with rate(x) <= target, for a rate that falls as x grows.
///
/// The bracket is sampled first. If the samples are not monotone the search
/// narrows to the first sampled crossing before bisecting.
template <class RateFn>
SolveResult bisect_decreasing(RateFn &&rate, double target, Bracket bracket) {
    detail::require_target(target);
    detail::require_finite(bracket.lo, "bracket.lo");
    detail::require_finite(bracket.hi, "bracket.hi");
    detail::require(bracket.lo > 0 && bracket.lo < bracket.hi, "bracket must satisfy 0 < lo < hi");

    double lo = bracket.lo;
    double hi = bracket.hi;
    const double at_lo = rate(lo);
    if (at_lo <= target) {
        return {lo, true, at_lo - target, 0, "target already met at the lower bound"};
    }
    const double at_hi = rate(hi);
    if (at_hi > target) {
        return {hi, false, at_hi - target, 0, "target not reachable within the bracket"};
    }

    std::string diagnostic;
    constexpr int kSamples = 64;
    const double ratio = std::pow(hi / lo, 1.0 / kSamples);
    double prev_x = lo;
    double prev_rate = at_lo;
    bool monotone = true;
    double crossing_lo = lo;
    double crossing_hi = hi;
    bool crossing_found = false;
    for (int i = 1; i <= kSamples; ++i) {
        const double x = i == kSamples ? hi : lo * std::pow(ratio, i);
        const double r = i == kSamples ? at_hi : rate(x);
        if (r > prev_rate) {
            monotone = false;
        }
        if (!crossing_found && r <= target) {
            crossing_lo = prev_x;
            crossing_hi = x;
            crossing_found = true;
        }
        prev_x = x;
        prev_rate = r;
    }
    if (!monotone) {
        lo = crossing_lo;
        hi = crossing_hi;
        diagnostic = "rate not monotone on the bracket; bisected the first crossing";
    }

    int iterations = 0;
    while (iterations < kMaxBisections) {
        ++iterations;
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double r = rate(mid);
        if (detail::within_tolerance(r - target, target)) {
            return {mid, true, r - target, iterations, std::move(diagnostic)};
        }
        if (r > target) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double residual = rate(hi) - target;
    const bool ok = detail::within_tolerance(residual, target);
    if (!ok) {
        if (!diagnostic.empty()) {
            diagnostic += "; ";
        }
        diagnostic += "bisection stopped before reaching the residual tolerance";
    }
    return {hi, ok, residual, iterations, std::move(diagnostic)};
}

/// Longest one-way transport time keeping R_tot at or below `target`.
///
/// R_tot is affine in T_3 with slope 4 R_L(n_m) / t_cyc(n_m), so the answer is
/// closed-form. Never negative: an unreachable target is flagged infeasible.
inline SolveResult max_transport_time(const HgpConfig &code, const PhysicalParams &params,
                                      double target) {
    detail::require_target(target);
    params.validate();
    const double intercept = total_lfr(code, params, 0.0);
    if (intercept > target) {
        return {0.0, false, intercept - target, 0,
                "transport-independent terms already exceed the target"};
    }
    const PatchRates rates = patch_rates(code, params);
    const double slope = 4 * rates.memory / rates.memory_cycle;
    if (!(slope > 0)) {
        return {0.0, false, intercept - target, 0,
                "transport error rate underflows; transport time unbounded"};
    }
    const double t3 = (target - intercept) / slope;
    const double residual = total_lfr(code, params, t3) - target;
    const bool ok = detail::within_tolerance(residual, target);
    return {t3, ok, residual, 1, ok ? "" : "closed-form inversion missed the tolerance"};
}

/// Smallest qLDPC memory patch (continuous n_m) with R_tot <= target.
inline SolveResult min_hgp_patch(double transport_time, const PhysicalParams &params,
                                 double target, Bracket bracket = kDefaultHgpBracket) {
    params.validate();
    detail::require_non_negative(transport_time, "T_3");
    detail::require(bracket.lo >= 25, "bracket.lo must be >= 25");
    return bisect_decreasing(
        [&](double n) { return total_lfr(HgpConfig(n), params, transport_time); }, target,
        bracket);
}

/// Smallest surface patch (continuous n_ms) with R_tots <= target.
inline SolveResult min_surface_patch(double transport_time, const PhysicalParams &params,
                                     double target, Bracket bracket = kDefaultSurfaceBracket) {
    params.validate();
    detail::require_non_negative(transport_time, "T_3s");
    detail::require(bracket.lo >= 1, "bracket.lo must be >= 1");
    return bisect_decreasing(
        [&](double n) { return total_lfr_sc(SurfaceConfig(n), params, transport_time); },
        target, bracket);
}

/// Rounds a solved continuous patch size up to whole physical qubits.
inline double whole_qubits(double continuous) { return std::ceil(continuous); }

}  // namespace dcnet

#endif  // DCNET_SOLVERS_HPP
