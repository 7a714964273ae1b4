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

#ifndef DCNET_CLI_HPP
#define DCNET_CLI_HPP

// Subcommand implementations behind tools/dcnet.cpp. Each command writes its
// records to `out` and diagnostics to `err`, and returns the process exit code.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "dcnet/common.hpp"
#include "dcnet/logistics.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/pipeline_surface.hpp"
#include "dcnet/qec_models.hpp"
#include "dcnet/report.hpp"
#include "dcnet/run_config.hpp"
#include "dcnet/solvers.hpp"
#include "dcnet/validation.hpp"

namespace dcnet::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;

enum class Command { Estimate, Sweep, SolveT3, SolveNm, Fleet, Compare, Validate };

/// Records plus exit code, before they are written anywhere.
struct Output {
    std::vector<Record> records;
    OutputFormat default_format = OutputFormat::Json;
    bool force_array = false;
    int exit_code = kExitOk;
};

namespace detail {

inline const char *code_name(CodeFamily f) { return f == CodeFamily::Qldpc ? "qldpc" : "surface"; }

inline const char *idling_name(IdlingMode m) {
    return m == IdlingMode::Fixed ? "fixed" : "per-patch";
}

inline Scenario qldpc_scenario(const RunConfig &cfg, double memory_qubits) {
    return {HgpConfig(memory_qubits), cfg.physical, cfg.transport_time, cfg.network};
}

inline SurfaceScenario surface_scenario(const RunConfig &cfg, double patch_qubits) {
    // Devices are sized like the qLDPC memory; grow them only if n_m was left at its default.
    const double device = cfg.memory_qubits_set
                              ? cfg.memory_qubits
                              : std::max(cfg.memory_qubits, patch_qubits);
    return {SurfaceConfig(patch_qubits), cfg.physical, cfg.transport_time, device,
            cfg.network};
}

/// Surface patch from --n-ms, or the whole-qubit solution at the target.
inline std::optional<double> surface_patch(const RunConfig &cfg, std::ostream &err) {
    if (cfg.surface_qubits) {
        return *cfg.surface_qubits;
    }
    const SolveResult r =
        min_surface_patch(cfg.transport_time, cfg.physical, cfg.target_or_default(),
                          cfg.bracket.value_or(kDefaultSurfaceBracket));
    if (!r.feasible) {
        err << "error: no surface patch meets R_tots <= " << cfg.target_or_default() << ": "
            << r.diagnostic << '\n';
        return std::nullopt;
    }
    return whole_qubits(r.value);
}

inline Record qldpc_record(const RunConfig &cfg, const Scenario &s, const StageBreakdown &b) {
    return {
        {"code", std::string("qldpc")},
        {"n_m", s.code.memory_qubits()},
        {"p_g", cfg.physical.gate_error},
        {"idling", std::string(idling_name(cfg.physical.idling))},
        {"R_0", b.init_lfr},
        {"R_1", b.bell_pair_lfr},
        {"R_2", b.load_lfr},
        {"R_3", b.transport_lfr},
        {"R_4", b.deliver_lfr},
        {"R_net", b.network_lfr},
        {"R_store", b.store_lfr},
        {"R_unload", b.unload_lfr},
        {"R_BM", b.bell_measure_lfr},
        {"R_tot", b.total_lfr},
        {"T_2", b.load_time},
        {"T_3", b.transport_time},
        {"T_4", b.deliver_time},
        {"T_tot", b.total_time},
        {"M_t", b.transport_cycles},
        {"M_tot_c", b.storage_cycles},
        {"F_final", b.fidelity},
        {"feasible", b.feasible},
        {"warnings", warning_codes(b.warnings)},
    };
}

inline Record surface_record(const RunConfig &cfg, const SurfaceScenario &s,
                             const SurfaceBreakdown &b) {
    return {
        {"code", std::string("surface")},
        {"n_ms", s.code.patch_qubits()},
        {"p_g", cfg.physical.gate_error},
        {"idling", std::string(idling_name(cfg.physical.idling))},
        {"R_ss", b.cycle_lfr},
        {"R_1s", b.bell_pair_lfr},
        {"R_3s", b.transport_lfr},
        {"R_nets", b.network_lfr},
        {"R_stores", b.store_lfr},
        {"R_BMs", b.bell_measure_lfr},
        {"R_tots", b.total_lfr},
        {"T_1s", b.bell_pair_time},
        {"T_3s", b.transport_time},
        {"T_tots", b.total_time},
        {"F_final_s", b.fidelity},
        {"feasible", b.feasible},
        {"warnings", warning_codes(b.warnings)},
    };
}

inline Record fleet_record(const FleetReport &f, double patch_qubits, double transport_time,
                           double total_lfr, const Warnings &warnings) {
    return {
        {"code_family", std::string(to_string(f.family))},
        {"patch_qubits", patch_qubits},
        {"T_3", transport_time},
        {"R_tot", total_lfr},
        {"r_L", f.logical_rate},
        {"N_blocks", f.parallel_blocks},
        {"B", f.blocks_per_vehicle},
        {"trucks_per_cycle", f.trucks_per_cycle},
        {"N_truck_tot_unrounded", f.truck_total_unrounded},
        {"N_truck_tot", f.truck_total},
        {"C_t", f.cost.transport},
        {"C_q", f.cost.quantum},
        {"C_o", f.cost.total},
        {"warnings", warning_codes(warnings)},
    };
}

inline Record solve_record(const char *code, double transport_time, double target,
                           const SolveResult &r) {
    return {
        {"code", std::string(code)},
        {"T_3", transport_time},
        {"target", target},
        {"value", r.value},
        {"whole_qubits", r.feasible ? Cell(whole_qubits(r.value)) : Cell()},
        {"feasible", r.feasible},
        {"residual", r.residual},
        {"iterations", static_cast<std::int64_t>(r.iterations)},
        {"diagnostic", r.diagnostic},
    };
}

/// Runs `task(i)` for i in [0, n) on a small thread pool; results keep index order.
template <class Task>
std::vector<Record> parallel_records(std::size_t n, Task &&task) {
    std::vector<Record> out(n);
    std::vector<std::exception_ptr> errors(n);
    std::atomic<std::size_t> next{0};
    const unsigned workers =
        static_cast<unsigned>(std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), n));
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        out[i] = task(i);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        }
    }
    for (const auto &e : errors) {
        if (e) std::rethrow_exception(e);
    }
    return out;
}

inline StageSpec parse_stages(const std::string &text) {
    StageSpec spec;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto colon = item.find(':');
        dcnet::detail::require(colon != std::string::npos,
                               "stage '" + item + "' must be cycles:rate");
        const auto nums =
            dcnet::detail::parse_number_list(item.substr(0, colon) + "," + item.substr(colon + 1));
        spec.push_back({nums[0], nums[1]});
    }
    dcnet::detail::require(!spec.empty(), "empty stage list");
    validate_stage_spec(spec);
    return spec;
}

}  // namespace detail

inline Output run_estimate(const RunConfig &cfg, std::ostream &err) {
    Output o;
    if (cfg.code == CodeFamily::Qldpc) {
        const Scenario s = detail::qldpc_scenario(cfg, cfg.memory_qubits);
        o.records.push_back(detail::qldpc_record(cfg, s, evaluate(s)));
        return o;
    }
    const auto patch = detail::surface_patch(cfg, err);
    if (!patch) {
        o.exit_code = kExitInfeasible;
        return o;
    }
    const SurfaceScenario s = detail::surface_scenario(cfg, *patch);
    o.records.push_back(detail::surface_record(cfg, s, evaluate_sc(s)));
    return o;
}

inline Output run_solve_t3(const RunConfig &cfg, std::ostream &err) {
    dcnet::detail::require(cfg.code == CodeFamily::Qldpc, "solve-t3 supports --code qldpc only");
    Output o;
    const double target = cfg.target_or_default();
    const SolveResult r = max_transport_time(HgpConfig(cfg.memory_qubits), cfg.physical, target);
    o.records.push_back({
        {"code", std::string("qldpc")},
        {"n_m", cfg.memory_qubits},
        {"target", target},
        {"T_3", r.value},
        {"feasible", r.feasible},
        {"residual", r.residual},
        {"iterations", static_cast<std::int64_t>(r.iterations)},
        {"diagnostic", r.diagnostic},
    });
    if (!r.feasible) {
        err << "infeasible: " << r.diagnostic << '\n';
        o.exit_code = kExitInfeasible;
    }
    return o;
}

inline Output run_solve_nm(const RunConfig &cfg, std::ostream &err) {
    Output o;
    const double target = cfg.target_or_default();
    SolveResult r;
    if (cfg.code == CodeFamily::Qldpc) {
        r = min_hgp_patch(cfg.transport_time, cfg.physical, target,
                          cfg.bracket.value_or(kDefaultHgpBracket));
    } else {
        r = min_surface_patch(cfg.transport_time, cfg.physical, target,
                              cfg.bracket.value_or(kDefaultSurfaceBracket));
    }
    o.records.push_back(
        detail::solve_record(detail::code_name(cfg.code), cfg.transport_time, target, r));
    if (!r.feasible) {
        err << "infeasible: " << r.diagnostic << '\n';
        o.exit_code = kExitInfeasible;
    }
    return o;
}

inline Output run_fleet(const RunConfig &cfg, std::ostream &err) {
    Output o;
    if (cfg.code == CodeFamily::Qldpc) {
        const Scenario s = detail::qldpc_scenario(cfg, cfg.memory_qubits);
        const StageBreakdown b = evaluate(s);
        o.records.push_back(detail::fleet_record(fleet_qldpc(s, b), cfg.memory_qubits,
                                                 cfg.transport_time, b.total_lfr, b.warnings));
        return o;
    }
    const auto patch = detail::surface_patch(cfg, err);
    if (!patch) {
        o.exit_code = kExitInfeasible;
        return o;
    }
    const SurfaceScenario s = detail::surface_scenario(cfg, *patch);
    const SurfaceBreakdown b = evaluate_sc(s);
    o.records.push_back(detail::fleet_record(fleet_surface(s, b), *patch, cfg.transport_time,
                                             b.total_lfr, b.warnings));
    return o;
}

inline Output run_compare(const RunConfig &cfg, std::ostream &err) {
    Output o;
    o.default_format = OutputFormat::Csv;
    o.force_array = true;
    const double target = cfg.target_or_default();

    double memory_qubits = cfg.memory_qubits;
    if (cfg.target_set && !cfg.memory_qubits_set) {
        const SolveResult r = min_hgp_patch(cfg.transport_time, cfg.physical, target,
                                            cfg.bracket.value_or(kDefaultHgpBracket));
        if (!r.feasible) {
            err << "error: no qLDPC patch meets R_tot <= " << target << ": " << r.diagnostic
                << '\n';
            o.exit_code = kExitInfeasible;
            return o;
        }
        memory_qubits = whole_qubits(r.value);
    }
    std::optional<double> patch = cfg.surface_qubits;
    if (!patch) {
        const SolveResult r = min_surface_patch(cfg.transport_time, cfg.physical, target,
                                                kDefaultSurfaceBracket);
        if (!r.feasible) {
            err << "error: no surface patch meets R_tots <= " << target << ": " << r.diagnostic
                << '\n';
            o.exit_code = kExitInfeasible;
            return o;
        }
        patch = whole_qubits(r.value);
    }

    const Scenario qs = detail::qldpc_scenario(cfg, memory_qubits);
    const StageBreakdown qb = evaluate(qs);
    const FleetReport qf = fleet_qldpc(qs, qb);

    SurfaceScenario ss = detail::surface_scenario(cfg, *patch);
    ss.device_qubits = std::max(memory_qubits, *patch);
    const SurfaceBreakdown sb = evaluate_sc(ss);
    const FleetReport sf = fleet_surface(ss, sb);

    auto row = [&](const FleetReport &f, double patch_qubits, double total_lfr) {
        return Record{
            {"code_family", std::string(to_string(f.family))},
            {"patch_qubits", patch_qubits},
            {"T_3", cfg.transport_time},
            {"R_tot", total_lfr},
            {"F_final", 1 - total_lfr},
            {"N_truck_tot_unrounded", f.truck_total_unrounded},
            {"N_truck_tot", f.truck_total},
            {"C_t", f.cost.transport},
            {"C_q", f.cost.quantum},
            {"C_o", f.cost.total},
            {"C_t_usd", format_usd(f.cost.transport)},
            {"C_q_usd", format_usd(f.cost.quantum)},
            {"C_o_usd", format_usd(f.cost.total)},
        };
    };
    o.records.push_back(row(qf, memory_qubits, qb.total_lfr));
    o.records.push_back(row(sf, *patch, sb.total_lfr));
    return o;
}

inline Output run_sweep(const RunConfig &cfg, std::ostream &err) {
    using dcnet::detail::require;
    Output o;
    o.default_format = OutputFormat::Csv;
    o.force_array = true;
    const SweepSpec &sw = cfg.sweep;

    struct Defaults {
        const char *variable;
        double from, to;
        int points;
        std::vector<double> curves;
    };
    Defaults d;
    switch (sw.figure) {
        case SweepFigure::RateVsPatch:
            d = {"n_m", 20'000, 100'000, 17, {3600, 5400, 10800}};
            break;
        case SweepFigure::TransportVsPatch:
            d = {"n_m", 10'000, 100'000, 19, {0.05, 0.1, 0.2}};
            break;
        case SweepFigure::TrucksVsTarget:
            d = {"target", 0.05, 0.3, 26, {cfg.transport_time}};
            break;
        case SweepFigure::FamilyComparison:
            d = {"target", 0.05, 0.3, 26, {0, 1}};
            break;
    }
    const double from = sw.from.value_or(d.from);
    const double to = sw.to.value_or(d.to);
    const int points = sw.points.value_or(d.points);
    require(std::isfinite(from) && std::isfinite(to), "sweep range must be finite");
    require(from != to, "degenerate sweep range: from == to");
    require(from < to, "empty sweep range: from > to");
    require(points >= 2, "sweep needs at least 2 points");
    if (sw.figure == SweepFigure::FamilyComparison) {
        require(sw.curves.empty(), "the family comparison sweep takes no curves");
    }
    const std::vector<double> curves = sw.curves.empty() ? d.curves : sw.curves;

    const bool target_axis = std::string(d.variable) == "target";
    if (target_axis) {
        require(from > 0 && to < 1, "target sweep must lie inside (0, 1)");
    } else {
        require(from >= 25, "n_m sweep must start at >= 25");
    }
    const bool curves_are_targets = sw.figure == SweepFigure::TransportVsPatch;
    for (double c : curves) {
        require(std::isfinite(c), "curve values must be finite");
        if (curves_are_targets) {
            require(c > 0 && c < 1, "target curves must lie in (0, 1)");
        } else if (sw.figure != SweepFigure::FamilyComparison) {
            require(c >= 0, "transport-time curves must be >= 0");
        }
    }

    auto grid = [&](int i) {
        return i == points - 1 ? to : from + (to - from) * i / (points - 1);
    };

    const Bracket hgp_bracket = cfg.bracket.value_or(kDefaultHgpBracket);
    auto task = [&](std::size_t idx) -> Record {
        const std::size_t c = idx / static_cast<std::size_t>(points);
        const double x = grid(static_cast<int>(idx % static_cast<std::size_t>(points)));
        const double curve = curves[c];
        char label[64];
        switch (sw.figure) {
            case SweepFigure::RateVsPatch: {
                std::snprintf(label, sizeof label, "T_3=%g", curve);
                RunConfig local = cfg;
                local.transport_time = curve;
                Scenario s = detail::qldpc_scenario(local, x);
                s.network.truck_capacity_qubits = std::max(s.network.truck_capacity_qubits, x);
                Record r = detail::qldpc_record(local, s, evaluate(s));
                r.erase(r.begin());  // drop "code"
                r.insert(r.begin() + 1, {"curve", std::string(label)});
                return r;
            }
            case SweepFigure::TransportVsPatch: {
                std::snprintf(label, sizeof label, "target=%g", curve);
                const SolveResult r = max_transport_time(HgpConfig(x), cfg.physical, curve);
                return {{"n_m", x},
                        {"curve", std::string(label)},
                        {"target", curve},
                        {"T_3", r.value},
                        {"feasible", r.feasible},
                        {"residual", r.residual}};
            }
            case SweepFigure::TrucksVsTarget: {
                std::snprintf(label, sizeof label, "T_3=%g", curve);
                const SolveResult r = min_hgp_patch(curve, cfg.physical, x, hgp_bracket);
                Record rec{{"target", x}, {"curve", std::string(label)}, {"T_3", curve},
                           {"n_m", r.value}, {"feasible", r.feasible}};
                if (!r.feasible) {
                    for (const char *k : {"n_m_whole", "R_tot", "N_truck_tot_unrounded",
                                          "N_truck_tot", "C_o"}) {
                        rec.push_back({k, Cell()});
                    }
                    return rec;
                }
                const double n = whole_qubits(r.value);
                RunConfig local = cfg;
                local.transport_time = curve;
                Scenario s = detail::qldpc_scenario(local, n);
                s.network.truck_capacity_qubits = std::max(s.network.truck_capacity_qubits, n);
                const StageBreakdown b = evaluate(s);
                const FleetReport f = fleet_qldpc(s, b);
                rec.push_back({"n_m_whole", n});
                rec.push_back({"R_tot", b.total_lfr});
                rec.push_back({"N_truck_tot_unrounded", f.truck_total_unrounded});
                rec.push_back({"N_truck_tot", f.truck_total});
                rec.push_back({"C_o", f.cost.total});
                return rec;
            }
            case SweepFigure::FamilyComparison: {
                const bool qldpc = curve == 0;
                const char *family = qldpc ? "QLDPC" : "SURFACE";
                const SolveResult r =
                    qldpc ? min_hgp_patch(cfg.transport_time, cfg.physical, x, hgp_bracket)
                          : min_surface_patch(cfg.transport_time, cfg.physical, x);
                Record rec{{"target", x}, {"curve", std::string(family)},
                           {"T_3", cfg.transport_time}, {"patch_qubits", r.value},
                           {"feasible", r.feasible}};
                if (!r.feasible) {
                    for (const char *k : {"patch_whole", "R_tot", "N_truck_tot_unrounded",
                                          "N_truck_tot", "C_o"}) {
                        rec.push_back({k, Cell()});
                    }
                    return rec;
                }
                const double n = whole_qubits(r.value);
                FleetReport f;
                double total = 0;
                if (qldpc) {
                    Scenario s = detail::qldpc_scenario(cfg, n);
                    s.network.truck_capacity_qubits =
                        std::max(s.network.truck_capacity_qubits, n);
                    const StageBreakdown b = evaluate(s);
                    f = fleet_qldpc(s, b);
                    total = b.total_lfr;
                } else {
                    SurfaceScenario s = detail::surface_scenario(cfg, n);
                    s.device_qubits = std::max(s.device_qubits, n);
                    const SurfaceBreakdown b = evaluate_sc(s);
                    f = fleet_surface(s, b);
                    total = b.total_lfr;
                }
                rec.push_back({"patch_whole", n});
                rec.push_back({"R_tot", total});
                rec.push_back({"N_truck_tot_unrounded", f.truck_total_unrounded});
                rec.push_back({"N_truck_tot", f.truck_total});
                rec.push_back({"C_o", f.cost.total});
                return rec;
            }
        }
        return {};
    };
    o.records = detail::parallel_records(curves.size() * static_cast<std::size_t>(points), task);
    (void)err;
    return o;
}

inline Output run_validate(const RunConfig &cfg, std::ostream &err) {
    Output o;
    StageSpec spec;
    std::string source;
    if (!cfg.stages.empty()) {
        spec = detail::parse_stages(cfg.stages);
        source = "stages";
    } else if (cfg.code == CodeFamily::Qldpc) {
        spec = qldpc_stage_spec(detail::qldpc_scenario(cfg, cfg.memory_qubits));
        source = "qldpc-pipeline";
    } else {
        const auto patch = detail::surface_patch(cfg, err);
        if (!patch) {
            o.exit_code = kExitInfeasible;
            return o;
        }
        spec = surface_stage_spec(detail::surface_scenario(cfg, *patch));
        source = "surface-pipeline";
    }
    const double exact = exact_failure_prob(spec);
    const ApproxFailure approx = approx_failure_prob(spec);
    const MonteCarloEstimate mc = monte_carlo_failure(spec, cfg.trials, cfg.seed);
    o.records.push_back({
        {"source", source},
        {"terms", static_cast<std::int64_t>(spec.size())},
        {"exact", exact},
        {"approx", approx.probability},
        {"approx_exceeds_one", approx.exceeds_one},
        {"approx_minus_exact", approx.probability - exact},
        {"second_order_bound", approx.probability * approx.probability / 2},
        {"mc_estimate", mc.estimate},
        {"mc_std_error", mc.std_error},
        {"mc_failures", static_cast<std::int64_t>(mc.failures)},
        {"trials", static_cast<std::int64_t>(mc.trials)},
        {"seed", static_cast<std::int64_t>(cfg.seed)},
        {"mc_within_3sigma", std::abs(mc.estimate - exact) <= 3 * mc.std_error},
    });
    return o;
}

inline Output dispatch(Command command, const RunConfig &cfg, std::ostream &err) {
    switch (command) {
        case Command::Estimate:
            return run_estimate(cfg, err);
        case Command::Sweep:
            return run_sweep(cfg, err);
        case Command::SolveT3:
            return run_solve_t3(cfg, err);
        case Command::SolveNm:
            return run_solve_nm(cfg, err);
        case Command::Fleet:
            return run_fleet(cfg, err);
        case Command::Compare:
            return run_compare(cfg, err);
        case Command::Validate:
            return run_validate(cfg, err);
    }
    return {};
}

/// Runs one command and writes its records to `cfg.out_path` or `out`.
inline int run(Command command, const RunConfig &cfg, std::ostream &out, std::ostream &err) {
    Output result;
    try {
        result = dispatch(command, cfg, err);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    const OutputFormat format = cfg.format.value_or(result.default_format);
    if (cfg.out_path.empty()) {
        write_records(out, result.records, format, result.force_array);
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out_path << "'\n";
            return kExitInvalid;
        }
        write_records(file, result.records, format, result.force_array);
    }
    return result.exit_code;
}

}  // namespace dcnet::cli

#endif  // DCNET_CLI_HPP
