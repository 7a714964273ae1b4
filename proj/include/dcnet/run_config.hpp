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

#ifndef DCNET_RUN_CONFIG_HPP
#define DCNET_RUN_CONFIG_HPP

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dcnet/common.hpp"
#include "dcnet/logistics.hpp"
#include "dcnet/pipeline_qldpc.hpp"
#include "dcnet/qec_models.hpp"
#include "dcnet/solvers.hpp"

namespace dcnet {

enum class OutputFormat { Csv, Json };

enum class SweepFigure {
    RateVsPatch,        // R_tot vs n_m, one curve per T_3
    TransportVsPatch,   // max T_3 vs n_m, one curve per target
    TrucksVsTarget,     // trucks vs target R_tot at fixed T_3
    FamilyComparison,   // qLDPC vs surface trucks vs target
};

struct SweepSpec {
    SweepFigure figure = SweepFigure::RateVsPatch;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<int> points;  // unset: figure default
    std::vector<double> curves;  // empty: figure defaults
};

/// Fully resolved inputs for one CLI invocation.
struct RunConfig {
    PhysicalParams physical = PhysicalParams::reference_defaults();
    CodeFamily code = CodeFamily::Qldpc;
    double memory_qubits = 60'000;
    std::optional<double> surface_qubits;  // solved from the target when unset
    double transport_time = 5'400;
    NetworkParams network;
    std::optional<double> target;
    std::optional<Bracket> bracket;
    std::optional<OutputFormat> format;
    std::string out_path;  // empty: standard output
    std::uint64_t seed = 1;
    std::uint64_t trials = 1'000'000;
    std::string stages;  // "cycles:rate,..." for validate; empty uses the pipeline
    SweepSpec sweep;

    bool memory_qubits_set = false;
    bool gate_error_set = false;
    bool target_set = false;

    static constexpr double kDefaultTarget = 0.08;

    double target_or_default() const { return target.value_or(kDefaultTarget); }

    void validate() const {
        physical.validate();
        network.validate();
        detail::require_finite(memory_qubits, "n_m");
        detail::require(memory_qubits >= 25, "n_m must be >= 25");
        if (surface_qubits) {
            detail::require_finite(*surface_qubits, "n_ms");
            detail::require(*surface_qubits >= 1, "n_ms must be >= 1");
        }
        detail::require_non_negative(transport_time, "t3");
        if (target) {
            detail::require_finite(*target, "target");
            detail::require(*target > 0 && *target < 1, "target must lie in (0, 1)");
        }
        if (bracket) {
            detail::require(bracket->lo > 0 && bracket->lo < bracket->hi,
                            "n-lo must be > 0 and < n-hi");
        }
        detail::require(trials >= 1, "trials must be >= 1");
    }
};

/// Command-line values; unset members leave the config untouched.
struct FlagOverrides {
    std::optional<std::string> code;
    std::optional<double> n_m;
    std::optional<double> n_ms;
    std::optional<double> t3;
    std::optional<double> pg;
    std::optional<std::string> idling;
    std::optional<double> re;
    std::optional<int> s;
    std::optional<double> truck_capacity;
    std::optional<double> rent;
    std::optional<double> maintenance;
    std::optional<std::string> format;
    std::optional<std::string> out;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<double> target;
    std::optional<double> n_lo;
    std::optional<double> n_hi;
    std::optional<std::string> figure;
    std::optional<double> from;
    std::optional<double> to;
    std::optional<int> points;
    std::optional<std::string> curves;
    std::optional<std::string> stages;
};

namespace detail {

inline CodeFamily parse_code(const std::string &s) {
    if (s == "qldpc") return CodeFamily::Qldpc;
    if (s == "surface") return CodeFamily::Surface;
    throw InvalidInput("code must be qldpc or surface, got '" + s + "'");
}

inline IdlingMode parse_idling(const std::string &s) {
    if (s == "fixed") return IdlingMode::Fixed;
    if (s == "per-patch") return IdlingMode::PerPatch;
    throw InvalidInput("idling must be fixed or per-patch, got '" + s + "'");
}

inline OutputFormat parse_format(const std::string &s) {
    if (s == "csv") return OutputFormat::Csv;
    if (s == "json") return OutputFormat::Json;
    throw InvalidInput("format must be csv or json, got '" + s + "'");
}

inline SweepFigure parse_figure(const std::string &s) {
    if (s == "rate-vs-patch" || s == "fig3") return SweepFigure::RateVsPatch;
    if (s == "transport-vs-patch" || s == "fig4") return SweepFigure::TransportVsPatch;
    if (s == "trucks-vs-target" || s == "fig5") return SweepFigure::TrucksVsTarget;
    if (s == "family-comparison" || s == "fig6") return SweepFigure::FamilyComparison;
    throw InvalidInput("unknown sweep figure '" + s + "'");
}

inline std::vector<double> parse_number_list(const std::string &s) {
    std::vector<double> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        double v = 0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception &) {
            throw InvalidInput("not a number: '" + item + "'");
        }
        if (used != item.size()) {
            throw InvalidInput("not a number: '" + item + "'");
        }
        out.push_back(v);
    }
    require(!out.empty(), "empty number list");
    return out;
}

inline double json_number(const nlohmann::json &v, const std::string &key) {
    require(v.is_number(), "config key '" + key + "' must be a number");
    return v.get<double>();
}

inline std::string json_string(const nlohmann::json &v, const std::string &key) {
    require(v.is_string(), "config key '" + key + "' must be a string");
    return v.get<std::string>();
}

inline std::int64_t json_integer(const nlohmann::json &v, const std::string &key) {
    require(v.is_number_integer(), "config key '" + key + "' must be an integer");
    return v.get<std::int64_t>();
}

inline std::uint64_t json_unsigned(const nlohmann::json &v, const std::string &key) {
    require(v.is_number_unsigned(), "config key '" + key + "' must be a non-negative integer");
    return v.get<std::uint64_t>();
}

}  // namespace detail

/// Applies a JSON config document with sections "physical", "network",
/// "economics" and "run". Unknown sections or keys are errors.
inline void apply_config_json(RunConfig &cfg, const nlohmann::json &doc) {
    using detail::json_integer;
    using detail::json_number;
    using detail::json_string;
    using detail::json_unsigned;
    using detail::require;

    require(doc.is_object(), "config must be a JSON object");
    for (const auto &[section, body] : doc.items()) {
        require(body.is_object(), "config section '" + section + "' must be an object");
        if (section == "physical") {
            for (const auto &[key, v] : body.items()) {
                const std::string name = section + "." + key;
                if (key == "transfer_time_us") {
                    cfg.physical.transfer_time = json_number(v, name) * 1e-6;
                } else if (key == "acceleration_um_per_us2") {
                    // 1 um/us^2 = 1e6 m/s^2
                    cfg.physical.acceleration = json_number(v, name) * 1e6;
                } else if (key == "spacing_um") {
                    cfg.physical.spacing = json_number(v, name) * 1e-6;
                } else if (key == "gate_time_us") {
                    cfg.physical.gate_time = json_number(v, name) * 1e-6;
                } else if (key == "coherence_time_s") {
                    cfg.physical.coherence_time = json_number(v, name);
                } else if (key == "gate_error") {
                    cfg.physical.gate_error = json_number(v, name);
                    cfg.gate_error_set = true;
                } else if (key == "idling") {
                    cfg.physical.idling = detail::parse_idling(json_string(v, name));
                } else {
                    throw InvalidInput("unknown config key '" + name + "'");
                }
            }
        } else if (section == "network") {
            for (const auto &[key, v] : body.items()) {
                const std::string name = section + "." + key;
                if (key == "code") {
                    cfg.code = detail::parse_code(json_string(v, name));
                } else if (key == "n_m") {
                    cfg.memory_qubits = json_number(v, name);
                    cfg.memory_qubits_set = true;
                } else if (key == "n_ms") {
                    cfg.surface_qubits = json_number(v, name);
                } else if (key == "t3") {
                    cfg.transport_time = json_number(v, name);
                } else if (key == "destinations") {
                    const std::int64_t s = json_integer(v, name);
                    require(s >= 1 && s <= 1'000'000, "network.destinations out of range");
                    cfg.network.destinations = static_cast<int>(s);
                } else if (key == "truck_capacity") {
                    cfg.network.truck_capacity_qubits = json_number(v, name);
                } else if (key == "bandwidth") {
                    cfg.network.bandwidth = json_number(v, name);
                } else {
                    throw InvalidInput("unknown config key '" + name + "'");
                }
            }
        } else if (section == "economics") {
            for (const auto &[key, v] : body.items()) {
                const std::string name = section + "." + key;
                if (key == "rent_per_hour") {
                    cfg.network.rent_per_hour = json_number(v, name);
                } else if (key == "maintenance_per_year") {
                    cfg.network.maintenance_per_year = json_number(v, name);
                } else {
                    throw InvalidInput("unknown config key '" + name + "'");
                }
            }
        } else if (section == "run") {
            for (const auto &[key, v] : body.items()) {
                const std::string name = section + "." + key;
                if (key == "target") {
                    cfg.target = json_number(v, name);
                    cfg.target_set = true;
                } else if (key == "format") {
                    cfg.format = detail::parse_format(json_string(v, name));
                } else if (key == "out") {
                    cfg.out_path = json_string(v, name);
                } else if (key == "seed") {
                    cfg.seed = json_unsigned(v, name);
                } else if (key == "trials") {
                    cfg.trials = json_unsigned(v, name);
                } else if (key == "stages") {
                    cfg.stages = json_string(v, name);
                } else if (key == "figure") {
                    cfg.sweep.figure = detail::parse_figure(json_string(v, name));
                } else if (key == "from") {
                    cfg.sweep.from = json_number(v, name);
                } else if (key == "to") {
                    cfg.sweep.to = json_number(v, name);
                } else if (key == "points") {
                    const std::int64_t n = json_integer(v, name);
                    require(n >= 0 && n <= 1'000'000, "run.points out of range");
                    cfg.sweep.points = static_cast<int>(n);
                } else if (key == "curves") {
                    require(v.is_array(), "config key 'run.curves' must be an array");
                    cfg.sweep.curves.clear();
                    for (const auto &c : v) {
                        cfg.sweep.curves.push_back(json_number(c, name));
                    }
                } else {
                    throw InvalidInput("unknown config key '" + name + "'");
                }
            }
        } else {
            throw InvalidInput("unknown config section '" + section + "'");
        }
    }
}

inline void apply_config_file(RunConfig &cfg, const std::string &path) {
    std::ifstream in(path);
    detail::require(static_cast<bool>(in), "cannot open config file '" + path + "'");
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error &e) {
        throw InvalidInput("config file '" + path + "' is not valid JSON: " + e.what());
    }
    apply_config_json(cfg, doc);
}

inline void apply_overrides(RunConfig &cfg, const FlagOverrides &f) {
    if (f.code) cfg.code = detail::parse_code(*f.code);
    if (f.n_m) {
        cfg.memory_qubits = *f.n_m;
        cfg.memory_qubits_set = true;
    }
    if (f.n_ms) cfg.surface_qubits = *f.n_ms;
    if (f.t3) cfg.transport_time = *f.t3;
    if (f.pg) {
        cfg.physical.gate_error = *f.pg;
        cfg.gate_error_set = true;
    }
    if (f.idling) cfg.physical.idling = detail::parse_idling(*f.idling);
    if (f.re) cfg.network.bandwidth = *f.re;
    if (f.s) cfg.network.destinations = *f.s;
    if (f.truck_capacity) cfg.network.truck_capacity_qubits = *f.truck_capacity;
    if (f.rent) cfg.network.rent_per_hour = *f.rent;
    if (f.maintenance) cfg.network.maintenance_per_year = *f.maintenance;
    if (f.format) cfg.format = detail::parse_format(*f.format);
    if (f.out) cfg.out_path = *f.out;
    if (f.seed) cfg.seed = *f.seed;
    if (f.trials) cfg.trials = *f.trials;
    if (f.target) {
        cfg.target = *f.target;
        cfg.target_set = true;
    }
    if (f.n_lo || f.n_hi) {
        Bracket b = cfg.bracket.value_or(cfg.code == CodeFamily::Qldpc ? kDefaultHgpBracket
                                                                        : kDefaultSurfaceBracket);
        if (f.n_lo) b.lo = *f.n_lo;
        if (f.n_hi) b.hi = *f.n_hi;
        cfg.bracket = b;
    }
    if (f.figure) cfg.sweep.figure = detail::parse_figure(*f.figure);
    if (f.from) cfg.sweep.from = *f.from;
    if (f.to) cfg.sweep.to = *f.to;
    if (f.points) cfg.sweep.points = *f.points;
    if (f.curves) cfg.sweep.curves = detail::parse_number_list(*f.curves);
    if (f.stages) cfg.stages = *f.stages;
}

/// Layers defaults, the optional config file, then flags, and validates.
inline RunConfig resolve_config(const std::optional<std::string> &config_path,
                                const FlagOverrides &flags) {
    RunConfig cfg;
    if (config_path) {
        apply_config_file(cfg, *config_path);
    }
    apply_overrides(cfg, flags);
    // Per-patch idling inflates the bare near-term gate error unless one was given.
    if (cfg.physical.idling == IdlingMode::PerPatch && !cfg.gate_error_set) {
        cfg.physical.gate_error = PhysicalParams::per_patch_defaults().gate_error;
    }
    cfg.validate();
    return cfg;
}

}  // namespace dcnet

#endif  // DCNET_RUN_CONFIG_HPP
