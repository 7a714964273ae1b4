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

// dcnet: resource estimates for delayed-choice sneakernet networks.
//
//   dcnet estimate --code qldpc --n-m 60000 --t3 5400
//   dcnet compare
//   dcnet sweep --figure fig3 --out fig3.csv

#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "dcnet/cli.hpp"
#include "dcnet/run_config.hpp"

namespace {

void add_shared_flags(CLI::App &app, dcnet::FlagOverrides &f,
                      std::optional<std::string> &config_path) {
    app.add_option("--config", config_path, "JSON config file; flags override it");
    app.add_option("--code", f.code, "Code family")->check(CLI::IsMember({"qldpc", "surface"}));
    app.add_option("--n-m", f.n_m, "qLDPC memory patch size, physical qubits");
    app.add_option("--n-ms", f.n_ms, "Surface patch size, physical qubits");
    app.add_option("--t3", f.t3, "One-way transport time, seconds");
    app.add_option("--pg", f.pg, "Two-qubit gate error");
    app.add_option("--idling", f.idling, "Gate-error idling model")
        ->check(CLI::IsMember({"fixed", "per-patch"}));
    app.add_option("--re", f.re, "Target E-bit rate per destination, bits/s");
    app.add_option("--s", f.s, "Number of qATM destinations");
    app.add_option("--truck-capacity", f.truck_capacity, "Physical qubits per vehicle");
    app.add_option("--rent", f.rent, "Vehicle rent, USD per hour");
    app.add_option("--maintenance", f.maintenance, "Maintenance per memory device, USD per year");
    app.add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--out", f.out, "Output path (default: standard output)");
    app.add_option("--seed", f.seed, "Monte-Carlo seed");
    app.add_option("--trials", f.trials, "Monte-Carlo trials");
    app.add_option("--target", f.target, "Target total logical failure rate (default 0.08)");
    app.add_option("--n-lo", f.n_lo, "Patch-size search lower bound");
    app.add_option("--n-hi", f.n_hi, "Patch-size search upper bound");
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Resource estimator for delayed-choice entanglement-swapping sneakernets"};
    app.require_subcommand(1);

    dcnet::FlagOverrides flags;
    std::optional<std::string> config_path;

    const std::vector<std::pair<dcnet::cli::Command, std::pair<const char *, const char *>>>
        commands = {
            {dcnet::cli::Command::Estimate, {"estimate", "Evaluate every protocol stage"}},
            {dcnet::cli::Command::Sweep, {"sweep", "Emit figure data as CSV"}},
            {dcnet::cli::Command::SolveT3, {"solve-t3", "Longest transport time for a target"}},
            {dcnet::cli::Command::SolveNm, {"solve-nm", "Smallest patch for a target"}},
            {dcnet::cli::Command::Fleet, {"fleet", "Vehicle count and cost per bit"}},
            {dcnet::cli::Command::Compare, {"compare", "qLDPC vs surface-code network"}},
            {dcnet::cli::Command::Validate, {"validate", "Check additive error propagation"}},
        };

    std::optional<dcnet::cli::Command> chosen;
    for (const auto &[command, names] : commands) {
        CLI::App *sub = app.add_subcommand(names.first, names.second);
        add_shared_flags(*sub, flags, config_path);
        if (command == dcnet::cli::Command::Sweep) {
            sub->add_option("--figure", flags.figure,
                            "fig3 (rate-vs-patch), fig4 (transport-vs-patch), "
                            "fig5 (trucks-vs-target), fig6 (family-comparison)");
            sub->add_option("--from", flags.from, "Swept variable start");
            sub->add_option("--to", flags.to, "Swept variable end");
            sub->add_option("--points", flags.points, "Grid points");
            sub->add_option("--curves", flags.curves, "Comma-separated curve values");
        }
        if (command == dcnet::cli::Command::Validate) {
            sub->add_option("--stages", flags.stages, "Custom spec: cycles:rate,...");
        }
        sub->callback([&chosen, command = command] { chosen = command; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return dcnet::cli::kExitInvalid;
    }

    dcnet::RunConfig cfg;
    try {
        cfg = dcnet::resolve_config(config_path, flags);
    } catch (const dcnet::InvalidInput &e) {
        std::cerr << "error: " << e.what() << '\n';
        return dcnet::cli::kExitInvalid;
    }
    return dcnet::cli::run(*chosen, cfg, std::cout, std::cerr);
}
