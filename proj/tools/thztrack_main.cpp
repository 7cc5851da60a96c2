// SPDX-License-Identifier: Apache-2.0
//
// thztrack - beam tracking and cooperative localization for THz pencil-beam links
// Copyright (C) 2026 thztrack contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>

#include "thztrack/scenario.hpp"
#include "thztrack/simulation.hpp"

namespace
{

struct CommonOptions
{
    std::string config;
    std::string seeds;
    std::string algorithms;
    std::string out = "results";
};

void add_scenario_flags(CLI::App *cmd, CommonOptions &opt)
{
    cmd->add_option("--config", opt.config, "scenario file (key = value lines); defaults apply");
    cmd->add_option("--seeds", opt.seeds, "seed list override, e.g. 1:100 or 3,7,9");
    cmd->add_option("--algorithms", opt.algorithms,
                    "comma list of fct, proposed-no-coop, proposed-coop");
}

thztrack::Scenario build_scenario(const CommonOptions &opt)
{
    thztrack::Scenario sc = thztrack::load_scenario(opt.config);
    if (!opt.seeds.empty())
        sc.seeds = thztrack::parse_seed_list(opt.seeds);
    if (!opt.algorithms.empty())
        sc.algorithms = thztrack::parse_algorithm_list(opt.algorithms);
    sc.validate();
    return sc;
}

std::string sanitize(const std::string &text)
{
    std::string out;
    for (const char c : text)
        out += (std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '-') ? c : '_';
    return out;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Monte-Carlo simulator for localization-aided pencil-beam tracking"};
    app.require_subcommand(1);

    CommonOptions run_opt;
    CLI::App *run = app.add_subcommand("run", "simulate one scenario and write records + summary");
    add_scenario_flags(run, run_opt);
    run->add_option("--out", run_opt.out, "output directory (records.csv, summary.txt)");

    CommonOptions val_opt;
    CLI::App *validate =
        app.add_subcommand("validate", "check a scenario file and print the effective settings");
    add_scenario_flags(validate, val_opt);

    CommonOptions sweep_opt;
    std::string sweep_key;
    std::string sweep_values;
    CLI::App *sweep =
        app.add_subcommand("sweep", "repeat a run while varying one configuration key");
    add_scenario_flags(sweep, sweep_opt);
    sweep->add_option("--out", sweep_opt.out, "output root; one subdirectory per value");
    sweep->add_option("--key", sweep_key, "configuration key to vary")->required();
    sweep->add_option("--values", sweep_values, "comma-separated values for the key")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        if (run->parsed())
        {
            const thztrack::Scenario sc = build_scenario(run_opt);
            const thztrack::RunResult result = thztrack::run_scenario(sc);
            thztrack::emit_results(result, run_opt.out);
            std::cout << thztrack::render_summary(result.summaries);
            std::cout << "wrote " << (std::filesystem::path(run_opt.out) / "records.csv").string()
                      << "\n";
            return 0;
        }
        if (validate->parsed())
        {
            const thztrack::Scenario sc = build_scenario(val_opt);
            std::cout << thztrack::describe(sc);
            return 0;
        }
        if (sweep->parsed())
        {
            std::stringstream ss(sweep_values);
            std::string value;
            bool ran = false;
            while (std::getline(ss, value, ','))
            {
                if (value.empty())
                    continue;
                thztrack::Scenario sc = build_scenario(sweep_opt);
                thztrack::apply_override(sc, sweep_key, value);
                sc.validate();
                const thztrack::RunResult result = thztrack::run_scenario(sc);
                const std::string dir = (std::filesystem::path(sweep_opt.out) /
                                         (sanitize(sweep_key) + "=" + sanitize(value)))
                                            .string();
                thztrack::emit_results(result, dir);
                std::cout << "=== " << sweep_key << " = " << value << " ===\n";
                std::cout << thztrack::render_summary(result.summaries);
                ran = true;
            }
            if (!ran)
                throw thztrack::ConfigError("sweep: no values given");
            return 0;
        }
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
