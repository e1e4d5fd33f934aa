// Copyright 2026 The pwlab Authors
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

#include "pwlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "pwlab/error.hpp"
#include "pwlab/scenarios.hpp"

namespace pwlab {

namespace {

using ScenarioFn = Json (*)(const ScenarioParams &);

const std::map<std::string, ScenarioFn> &scenario_table() {
    static const std::map<std::string, ScenarioFn> table{
        {"two-qubit-demo", two_qubit_demo}, {"intertwine", intertwine_scenario}, {"trivialize", trivialize_scenario},
        {"retarget", retarget_scenario},    {"windowed", windowed_scenario},     {"spectra", spectra_scenario},
        {"records", records_scenario},      {"suite", suite_scenario},
    };
    return table;
}

void render(std::ostringstream &os, const Json &value, const std::string &prefix) {
    if (value.is_object()) {
        for (const auto &[key, child] : value.items()) render(os, child, prefix.empty() ? key : prefix + "." + key);
    } else if (value.is_array() && !value.empty() && (value.front().is_object() || value.front().is_array()) &&
               !(value.front().is_array() && value.front().size() == 2 && value.front().front().is_number())) {
        for (std::size_t i = 0; i < value.size(); ++i) render(os, value[i], prefix + "[" + std::to_string(i) + "]");
    } else {
        os << prefix << ": " << value.dump() << "\n";
    }
}

}  // namespace

Json run_scenario(const RunConfig &config) {
    const auto it = scenario_table().find(config.command);
    if (it == scenario_table().end()) throw Error(ErrorKind::InvalidArgument, "unknown command '" + config.command + "'");
    if (config.n < 1 || config.dim_r < 1 || config.trials < 1) {
        throw Error(ErrorKind::InvalidArgument, "n, dim-r and trials must be at least 1");
    }
    if (config.command == "windowed" && config.n < 2) throw Error(ErrorKind::InvalidArgument, "windowed needs --n >= 2");
    return it->second(ScenarioParams{config.n, config.dim_r, config.trials, config.seed});
}

std::string render_text(const Json &report) {
    std::ostringstream os;
    render(os, report, "");
    return os.str();
}

int run(const RunConfig &config, std::ostream &out, std::ostream &err) {
    Json report;
    try {
        report = run_scenario(config);
    } catch (const Error &e) {
        err << "pwlab: " << e.what() << "\n";
        return kExitConfig;
    }
    const std::string body = config.format == Format::json ? report.dump(2) + "\n" : render_text(report);
    if (config.output_path.empty()) {
        out << body;
    } else {
        std::ofstream file(config.output_path, std::ios::binary);
        if (!file) {
            err << "pwlab: cannot open " << config.output_path << "\n";
            return kExitConfig;
        }
        file << body;
    }
    return report.at("pass").get<bool>() ? kExitPass : kExitFail;
}

int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err) {
    CLI::App app{"Finite Page-Wootters clock-ambiguity laboratory", "pwlab"};
    RunConfig config;
    if (const char *env = std::getenv("PWLAB_SEED")) {
        try {
            config.seed = std::stoull(env);
        } catch (const std::exception &) {
            err << "pwlab: PWLAB_SEED must be a non-negative integer\n";
            return kExitConfig;
        }
    }
    std::vector<std::string> commands;
    for (const auto &[name, fn] : scenario_table()) commands.push_back(name);
    std::string format = "json";
    app.add_option("command", config.command, "Scenario to run")->required()->check(CLI::IsMember(commands));
    app.add_option("--n", config.n, "Clock ticks (window length for 'windowed')")->check(CLI::PositiveNumber);
    app.add_option("--dim-r", config.dim_r, "Rest-system dimension")->check(CLI::PositiveNumber);
    app.add_option("--trials", config.trials, "Seeded trials")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "Base seed (default: PWLAB_SEED or 0)");
    app.add_option("--out", config.output_path, "Write the report here instead of stdout");
    app.add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "text"}));
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        std::ostringstream msg, help;
        const int code = app.exit(e, help, msg);
        out << help.str();
        err << msg.str();
        return code == 0 ? kExitPass : kExitConfig;
    }
    config.format = format == "text" ? Format::text : Format::json;
    return run(config, out, err);
}

}  // namespace pwlab
