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

#ifndef PWLAB_CLI_HPP
#define PWLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "pwlab/json_io.hpp"

namespace pwlab {

enum class Format { json, text };

struct RunConfig {
    std::string command;
    int n = 4;
    int dim_r = 3;
    int trials = 10;
    std::uint64_t seed = 0;
    /// Empty means stdout.
    std::string output_path;
    Format format = Format::json;
};

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitConfig = 2;

/// Executes one scenario and returns its report; throws Error on bad config.
Json run_scenario(const RunConfig &config);

/// Indented "key: value" rendering of a report.
std::string render_text(const Json &report);

/// Runs the scenario, writes the report to config.output_path (or `out`) and
/// returns 0 iff every embedded check passed, 1 on a failed check, 2 on a
/// configuration error.
int run(const RunConfig &config, std::ostream &out, std::ostream &err);

/// Parses `pwlab <command> [--n N] [--dim-r D] [--trials T] [--seed S]
/// [--out PATH] [--format json|text]`; PWLAB_SEED supplies the default seed.
int run_cli(int argc, char **argv, std::ostream &out, std::ostream &err);

}  // namespace pwlab

#endif  // PWLAB_CLI_HPP
