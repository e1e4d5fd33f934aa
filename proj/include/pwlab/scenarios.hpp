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

#ifndef PWLAB_SCENARIOS_HPP
#define PWLAB_SCENARIOS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "pwlab/json_io.hpp"

namespace pwlab {

struct ScenarioParams {
    int n = 4;
    int dim_r = 3;
    int trials = 10;
    std::uint64_t seed = 0;
};

/// Every scenario returns a report of the form
/// {"op", "seed", "params", "residuals", "spectra", "pass", "data"}.
Json two_qubit_demo(const ScenarioParams &p);
Json intertwine_scenario(const ScenarioParams &p);
Json trivialize_scenario(const ScenarioParams &p);
Json retarget_scenario(const ScenarioParams &p);
Json windowed_scenario(const ScenarioParams &p);
Json spectra_scenario(const ScenarioParams &p);
Json records_scenario(const ScenarioParams &p);

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    /// Wall-clock time; kept out of JSON so reports stay byte-identical.
    double seconds = 0.0;
    Json details;
};

/// The ten end-to-end acceptance checks, in order.
std::vector<CriterionResult> run_acceptance_criteria(std::uint64_t seed);

/// Report wrapping run_acceptance_criteria; pass is the conjunction.
Json suite_scenario(const ScenarioParams &p);

}  // namespace pwlab

#endif  // PWLAB_SCENARIOS_HPP
