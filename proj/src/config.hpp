// SPDX-License-Identifier: Apache-2.0
//
// hrnsim - link-level Monte Carlo simulator for relay, reflective-surface,
// and hybrid relaying networks
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

#ifndef HRNSIM_CONFIG_HPP
#define HRNSIM_CONFIG_HPP

#include <string>
#include <vector>

#include "montecarlo.hpp"

namespace hrnsim
{

// All default parameter values applied when a config key is omitted
// (including the full default scheme list and sweep grids).
ExperimentConfig default_config();

// Built-in experiment presets:
//   fig2a: tau_c = 1e4, R_th = 3, sweep M in {16 ... 256}
//   fig2b: as fig2a but tau_c = 1e3 (fast-changing environment)
//   fig2c: tau_c = 1e4, M = 144, sweep R_th in {1, 1.5, ..., 10}
// Throws std::invalid_argument for an unknown name.
ExperimentConfig preset_config(const std::string &name);
std::vector<std::string> preset_names();

// Parses sectioned key/value text onto `base`, overriding only the keys that
// appear. Unknown sections/keys, malformed values, and out-of-range values
// raise parse_error with the offending line number. The result is validated.
ExperimentConfig parse_config(const std::string &text, const ExperimentConfig &base);

// Reads and parses a config file (defaults as base unless given).
ExperimentConfig load_config(const std::string &path);
ExperimentConfig load_config(const std::string &path, const ExperimentConfig &base);

// Serializes every field of a resolved config; parsing the output yields an
// identical ExperimentConfig.
std::string serialize_config(const ExperimentConfig &config);

} // namespace hrnsim

#endif
