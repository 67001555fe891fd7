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

#ifndef HRNSIM_VERIFY_HPP
#define HRNSIM_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace hrnsim
{

struct VerifyOptions
{
    std::int64_t m = 64;          // UC count for the trace checks (perfect square)
    std::int64_t draws = 100000;  // Monte Carlo draws
    std::int64_t trials = 1000;   // random phase configs for the search checks
    std::uint64_t seed = 1;
};

// One check outcome; `measured` must not exceed `bound` to pass.
struct VerifyCheck
{
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool passed = false;
};

// Cross-checks the closed-form designs against the independent oracles at
// the default network geometry:
//  - ergodic-SNR trace formula vs Monte Carlo, surface link and hybrid hop
//  - random phase search never beating the equal-phase statistical design
//  - exhaustive phase grids at M in {1,2,3} vs the closed-form alignment
//  - power-split grid search vs the equal-SNR split
std::vector<VerifyCheck> run_verification(const VerifyOptions &options);

} // namespace hrnsim

#endif
