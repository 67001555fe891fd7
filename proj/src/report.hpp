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

#ifndef HRNSIM_REPORT_HPP
#define HRNSIM_REPORT_HPP

#include <string>

#include "montecarlo.hpp"

namespace hrnsim
{

// Stable CSV schema, one row per (scheme, sweep point):
//   scheme,csi,sweep_variable,sweep_value,mean_tx_power_W,mean_tx_power_dBm,
//   mean_total_power_W,ee_bits_per_joule,std_err_W,infeasible_count,
//   n_realizations,seed
// UTF-8, LF line endings, full-precision round-trippable floats. Byte output
// is deterministic for a fixed result.
std::string to_csv(const SweepResult &result);

// Writes to_csv() to `path`; throws io_error on failure.
void write_csv(const SweepResult &result, const std::string &path);

} // namespace hrnsim

#endif
