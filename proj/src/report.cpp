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

#include "report.hpp"

#include <cstdio>
#include <fstream>

#include "errors.hpp"

namespace hrnsim
{

namespace
{

std::string fmt(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

std::string to_csv(const SweepResult &result)
{
    std::string out;
    out += "scheme,csi,sweep_variable,sweep_value,mean_tx_power_W,mean_tx_power_dBm,"
           "mean_total_power_W,ee_bits_per_joule,std_err_W,infeasible_count,"
           "n_realizations,seed\n";
    for (const SweepRow &row : result.rows)
    {
        out += scheme_label(row.scheme);
        out += ',';
        out += csi_label(row.scheme);
        out += ',';
        out += row.sweep_variable;
        out += ',';
        out += fmt(row.sweep_value);
        out += ',';
        out += fmt(row.mean_tx_power_w);
        out += ',';
        out += fmt(row.mean_tx_power_dbm);
        out += ',';
        out += fmt(row.mean_total_power_w);
        out += ',';
        out += fmt(row.ee_bits_per_joule);
        out += ',';
        out += fmt(row.std_err_w);
        out += ',';
        out += std::to_string(row.infeasible_count);
        out += ',';
        out += std::to_string(row.n_realizations);
        out += ',';
        out += std::to_string(result.master_seed);
        out += '\n';
    }
    return out;
}

void write_csv(const SweepResult &result, const std::string &path)
{
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file)
        throw io_error("Cannot open '" + path + "' for writing.");
    const std::string csv = to_csv(result);
    file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    if (!file)
        throw io_error("Failed writing CSV to '" + path + "'.");
}

} // namespace hrnsim
