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

#ifndef HRNSIM_MONTECARLO_HPP
#define HRNSIM_MONTECARLO_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "channel.hpp"
#include "geometry.hpp"
#include "linkbudget.hpp"

namespace hrnsim
{

enum class SweepAxis
{
    UcCount,      // sweep M (values must be perfect squares)
    RateThreshold // sweep R_th at fixed M = m_d^2
};

// Fully-resolved experiment description. Everything influencing the numbers
// lives here; the worker-thread count deliberately does not.
struct ExperimentConfig
{
    // geometry
    Vec3 source{0.0, 0.0, 0.0};
    Vec3 relay{100.0, 0.0, 0.0};
    Vec3 destination{200.0, 0.0, 0.0};
    Vec3 irs_near_relay{100.0, 2.0, 8.0};  // scenario 1 / hybrid placement
    Vec3 irs_near_source{0.0, 2.0, 8.0};   // scenario 2 placement
    std::int64_t m_d = 12;                 // fixed grid dimension for R_th sweeps
    double spacing_wavelengths = 0.125;

    // path loss
    PathLossModel pathloss;

    // system
    double carrier_freq_ghz = 1.9;
    double noise_dbm = -107.0;
    double bandwidth_hz = 10e6;
    double amplifier_efficiency = 0.5;
    double p_source_mw = 100.0;
    double p_relay_mw = 100.0;
    double p_dest_mw = 100.0;
    double p_static_uc_mw = 1.0;
    double p_dynamic_uc_mw = 5.0;
    double mu = 0.9;

    // frame
    std::int64_t tau_c = 10000;
    std::int64_t pilots_per_link = 1;
    std::int64_t guard = -1; // -1: auto rule tau_g = M (iCSI schemes only)

    // experiment
    std::vector<SchemeConfig> schemes;
    SweepAxis sweep = SweepAxis::UcCount;
    std::vector<std::int64_t> m_values{16, 36, 64, 100, 144, 196, 256};
    std::vector<double> rth_values;
    double rate_threshold = 3.0; // fixed R_th for M sweeps
    std::int64_t realizations = 10000;
    std::uint64_t master_seed = 1;

    double wavelength() const; // meters, from the carrier frequency
    SystemParams system_params() const;
    FrameParams frame_params(std::int64_t m) const; // resolves the guard rule
};

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b);

// Throws std::invalid_argument with a description of the first violated
// constraint.
void validate(const ExperimentConfig &config);

// Per-sweep-point evaluation context: the channel model plus everything a
// realization needs to be priced for every configured scheme.
struct EvalContext
{
    std::int64_t m = 0;
    double rate_threshold = 0.0;
    double mu = 0.0;
    SystemParams sys;
    std::vector<SchemeConfig> schemes;
    std::vector<double> eta;           // per scheme; <= 0 marks an infeasible frame
    double scale_si_scen2 = 1.0;       // sqrt(rho_si,2 / rho_si,1)
    double scale_id_scen2 = 1.0;       // sqrt(rho_id,2 / rho_id,1)
};

// Builds the context for one surface size. Frame-infeasible schemes get a
// non-positive eta instead of raising, so sweeps keep going.
EvalContext make_eval_context(const ExperimentConfig &config, std::int64_t m,
                              double rate_threshold);

// Prices one channel draw under every configured scheme. The same draw feeds
// all schemes, so comparisons are paired; scenario-2 surface channels are the
// scenario-1 vectors rescaled per link.
std::vector<PowerReport> evaluate_realization(const ChannelRealization &realization,
                                              const EvalContext &ctx);

// Aggregated outcome of one (scheme, sweep point) cell. Required power is
// averaged in the dB domain: mean_tx_power_dbm is the arithmetic mean of the
// per-draw dBm values, mean_tx_power_w its Watt equivalent, and the total
// power / EE columns are evaluated at that representative transmit power.
// std_err_w is the dBm standard error mapped to Watts at the mean.
struct SweepRow
{
    SchemeConfig scheme;
    std::string sweep_variable; // "M" or "R_th"
    double sweep_value = 0.0;
    double mean_tx_power_w = 0.0;
    double mean_tx_power_dbm = 0.0;
    double mean_total_power_w = 0.0;
    double ee_bits_per_joule = 0.0;
    double std_err_w = 0.0;
    std::int64_t infeasible_count = 0;
    std::int64_t n_realizations = 0;
    bool feasible = false; // false when every draw was infeasible
};

struct SweepResult
{
    std::vector<SweepRow> rows; // scheme-major, sweep values ascending
    std::uint64_t master_seed = 0;
};

// Basic linear-domain statistics of a sample set.
struct Summary
{
    double mean = 0.0;
    double std_err = 0.0; // sample stddev (n-1) / sqrt(n); 0 for n < 2
    std::int64_t n = 0;
};

Summary summarize(const std::vector<double> &samples);

double watts_to_dbm(double watts);
double dbm_to_watts(double dbm);

// Runs the configured sweep. Realization i derives its generator from
// (master_seed, i); results are bit-identical for a fixed config regardless
// of `threads` (0 = hardware concurrency).
SweepResult run_sweep(const ExperimentConfig &config, int threads = 0);

} // namespace hrnsim

#endif
