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

#ifndef HRNSIM_LINKBUDGET_HPP
#define HRNSIM_LINKBUDGET_HPP

#include <cstdint>
#include <optional>
#include <string>

namespace hrnsim
{

enum class Scheme
{
    Relay,
    Irs,
    Hybrid
};

enum class CsiMode
{
    Instantaneous,
    Statistical
};

// Surface placement for the surface-only scheme. The hybrid scheme always
// uses the near-relay placement.
enum class IrsPlacement
{
    NearRelay, // scenario 1
    NearSource // scenario 2
};

struct SchemeConfig
{
    Scheme scheme = Scheme::Relay;
    CsiMode csi = CsiMode::Instantaneous; // ignored by the relay scheme
    IrsPlacement placement = IrsPlacement::NearRelay;
};

// True for schemes whose two-phase operation halves the data time.
bool is_two_phase(const SchemeConfig &cfg);

std::string scheme_label(const SchemeConfig &cfg); // e.g. "irs_scenario2"
std::string csi_label(const SchemeConfig &cfg);    // "icsi", "scsi" or "none"

struct SystemParams
{
    double noise_w = 0.0;              // sigma^2, Watts
    double bandwidth_hz = 0.0;         // B
    double amplifier_efficiency = 1.0; // zeta in (0, 1]
    double p_source_w = 0.0;
    double p_relay_w = 0.0;
    double p_dest_w = 0.0;
    double p_static_uc_w = 0.0;  // per-UC, always drawn while powered
    double p_dynamic_uc_w = 0.0; // per-UC, drawn only when UCs are reconfigured
    double mu = 1.0;             // uniform reflection amplitude
};

void validate(const SystemParams &params);

struct FrameParams
{
    std::int64_t coherence_len = 0;  // tau_c, samples
    std::int64_t pilots_per_link = 1; // L
    std::int64_t guard = 0;           // tau_g, samples (iCSI schemes only)
};

void validate(const FrameParams &frame);

// Data fraction of the coherence interval after pilots, guard time, and the
// half-duplex split:
//   relay:     (tau_c - L) / (2 tau_c)
//   IRS  iCSI: (tau_c - L*M - tau_g) / tau_c
//   IRS  sCSI: (tau_c - L) / tau_c
//   HRN  iCSI: (tau_c - (L*M + L) - tau_g) / (2 tau_c)
//   HRN  sCSI: (tau_c - L) / (2 tau_c)
// Throws infeasible_frame when the overhead consumes the interval (eta <= 0).
double overhead_fraction(const SchemeConfig &cfg, const FrameParams &frame, std::int64_t m);

// Composite end-to-end power gains. Two-phase schemes carry one gain per
// hop; the surface-only scheme has a single gain.
struct EffectiveGains
{
    double beta1 = 0.0;
    std::optional<double> beta2;
};

// Spectral efficiency at transmit power p. Two-phase schemes assume the
// equal-SNR power split under the constraint P = (P1 + P2)/2.
double achievable_rate(const SchemeConfig &cfg, double eta, const EffectiveGains &gains,
                       double p_watts, double noise_w);

// Transmit power (constraint level) required to reach rate_threshold.
// Returns +infinity when a gain is zero (infeasible draw).
double required_power(const SchemeConfig &cfg, double eta, const EffectiveGains &gains,
                      double rate_threshold, double noise_w);

// Equal-SNR split of the two-phase constraint power: P1 = 2P b2/(b1+b2),
// P2 = 2P b1/(b1+b2). Diagnostic only.
struct PowerSplit
{
    double p1 = 0.0;
    double p2 = 0.0;
};
PowerSplit power_split(double p_watts, double beta1, double beta2);

// Network-wide consumed power at transmit power p_tx. Under the statistical
// design the per-UC dynamic term is zero (UCs are not reconfigured).
double total_power(const SchemeConfig &cfg, double p_tx_watts, std::int64_t m,
                   const SystemParams &sys);

// rate * bandwidth / total, bits per Joule.
double energy_efficiency(double rate_threshold, double total_watts, double bandwidth_hz);

// One scheme outcome for one channel draw (or one aggregated sweep point).
struct PowerReport
{
    double required_tx_w = 0.0;
    double total_w = 0.0;
    double energy_efficiency = 0.0; // bits/Joule
    double rate_threshold = 0.0;
    bool feasible = false;
};

} // namespace hrnsim

#endif
