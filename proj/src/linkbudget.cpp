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

#include "linkbudget.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "errors.hpp"

namespace hrnsim
{

bool is_two_phase(const SchemeConfig &cfg)
{
    return cfg.scheme != Scheme::Irs;
}

std::string scheme_label(const SchemeConfig &cfg)
{
    switch (cfg.scheme)
    {
    case Scheme::Relay:
        return "relay";
    case Scheme::Irs:
        return cfg.placement == IrsPlacement::NearRelay ? "irs_scenario1" : "irs_scenario2";
    case Scheme::Hybrid:
        return "hrn";
    }
    return "unknown";
}

std::string csi_label(const SchemeConfig &cfg)
{
    if (cfg.scheme == Scheme::Relay)
        return "none";
    return cfg.csi == CsiMode::Instantaneous ? "icsi" : "scsi";
}

void validate(const SystemParams &params)
{
    if (!(params.noise_w > 0.0))
        throw std::invalid_argument("Noise power must be positive.");
    if (!(params.bandwidth_hz > 0.0))
        throw std::invalid_argument("Bandwidth must be positive.");
    if (!(params.amplifier_efficiency > 0.0 && params.amplifier_efficiency <= 1.0))
        throw std::invalid_argument("Amplifier efficiency must lie in (0, 1].");
    if (params.p_source_w < 0.0 || params.p_relay_w < 0.0 || params.p_dest_w < 0.0 ||
        params.p_static_uc_w < 0.0 || params.p_dynamic_uc_w < 0.0)
        throw std::invalid_argument("Hardware powers must be non-negative.");
    if (!(params.mu >= 0.0 && params.mu <= 1.0))
        throw std::invalid_argument("Reflection amplitude must lie in [0, 1].");
}

void validate(const FrameParams &frame)
{
    if (frame.coherence_len <= 0)
        throw std::invalid_argument("Coherence interval must be positive.");
    if (frame.pilots_per_link < 1)
        throw std::invalid_argument("At least one pilot per link is required.");
    if (frame.guard < 0)
        throw std::invalid_argument("Guard time must be non-negative.");
}

double overhead_fraction(const SchemeConfig &cfg, const FrameParams &frame, std::int64_t m)
{
    validate(frame);
    if (m < 1)
        throw std::invalid_argument("UC count must be positive.");

    const double tau_c = static_cast<double>(frame.coherence_len);
    const std::int64_t l = frame.pilots_per_link;
    std::int64_t data_samples = 0;
    double denom = tau_c;

    switch (cfg.scheme)
    {
    case Scheme::Relay:
        data_samples = frame.coherence_len - l;
        denom = 2.0 * tau_c;
        break;
    case Scheme::Irs:
        if (cfg.csi == CsiMode::Instantaneous)
            data_samples = frame.coherence_len - l * m - frame.guard;
        else
            data_samples = frame.coherence_len - l;
        denom = tau_c;
        break;
    case Scheme::Hybrid:
        if (cfg.csi == CsiMode::Instantaneous)
            data_samples = frame.coherence_len - (l * m + l) - frame.guard;
        else
            data_samples = frame.coherence_len - l;
        denom = 2.0 * tau_c;
        break;
    }

    double eta = static_cast<double>(data_samples) / denom;
    if (eta <= 0.0)
        throw infeasible_frame("Pilot and guard overhead consumes the coherence interval for " +
                               scheme_label(cfg) + "/" + csi_label(cfg) + " at M = " +
                               std::to_string(m) + ".");
    return eta;
}

namespace
{

// Composite SNR-per-noise of a two-phase link under the equal-SNR split:
// 2 b1 b2 / (b1 + b2).
double harmonic_gain(double beta1, double beta2)
{
    if (beta1 <= 0.0 || beta2 <= 0.0)
        return 0.0;
    return 2.0 * beta1 * beta2 / (beta1 + beta2);
}

} // namespace

double achievable_rate(const SchemeConfig &cfg, double eta, const EffectiveGains &gains,
                       double p_watts, double noise_w)
{
    if (p_watts < 0.0)
        throw std::invalid_argument("Transmit power must be non-negative.");
    if (!(eta > 0.0))
        throw std::invalid_argument("Overhead fraction must be positive.");
    if (!(noise_w > 0.0))
        throw std::invalid_argument("Noise power must be positive.");

    double gain = is_two_phase(cfg) ? harmonic_gain(gains.beta1, gains.beta2.value_or(0.0))
                                    : gains.beta1;
    if (gain <= 0.0)
        return 0.0;
    return eta * std::log2(1.0 + p_watts * gain / noise_w);
}

double required_power(const SchemeConfig &cfg, double eta, const EffectiveGains &gains,
                      double rate_threshold, double noise_w)
{
    if (!(rate_threshold > 0.0))
        throw std::invalid_argument("Rate threshold must be positive.");
    if (!(eta > 0.0))
        throw std::invalid_argument("Overhead fraction must be positive.");
    if (!(noise_w > 0.0))
        throw std::invalid_argument("Noise power must be positive.");

    double gain = is_two_phase(cfg) ? harmonic_gain(gains.beta1, gains.beta2.value_or(0.0))
                                    : gains.beta1;
    if (gain <= 0.0)
        return std::numeric_limits<double>::infinity();
    return (std::exp2(rate_threshold / eta) - 1.0) * noise_w / gain;
}

PowerSplit power_split(double p_watts, double beta1, double beta2)
{
    if (p_watts < 0.0)
        throw std::invalid_argument("Transmit power must be non-negative.");
    if (!(beta1 > 0.0) || !(beta2 > 0.0))
        throw std::invalid_argument("Power split needs positive gains.");
    PowerSplit split;
    split.p1 = 2.0 * p_watts * beta2 / (beta1 + beta2);
    split.p2 = 2.0 * p_watts * beta1 / (beta1 + beta2);
    return split;
}

double total_power(const SchemeConfig &cfg, double p_tx_watts, std::int64_t m,
                   const SystemParams &sys)
{
    if (p_tx_watts < 0.0)
        throw std::invalid_argument("Transmit power must be non-negative.");
    validate(sys);

    const double amplifier = p_tx_watts / sys.amplifier_efficiency;
    const double m_count = static_cast<double>(m);
    const double p_dyn =
        (cfg.scheme != Scheme::Relay && cfg.csi == CsiMode::Statistical) ? 0.0
                                                                         : sys.p_dynamic_uc_w;

    switch (cfg.scheme)
    {
    case Scheme::Relay:
        return amplifier + 0.5 * sys.p_source_w + 0.5 * sys.p_dest_w + sys.p_relay_w;
    case Scheme::Irs:
        return amplifier + sys.p_source_w + sys.p_dest_w + m_count * (sys.p_static_uc_w + p_dyn);
    case Scheme::Hybrid:
        return amplifier + 0.5 * sys.p_source_w + 0.5 * sys.p_dest_w + sys.p_relay_w +
               m_count * (sys.p_static_uc_w + p_dyn);
    }
    throw std::invalid_argument("Unknown scheme.");
}

double energy_efficiency(double rate_threshold, double total_watts, double bandwidth_hz)
{
    if (!(total_watts > 0.0))
        throw std::invalid_argument("Total power must be positive.");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("Bandwidth must be positive.");
    if (rate_threshold < 0.0)
        throw std::invalid_argument("Rate threshold must be non-negative.");
    return rate_threshold * bandwidth_hz / total_watts;
}

} // namespace hrnsim
