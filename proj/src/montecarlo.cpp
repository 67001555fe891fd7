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

#include "montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <thread>

#include "errors.hpp"
#include "rbd.hpp"
#include "rng.hpp"

namespace hrnsim
{

namespace
{
constexpr double kSpeedOfLight = 299792458.0; // m/s
}

double ExperimentConfig::wavelength() const
{
    return kSpeedOfLight / (carrier_freq_ghz * 1e9);
}

SystemParams ExperimentConfig::system_params() const
{
    SystemParams sys;
    sys.noise_w = dbm_to_watts(noise_dbm);
    sys.bandwidth_hz = bandwidth_hz;
    sys.amplifier_efficiency = amplifier_efficiency;
    sys.p_source_w = p_source_mw * 1e-3;
    sys.p_relay_w = p_relay_mw * 1e-3;
    sys.p_dest_w = p_dest_mw * 1e-3;
    sys.p_static_uc_w = p_static_uc_mw * 1e-3;
    sys.p_dynamic_uc_w = p_dynamic_uc_mw * 1e-3;
    sys.mu = mu;
    return sys;
}

FrameParams ExperimentConfig::frame_params(std::int64_t m) const
{
    FrameParams frame;
    frame.coherence_len = tau_c;
    frame.pilots_per_link = pilots_per_link;
    frame.guard = guard < 0 ? m : guard;
    return frame;
}

bool operator==(const ExperimentConfig &a, const ExperimentConfig &b)
{
    auto scheme_eq = [](const SchemeConfig &x, const SchemeConfig &y) {
        return x.scheme == y.scheme && x.csi == y.csi && x.placement == y.placement;
    };
    if (a.schemes.size() != b.schemes.size())
        return false;
    for (std::size_t i = 0; i < a.schemes.size(); i++)
        if (!scheme_eq(a.schemes[i], b.schemes[i]))
            return false;
    return a.source == b.source && a.relay == b.relay && a.destination == b.destination &&
           a.irs_near_relay == b.irs_near_relay && a.irs_near_source == b.irs_near_source &&
           a.m_d == b.m_d && a.spacing_wavelengths == b.spacing_wavelengths &&
           a.pathloss.reference_distance == b.pathloss.reference_distance &&
           a.pathloss.offset_db == b.pathloss.offset_db &&
           a.pathloss.alpha_irs == b.pathloss.alpha_irs &&
           a.pathloss.alpha_relay == b.pathloss.alpha_relay &&
           a.carrier_freq_ghz == b.carrier_freq_ghz && a.noise_dbm == b.noise_dbm &&
           a.bandwidth_hz == b.bandwidth_hz &&
           a.amplifier_efficiency == b.amplifier_efficiency &&
           a.p_source_mw == b.p_source_mw && a.p_relay_mw == b.p_relay_mw &&
           a.p_dest_mw == b.p_dest_mw && a.p_static_uc_mw == b.p_static_uc_mw &&
           a.p_dynamic_uc_mw == b.p_dynamic_uc_mw && a.mu == b.mu && a.tau_c == b.tau_c &&
           a.pilots_per_link == b.pilots_per_link && a.guard == b.guard &&
           a.sweep == b.sweep && a.m_values == b.m_values && a.rth_values == b.rth_values &&
           a.rate_threshold == b.rate_threshold && a.realizations == b.realizations &&
           a.master_seed == b.master_seed;
}

namespace
{

bool is_perfect_square(std::int64_t m)
{
    if (m < 1)
        return false;
    auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(m))));
    return root * root == m;
}

} // namespace

void validate(const ExperimentConfig &config)
{
    NodeLayout layout{config.source, config.relay, config.destination, config.irs_near_relay};
    validate(layout);
    NodeLayout layout2{config.source, config.relay, config.destination, config.irs_near_source};
    validate(layout2);
    validate(config.pathloss);
    if (config.m_d < 1)
        throw std::invalid_argument("m_d must be at least 1.");
    if (!(config.spacing_wavelengths > 0.0))
        throw std::invalid_argument("UC spacing must be positive.");
    if (!(config.carrier_freq_ghz > 0.0))
        throw std::invalid_argument("Carrier frequency must be positive.");
    validate(config.system_params());
    validate(config.frame_params(1));
    if (config.schemes.empty())
        throw std::invalid_argument("At least one scheme must be configured.");
    if (config.realizations < 1)
        throw std::invalid_argument("At least one realization is required.");
    if (!(config.rate_threshold > 0.0))
        throw std::invalid_argument("Rate threshold must be positive.");

    if (config.sweep == SweepAxis::UcCount)
    {
        if (config.m_values.empty())
            throw std::invalid_argument("M sweep needs at least one value.");
        for (std::size_t i = 0; i < config.m_values.size(); i++)
        {
            if (!is_perfect_square(config.m_values[i]))
                throw std::invalid_argument("M value " + std::to_string(config.m_values[i]) +
                                            " is not a perfect square.");
            if (i > 0 && config.m_values[i] <= config.m_values[i - 1])
                throw std::invalid_argument("M values must be strictly increasing.");
        }
    }
    else
    {
        if (config.rth_values.empty())
            throw std::invalid_argument("R_th sweep needs at least one value.");
        for (std::size_t i = 0; i < config.rth_values.size(); i++)
        {
            if (!(config.rth_values[i] > 0.0))
                throw std::invalid_argument("R_th values must be positive.");
            if (i > 0 && config.rth_values[i] <= config.rth_values[i - 1])
                throw std::invalid_argument("R_th values must be strictly increasing.");
        }
    }
}

EvalContext make_eval_context(const ExperimentConfig &config, std::int64_t m,
                              double rate_threshold)
{
    EvalContext ctx;
    ctx.m = m;
    ctx.rate_threshold = rate_threshold;
    ctx.mu = config.mu;
    ctx.sys = config.system_params();
    ctx.schemes = config.schemes;

    const FrameParams frame = config.frame_params(m);
    ctx.eta.resize(ctx.schemes.size(), 0.0);
    for (std::size_t s = 0; s < ctx.schemes.size(); s++)
    {
        try
        {
            ctx.eta[s] = overhead_fraction(ctx.schemes[s], frame, m);
        }
        catch (const infeasible_frame &)
        {
            ctx.eta[s] = 0.0; // flagged, not fatal: the whole cell is infeasible
        }
    }

    // Scenario-2 surface channels are the scenario-1 draws rescaled per link.
    const auto grid_dim = static_cast<std::size_t>(std::llround(std::sqrt(double(m))));
    const double spacing = config.spacing_wavelengths * config.wavelength();
    UcGrid grid = build_uc_grid(grid_dim, spacing, config.irs_near_relay);
    NodeLayout layout1{config.source, config.relay, config.destination, config.irs_near_relay};
    NodeLayout layout2{config.source, config.relay, config.destination, config.irs_near_source};
    LinkVariances v1 = scenario_variances(layout1, grid, config.pathloss);
    LinkVariances v2 = scenario_variances(layout2, grid, config.pathloss);
    ctx.scale_si_scen2 = std::sqrt(v2.rho_si / v1.rho_si);
    ctx.scale_id_scen2 = std::sqrt(v2.rho_id / v1.rho_id);
    return ctx;
}

namespace
{

PowerReport price_scheme(const SchemeConfig &scheme, double eta, const EffectiveGains &gains,
                         const EvalContext &ctx)
{
    PowerReport report;
    report.rate_threshold = ctx.rate_threshold;
    if (!(eta > 0.0))
        return report; // frame infeasible

    double p = required_power(scheme, eta, gains, ctx.rate_threshold, ctx.sys.noise_w);
    if (!std::isfinite(p))
        return report; // zero-gain draw
    report.required_tx_w = p;
    report.total_w = total_power(scheme, p, ctx.m, ctx.sys);
    report.energy_efficiency =
        energy_efficiency(ctx.rate_threshold, report.total_w, ctx.sys.bandwidth_hz);
    report.feasible = true;
    return report;
}

} // namespace

std::vector<PowerReport> evaluate_realization(const ChannelRealization &realization,
                                              const EvalContext &ctx)
{
    if (realization.h_si.size() != static_cast<Eigen::Index>(ctx.m))
        throw std::invalid_argument("Realization dimension does not match the context.");

    std::vector<PowerReport> reports(ctx.schemes.size());
    for (std::size_t s = 0; s < ctx.schemes.size(); s++)
    {
        const SchemeConfig &scheme = ctx.schemes[s];
        EffectiveGains gains;
        switch (scheme.scheme)
        {
        case Scheme::Relay:
            gains.beta1 = std::norm(realization.h_sr);
            gains.beta2 = std::norm(realization.h_rd);
            break;
        case Scheme::Irs:
        {
            Eigen::VectorXcd h_si = realization.h_si;
            Eigen::VectorXcd h_id = realization.h_id;
            if (scheme.placement == IrsPlacement::NearSource)
            {
                h_si *= ctx.scale_si_scen2;
                h_id *= ctx.scale_id_scen2;
            }
            gains.beta1 = scheme.csi == CsiMode::Instantaneous
                              ? gain_irs_icsi(h_id, h_si, ctx.mu)
                              : gain_irs_scsi(h_id, h_si, ctx.mu);
            break;
        }
        case Scheme::Hybrid:
            if (scheme.csi == CsiMode::Instantaneous)
            {
                gains.beta1 = gain_hop_icsi(realization.h_sr, realization.h_ir,
                                            realization.h_si, ctx.mu);
                gains.beta2 = gain_hop_icsi(realization.h_rd, realization.h_id,
                                            realization.h_ri, ctx.mu);
            }
            else
            {
                gains.beta1 = gain_hop_scsi(realization.h_sr, realization.h_ir,
                                            realization.h_si, ctx.mu);
                gains.beta2 = gain_hop_scsi(realization.h_rd, realization.h_id,
                                            realization.h_ri, ctx.mu);
            }
            break;
        }
        reports[s] = price_scheme(scheme, ctx.eta[s], gains, ctx);
    }
    return reports;
}

Summary summarize(const std::vector<double> &samples)
{
    Summary summary;
    summary.n = static_cast<std::int64_t>(samples.size());
    if (samples.empty())
        return summary;
    double sum = 0.0;
    for (double x : samples)
        sum += x;
    summary.mean = sum / static_cast<double>(samples.size());
    if (samples.size() > 1)
    {
        double sq = 0.0;
        for (double x : samples)
            sq += (x - summary.mean) * (x - summary.mean);
        double var = sq / static_cast<double>(samples.size() - 1);
        summary.std_err = std::sqrt(var / static_cast<double>(samples.size()));
    }
    return summary;
}

double watts_to_dbm(double watts)
{
    return 10.0 * std::log10(watts * 1000.0);
}

double dbm_to_watts(double dbm)
{
    return std::pow(10.0, (dbm - 30.0) / 10.0);
}

namespace
{

// Runs fn(i) for i in [0, n) on `threads` workers over contiguous chunks.
// Output written under distinct indices stays race-free and order-free.
void parallel_for(std::int64_t n, int threads, const std::function<void(std::int64_t)> &fn)
{
    int t = threads > 0 ? threads : static_cast<int>(std::thread::hardware_concurrency());
    if (t < 1)
        t = 1;
    t = static_cast<int>(std::min<std::int64_t>(t, n));
    if (t <= 1)
    {
        for (std::int64_t i = 0; i < n; i++)
            fn(i);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(t));
    for (int w = 0; w < t; w++)
    {
        std::int64_t begin = n * w / t;
        std::int64_t end = n * (w + 1) / t;
        workers.emplace_back([begin, end, &fn]() {
            for (std::int64_t i = begin; i < end; i++)
                fn(i);
        });
    }
    for (auto &worker : workers)
        worker.join();
}

struct SweepPoint
{
    std::int64_t m = 0;
    double rate_threshold = 0.0;
    double value = 0.0; // the swept coordinate
};

} // namespace

SweepResult run_sweep(const ExperimentConfig &config, int threads)
{
    validate(config);

    std::vector<SweepPoint> points;
    if (config.sweep == SweepAxis::UcCount)
    {
        for (std::int64_t m : config.m_values)
            points.push_back({m, config.rate_threshold, static_cast<double>(m)});
    }
    else
    {
        const std::int64_t m = config.m_d * config.m_d;
        for (double rth : config.rth_values)
            points.push_back({m, rth, rth});
    }
    const std::string sweep_variable = config.sweep == SweepAxis::UcCount ? "M" : "R_th";

    const std::int64_t n = config.realizations;
    const std::size_t n_schemes = config.schemes.size();
    const std::size_t n_points = points.size();

    // Required transmit power per (point, realization, scheme); NaN marks an
    // infeasible draw. Point-major, then realization, then scheme.
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> tx_power(n_points * static_cast<std::size_t>(n) * n_schemes, nan);

    // The channel draw depends only on (seed, realization index, M), so all
    // R_th sweep points share one pass over the realizations.
    std::int64_t last_m = -1;
    ChannelModel model;
    std::vector<EvalContext> contexts(n_points);
    std::vector<std::size_t> draw_groups; // first point index per distinct M

    for (std::size_t p = 0; p < n_points; p++)
    {
        contexts[p] = make_eval_context(config, points[p].m, points[p].rate_threshold);
        if (points[p].m != last_m)
        {
            draw_groups.push_back(p);
            last_m = points[p].m;
        }
    }

    for (std::size_t g = 0; g < draw_groups.size(); g++)
    {
        const std::size_t first = draw_groups[g];
        const std::size_t next =
            (g + 1 < draw_groups.size()) ? draw_groups[g + 1] : n_points;
        const std::int64_t m = points[first].m;

        const auto grid_dim = static_cast<std::size_t>(std::llround(std::sqrt(double(m))));
        const double spacing = config.spacing_wavelengths * config.wavelength();
        UcGrid grid = build_uc_grid(grid_dim, spacing, config.irs_near_relay);
        NodeLayout layout{config.source, config.relay, config.destination,
                          config.irs_near_relay};
        model = make_channel_model(grid, config.wavelength(),
                                   scenario_variances(layout, grid, config.pathloss));

        parallel_for(n, threads, [&](std::int64_t i) {
            Rng rng = substream(config.master_seed, static_cast<std::uint64_t>(i));
            ChannelRealization realization = draw_realization(model, rng);
            for (std::size_t p = first; p < next; p++)
            {
                std::vector<PowerReport> row = evaluate_realization(realization, contexts[p]);
                std::size_t base =
                    (p * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) * n_schemes;
                for (std::size_t s = 0; s < n_schemes; s++)
                    if (row[s].feasible)
                        tx_power[base + s] = row[s].required_tx_w;
            }
        });
    }

    // Fixed-order reduction by realization index, scheme-major output.
    SweepResult result;
    result.master_seed = config.master_seed;
    result.rows.reserve(n_schemes * n_points);
    for (std::size_t s = 0; s < n_schemes; s++)
    {
        for (std::size_t p = 0; p < n_points; p++)
        {
            SweepRow row;
            row.scheme = config.schemes[s];
            row.sweep_variable = sweep_variable;
            row.sweep_value = points[p].value;
            row.n_realizations = n;

            std::vector<double> dbm_samples;
            dbm_samples.reserve(static_cast<std::size_t>(n));
            for (std::int64_t i = 0; i < n; i++)
            {
                double p_tx =
                    tx_power[(p * static_cast<std::size_t>(n) + static_cast<std::size_t>(i)) *
                                 n_schemes +
                             s];
                if (std::isnan(p_tx))
                    row.infeasible_count++;
                else
                    dbm_samples.push_back(watts_to_dbm(p_tx));
            }

            if (!dbm_samples.empty())
            {
                Summary stats = summarize(dbm_samples);
                row.mean_tx_power_dbm = stats.mean;
                row.mean_tx_power_w = dbm_to_watts(stats.mean);
                // delta method: dP/P = ln(10)/10 * dP_dB
                row.std_err_w = row.mean_tx_power_w * (std::log(10.0) / 10.0) * stats.std_err;
                row.mean_total_power_w = total_power(row.scheme, row.mean_tx_power_w,
                                                     points[p].m, contexts[p].sys);
                row.ee_bits_per_joule = energy_efficiency(
                    points[p].rate_threshold, row.mean_total_power_w, contexts[p].sys.bandwidth_hz);
                row.feasible = true;
            }
            else
            {
                row.mean_tx_power_dbm = nan;
                row.mean_tx_power_w = nan;
                row.std_err_w = nan;
                row.mean_total_power_w = nan;
                row.ee_bits_per_joule = nan;
            }
            result.rows.push_back(std::move(row));
        }
    }
    return result;
}

} // namespace hrnsim
