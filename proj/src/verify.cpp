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

#include "verify.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "channel.hpp"
#include "config.hpp"
#include "oracle.hpp"
#include "rbd.hpp"

namespace hrnsim
{

std::vector<VerifyCheck> run_verification(const VerifyOptions &options)
{
    if (options.trials < 1)
        throw std::invalid_argument("At least one phase trial is required.");
    if (options.draws < 1)
        throw std::invalid_argument("At least one Monte Carlo draw is required.");
    auto m_d = static_cast<std::int64_t>(std::llround(std::sqrt(double(options.m))));
    if (options.m < 1 || m_d * m_d != options.m)
        throw std::invalid_argument("M must be a perfect square.");

    const ExperimentConfig defaults = default_config();
    const double wavelength = defaults.wavelength();
    UcGrid grid = build_uc_grid(static_cast<std::size_t>(m_d),
                                defaults.spacing_wavelengths * wavelength,
                                defaults.irs_near_relay);
    NodeLayout layout{defaults.source, defaults.relay, defaults.destination,
                      defaults.irs_near_relay};
    LinkVariances vars = scenario_variances(layout, grid, defaults.pathloss);
    CorrelationMatrix R = build_correlation(grid, wavelength);
    Eigen::MatrixXd root = psd_sqrt(R);
    const double mu = defaults.mu;
    const std::size_t n = static_cast<std::size_t>(options.draws);

    std::vector<VerifyCheck> checks;

    // Statistical-design SNR: Monte Carlo mean of the surface-only gain vs
    // the trace formula, P/sigma^2 = 1.
    {
        Rng rng = substream(options.seed, 0);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; i++)
        {
            Eigen::VectorXcd h_si = sample_vector_channel(root, vars.rho_si, rng);
            Eigen::VectorXcd h_id = sample_vector_channel(root, vars.rho_id, rng);
            acc += gain_irs_scsi(h_id, h_si, mu);
        }
        double mc = acc / static_cast<double>(n);
        ReflectionConfig theta = make_reflection(mu, Eigen::VectorXd::Zero(options.m));
        double formula = ergodic_snr_irs(1.0, 1.0, vars.rho_id, vars.rho_si, R.entries, theta);
        VerifyCheck check;
        check.name = "trace_vs_mc_irs";
        check.measured = std::abs(mc - formula) / formula;
        check.bound = 0.02;
        check.passed = check.measured <= check.bound;
        checks.push_back(check);
    }

    // Same for the first hybrid hop, which adds an independent direct link.
    {
        Rng rng = substream(options.seed, 1);
        double acc = 0.0;
        for (std::size_t i = 0; i < n; i++)
        {
            cplx h_sr = sample_scalar_channel(vars.rho_sr, rng);
            Eigen::VectorXcd h_si = sample_vector_channel(root, vars.rho_si, rng);
            Eigen::VectorXcd h_ir = sample_vector_channel(root, vars.rho_ir, rng);
            acc += gain_hop_scsi(h_sr, h_ir, h_si, mu);
        }
        double mc = acc / static_cast<double>(n);
        ReflectionConfig theta = make_reflection(mu, Eigen::VectorXd::Zero(options.m));
        double formula = ergodic_snr_hrn_hop(1.0, 1.0, vars.rho_sr, vars.rho_ir, vars.rho_si,
                                             R.entries, theta);
        VerifyCheck check;
        check.name = "trace_vs_mc_hrn_hop";
        check.measured = std::abs(mc - formula) / formula;
        check.bound = 0.02;
        check.passed = check.measured <= check.bound;
        checks.push_back(check);
    }

    // No random phase configuration may beat the equal-phase trace value.
    {
        Rng rng = substream(options.seed, 2);
        double best = scsi_optimality_check(R.entries, mu,
                                            static_cast<std::size_t>(options.trials), rng);
        double optimum = mu * mu * (R.entries.array() * R.entries.array()).sum();
        VerifyCheck check;
        check.name = "scsi_phase_search";
        check.measured = (best - optimum) / optimum;
        check.bound = 1e-9;
        check.passed = check.measured <= check.bound;
        checks.push_back(check);
    }

    // Closed-form phase alignment vs exhaustive grids at tiny M; measured is
    // the worst grid advantage relative to the grid-resolution bound.
    {
        Rng rng = substream(options.seed, 3);
        const std::size_t grid_k = 16;
        double worst = -std::numeric_limits<double>::infinity();
        for (int m_small = 1; m_small <= 3; m_small++)
        {
            for (int rep = 0; rep < 100; rep++)
            {
                cplx direct = rng.complex_normal();
                Eigen::VectorXcd h_out(m_small), h_in(m_small);
                for (int i = 0; i < m_small; i++)
                {
                    h_out(i) = rng.complex_normal();
                    h_in(i) = rng.complex_normal();
                }
                double closed = gain_hop_icsi(direct, h_out, h_in, mu);
                double grid_best = brute_force_icsi(direct, h_out, h_in, mu, grid_k);
                double bound = icsi_grid_resolution_bound(direct, h_out, h_in, mu, grid_k);
                worst = std::max(worst, (grid_best - closed) / bound);
            }
        }
        VerifyCheck check;
        check.name = "icsi_brute_force";
        check.measured = worst;
        check.bound = 1.0;
        check.passed = check.measured <= check.bound;
        checks.push_back(check);
    }

    // Equal-SNR power split vs grid search over P1.
    {
        Rng rng = substream(options.seed, 4);
        double worst = -std::numeric_limits<double>::infinity();
        for (int rep = 0; rep < 100; rep++)
        {
            double beta1 = std::exp(4.0 * (rng.uniform() - 0.5));
            double beta2 = std::exp(4.0 * (rng.uniform() - 0.5));
            double p = 0.1 + 10.0 * rng.uniform();
            PowerSplitSearch search = power_split_oracle(beta1, beta2, p, 1000);
            double closed = 2.0 * p * beta1 * beta2 / (beta1 + beta2);
            worst = std::max(worst, (search.best_min_snr - closed) / search.resolution_bound);
        }
        VerifyCheck check;
        check.name = "power_split_grid";
        check.measured = worst;
        check.bound = 1.0;
        check.passed = check.measured <= check.bound;
        checks.push_back(check);
    }

    return checks;
}

} // namespace hrnsim
