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

#include "oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "errors.hpp"

namespace hrnsim
{

double reflected_trace(const Eigen::MatrixXd &R, const ReflectionConfig &theta)
{
    const Eigen::Index m = R.rows();
    if (R.cols() != m)
        throw std::invalid_argument("Correlation matrix must be square.");
    if (theta.size() != m)
        throw std::invalid_argument("Reflection config does not match the matrix size.");

    // tr(R Theta R Theta^H) = sum_{n,k} R_nk^2 c_k conj(c_n) for diagonal
    // Theta with entries c_m.
    Eigen::VectorXcd c(m);
    for (Eigen::Index i = 0; i < m; i++)
        c(i) = theta.amplitudes(i) * std::polar(1.0, theta.phases(i));

    std::complex<double> trace = 0.0;
    for (Eigen::Index n = 0; n < m; n++)
    {
        std::complex<double> row = 0.0;
        for (Eigen::Index k = 0; k < m; k++)
            row += R(n, k) * R(n, k) * c(k);
        trace += row * std::conj(c(n));
    }

    if (std::abs(trace.imag()) > 1e-9 * std::max(1.0, std::abs(trace.real())))
        throw model_error("Reflected trace has a non-negligible imaginary part.");
    return trace.real();
}

double ergodic_snr_irs(double p_watts, double noise_w, double rho_id, double rho_si,
                       const Eigen::MatrixXd &R, const ReflectionConfig &theta)
{
    if (!(noise_w > 0.0))
        throw std::invalid_argument("Noise power must be positive.");
    if (p_watts < 0.0 || rho_id < 0.0 || rho_si < 0.0)
        throw std::invalid_argument("Powers and variances must be non-negative.");
    return (p_watts / noise_w) * rho_id * rho_si * reflected_trace(R, theta);
}

double ergodic_snr_hrn_hop(double p_watts, double noise_w, double rho_direct, double rho_out,
                           double rho_in, const Eigen::MatrixXd &R, const ReflectionConfig &theta)
{
    if (!(noise_w > 0.0))
        throw std::invalid_argument("Noise power must be positive.");
    if (p_watts < 0.0 || rho_direct < 0.0 || rho_out < 0.0 || rho_in < 0.0)
        throw std::invalid_argument("Powers and variances must be non-negative.");
    return (p_watts / noise_w) * (rho_direct + rho_out * rho_in * reflected_trace(R, theta));
}

double scsi_optimality_check(const Eigen::MatrixXd &R, double mu, std::size_t trials, Rng &rng)
{
    if (trials < 1)
        throw std::invalid_argument("At least one trial is required.");
    const Eigen::Index m = R.rows();
    double best = -std::numeric_limits<double>::infinity();
    Eigen::VectorXd phases(m);
    for (std::size_t t = 0; t < trials; t++)
    {
        for (Eigen::Index i = 0; i < m; i++)
            phases(i) = 2.0 * M_PI * rng.uniform();
        best = std::max(best, reflected_trace(R, make_reflection(mu, phases)));
    }
    return best;
}

namespace
{

void check_brute_force_guards(Eigen::Index m, std::size_t k)
{
    if (m < 1 || m > 4)
        throw std::invalid_argument("Exhaustive phase search is limited to M <= 4.");
    if (k < 1 || k > 16)
        throw std::invalid_argument("Exhaustive phase search is limited to K <= 16.");
}

} // namespace

double brute_force_icsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                        const Eigen::VectorXcd &h_in, double mu, std::size_t phase_grid_size)
{
    if (h_out.size() != h_in.size())
        throw std::invalid_argument("Channel vectors must have the same length.");
    const Eigen::Index m = h_out.size();
    check_brute_force_guards(m, phase_grid_size);

    Eigen::VectorXcd products(m);
    for (Eigen::Index i = 0; i < m; i++)
        products(i) = mu * h_out(i) * h_in(i);

    std::vector<std::complex<double>> phasors(phase_grid_size);
    for (std::size_t t = 0; t < phase_grid_size; t++)
        phasors[t] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(t) /
                                         static_cast<double>(phase_grid_size));

    std::size_t total = 1;
    for (Eigen::Index i = 0; i < m; i++)
        total *= phase_grid_size;

    double best = 0.0;
    for (std::size_t idx = 0; idx < total; idx++)
    {
        std::complex<double> sum = direct;
        std::size_t rem = idx;
        for (Eigen::Index i = 0; i < m; i++)
        {
            sum += products(i) * phasors[rem % phase_grid_size];
            rem /= phase_grid_size;
        }
        best = std::max(best, std::norm(sum));
    }
    return best;
}

double icsi_grid_resolution_bound(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                                  const Eigen::VectorXcd &h_in, double mu,
                                  std::size_t phase_grid_size)
{
    if (h_out.size() != h_in.size())
        throw std::invalid_argument("Channel vectors must have the same length.");
    if (phase_grid_size < 1)
        throw std::invalid_argument("Phase grid must have at least one point.");
    double product_sum = 0.0;
    for (Eigen::Index i = 0; i < h_out.size(); i++)
        product_sum += std::abs(h_out(i) * h_in(i));
    (void)direct;
    return 2.0 * mu * product_sum * (M_PI / static_cast<double>(phase_grid_size));
}

PowerSplitSearch power_split_oracle(double beta1, double beta2, double p_watts,
                                    std::size_t grid_size)
{
    if (!(beta1 > 0.0) || !(beta2 > 0.0))
        throw std::invalid_argument("Gains must be positive.");
    if (p_watts < 0.0)
        throw std::invalid_argument("Transmit power must be non-negative.");
    if (grid_size < 2)
        throw std::invalid_argument("Power grid must have at least two points.");

    PowerSplitSearch result;
    const double step = 2.0 * p_watts / static_cast<double>(grid_size - 1);
    for (std::size_t i = 0; i < grid_size; i++)
    {
        double p1 = static_cast<double>(i) * step;
        double p2 = 2.0 * p_watts - p1;
        double value = std::min(p1 * beta1, p2 * beta2);
        if (value > result.best_min_snr)
        {
            result.best_min_snr = value;
            result.best_p1 = p1;
        }
    }
    result.resolution_bound = step * std::max(beta1, beta2);
    return result;
}

} // namespace hrnsim
