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

#include "channel.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace hrnsim
{

double sinc(double x)
{
    if (x == 0.0)
        return 1.0;
    double px = M_PI * x;
    return std::sin(px) / px;
}

CorrelationMatrix build_correlation(const UcGrid &grid, double wavelength)
{
    if (!(wavelength > 0.0) || !std::isfinite(wavelength))
        throw std::invalid_argument("Wavelength must be positive.");
    const Eigen::Index m = static_cast<Eigen::Index>(grid.size());
    if (m == 0)
        throw std::invalid_argument("UC grid must not be empty.");

    CorrelationMatrix R;
    R.wavelength = wavelength;
    R.entries.resize(m, m);
    for (Eigen::Index n = 0; n < m; n++)
    {
        R.entries(n, n) = 1.0;
        for (Eigen::Index k = n + 1; k < m; k++)
        {
            double d = distance(grid.positions[static_cast<std::size_t>(n)],
                                grid.positions[static_cast<std::size_t>(k)]);
            double value = sinc(2.0 * d / wavelength);
            R.entries(n, k) = value;
            R.entries(k, n) = value;
        }
    }
    return R;
}

double psd_tolerance(Eigen::Index m)
{
    return 1e-8 * static_cast<double>(m);
}

Eigen::MatrixXd psd_sqrt(const CorrelationMatrix &R)
{
    const Eigen::Index m = R.size();
    if (m == 0 || R.entries.cols() != m)
        throw std::invalid_argument("Correlation matrix must be square and non-empty.");

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(R.entries);
    if (solver.info() != Eigen::Success)
        throw model_error("Eigendecomposition of the correlation matrix failed.");

    Eigen::VectorXd evals = solver.eigenvalues();
    const double eps = psd_tolerance(m);
    for (Eigen::Index i = 0; i < m; i++)
    {
        if (evals(i) < -eps)
            throw model_error("Correlation kernel is not positive semidefinite at this "
                              "geometry (eigenvalue " +
                              std::to_string(evals(i)) + ").");
        if (evals(i) < 0.0)
            evals(i) = 0.0;
    }

    Eigen::MatrixXd root = solver.eigenvectors() * evals.cwiseSqrt().asDiagonal() *
                           solver.eigenvectors().transpose();
    // kill rounding asymmetry so root == root^T holds exactly
    root = 0.5 * (root + root.transpose()).eval();
    return root;
}

Eigen::VectorXcd sample_vector_channel(const Eigen::MatrixXd &root, double rho, Rng &rng)
{
    if (rho < 0.0)
        throw std::invalid_argument("Channel variance must be non-negative.");
    const Eigen::Index m = root.rows();
    Eigen::VectorXd g_re(m), g_im(m);
    for (Eigen::Index i = 0; i < m; i++)
    {
        g_re(i) = rng.normal() * M_SQRT1_2;
        g_im(i) = rng.normal() * M_SQRT1_2;
    }
    Eigen::VectorXcd h(m);
    h.real() = root * g_re;
    h.imag() = root * g_im;
    h *= std::sqrt(rho);
    return h;
}

cplx sample_scalar_channel(double rho, Rng &rng)
{
    if (rho < 0.0)
        throw std::invalid_argument("Channel variance must be non-negative.");
    return std::sqrt(rho) * rng.complex_normal();
}

ChannelModel make_channel_model(const UcGrid &grid, double wavelength,
                                const LinkVariances &variances)
{
    ChannelModel model;
    model.root = psd_sqrt(build_correlation(grid, wavelength));
    model.variances = variances;
    return model;
}

ChannelRealization draw_realization(const ChannelModel &model, Rng &rng)
{
    ChannelRealization r;
    r.h_sr = sample_scalar_channel(model.variances.rho_sr, rng);
    r.h_rd = sample_scalar_channel(model.variances.rho_rd, rng);
    r.h_si = sample_vector_channel(model.root, model.variances.rho_si, rng);
    r.h_ir = sample_vector_channel(model.root, model.variances.rho_ir, rng);
    r.h_ri = sample_vector_channel(model.root, model.variances.rho_ri, rng);
    r.h_id = sample_vector_channel(model.root, model.variances.rho_id, rng);
    return r;
}

} // namespace hrnsim
