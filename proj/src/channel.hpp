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

#ifndef HRNSIM_CHANNEL_HPP
#define HRNSIM_CHANNEL_HPP

#include <Eigen/Dense>
#include <complex>

#include "geometry.hpp"
#include "rng.hpp"

namespace hrnsim
{

using cplx = std::complex<double>;

// Spatial correlation across the UC lattice: R[n,k] = sinc(2*d(n,k)/lambda)
// with the normalized sinc convention, sinc(x) = sin(pi x)/(pi x).
struct CorrelationMatrix
{
    Eigen::MatrixXd entries;
    double wavelength = 0.0; // meters

    Eigen::Index size() const { return entries.rows(); }
};

double sinc(double x);

CorrelationMatrix build_correlation(const UcGrid &grid, double wavelength);

// Eigenvalues of R may dip slightly negative from rounding; anything below
// -eps is treated as a genuinely indefinite kernel.
double psd_tolerance(Eigen::Index m);

// Symmetric PSD square root via eigendecomposition with negative eigenvalues
// clamped to zero. Throws model_error when an eigenvalue falls below
// -psd_tolerance(M).
Eigen::MatrixXd psd_sqrt(const CorrelationMatrix &R);

// One block-fading draw of every link in the network. Vector channels are
// column vectors of length M.
struct ChannelRealization
{
    cplx h_sr;
    cplx h_rd;
    Eigen::VectorXcd h_si;
    Eigen::VectorXcd h_ir;
    Eigen::VectorXcd h_ri;
    Eigen::VectorXcd h_id;
};

// sqrt(rho) * root * g with g ~ CN(0, I_M); entries of g are drawn in index
// order, real part before imaginary part.
Eigen::VectorXcd sample_vector_channel(const Eigen::MatrixXd &root, double rho, Rng &rng);

// sqrt(rho) * g with g ~ CN(0, 1).
cplx sample_scalar_channel(double rho, Rng &rng);

// Everything needed to draw realizations at one surface size.
struct ChannelModel
{
    Eigen::MatrixXd root;    // symmetric PSD square root of R
    LinkVariances variances; // per-link rho

    Eigen::Index size() const { return root.rows(); }
};

ChannelModel make_channel_model(const UcGrid &grid, double wavelength,
                                const LinkVariances &variances);

// Draw order is fixed: h_SR, h_RD, h_SI, h_IR, h_RI, h_ID. All links are
// independent across each other and across calls.
ChannelRealization draw_realization(const ChannelModel &model, Rng &rng);

} // namespace hrnsim

#endif
