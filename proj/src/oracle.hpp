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

#ifndef HRNSIM_ORACLE_HPP
#define HRNSIM_ORACLE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "rbd.hpp"
#include "rng.hpp"

namespace hrnsim
{

// Independent checks of the closed-form designs: ergodic-SNR trace formulas,
// random phase search, exhaustive phase grids at tiny M, and a power-split
// grid search. These never call into the design path they verify.

// Real part of tr(R * Theta * R * Theta^H) for diagonal Theta given by the
// reflection config. Throws model_error if the imaginary part exceeds 1e-9
// relative.
double reflected_trace(const Eigen::MatrixXd &R, const ReflectionConfig &theta);

// Ergodic received SNR of the surface-only link:
// (P/sigma^2) * rho_id * rho_si * tr(R Theta R Theta^H).
double ergodic_snr_irs(double p_watts, double noise_w, double rho_id, double rho_si,
                       const Eigen::MatrixXd &R, const ReflectionConfig &theta);

// Ergodic received SNR of one hybrid hop with an independent direct link:
// (P/sigma^2) * (rho_direct + rho_out * rho_in * tr(R Theta R Theta^H)).
double ergodic_snr_hrn_hop(double p_watts, double noise_w, double rho_direct, double rho_out,
                           double rho_in, const Eigen::MatrixXd &R,
                           const ReflectionConfig &theta);

// Samples `trials` random unit-modulus diagonal configs with amplitude mu and
// returns the largest reflected trace found. Never exceeds mu^2 tr(R^2).
double scsi_optimality_check(const Eigen::MatrixXd &R, double mu, std::size_t trials, Rng &rng);

// Exhaustive search over the K^M phase grid of the composite power
// |direct + mu sum_m h_out[m] h_in[m] e^{j theta_m}|^2. Guarded to M <= 4,
// K <= 16.
double brute_force_icsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                        const Eigen::VectorXcd &h_in, double mu, std::size_t phase_grid_size);

// Loss bound of the K-point phase grid relative to the continuous optimum.
double icsi_grid_resolution_bound(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                                  const Eigen::VectorXcd &h_in, double mu,
                                  std::size_t phase_grid_size);

struct PowerSplitSearch
{
    double best_min_snr = 0.0; // max over the grid of min(P1 b1, P2 b2), sigma^2 = 1
    double best_p1 = 0.0;
    double resolution_bound = 0.0; // grid-step loss bound
};

// Grid search of P1 in [0, 2P] (P2 = 2P - P1) maximizing the weaker hop SNR.
PowerSplitSearch power_split_oracle(double beta1, double beta2, double p_watts,
                                    std::size_t grid_size);

} // namespace hrnsim

#endif
