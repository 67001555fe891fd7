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

#ifndef HRNSIM_RBD_HPP
#define HRNSIM_RBD_HPP

#include <Eigen/Dense>
#include <complex>
#include <optional>

namespace hrnsim
{

// Per-UC reflection response: amplitude in [0,1] and phase in [0, 2pi).
struct ReflectionConfig
{
    Eigen::VectorXd amplitudes;
    Eigen::VectorXd phases;

    Eigen::Index size() const { return amplitudes.size(); }
};

// Uniform-amplitude configuration with the given phases (canonicalized to
// [0, 2pi)).
ReflectionConfig make_reflection(double mu, const Eigen::VectorXd &phases);

double wrap_phase(double phase); // canonical representative in [0, 2pi)

// Instantaneous-CSI phase design for one cascaded hop. Without a direct
// link, phase m = -arg(h_out[m] * h_in[m]); with one, arg(direct) is added so
// every reflected term lines up with the direct term.
ReflectionConfig icsi_phases_cascade(const Eigen::VectorXcd &h_out,
                                     const Eigen::VectorXcd &h_in,
                                     std::optional<std::complex<double>> direct,
                                     double mu = 1.0);

// Composite reflected channel sum_m amp_m e^{j phase_m} h_out[m] h_in[m];
// the direct term, when present, is added by the caller.
std::complex<double> apply_reflection(const Eigen::VectorXcd &h_out,
                                      const Eigen::VectorXcd &h_in,
                                      const ReflectionConfig &config);

// Effective power gains under the optimal designs.

// (mu * sum_m |h_id[m] h_si[m]|)^2 -- single-hop surface link, iCSI design.
double gain_irs_icsi(const Eigen::VectorXcd &h_id, const Eigen::VectorXcd &h_si, double mu);

// |mu * h_id^T h_si|^2 -- single-hop surface link, statistical design
// (transpose product, no conjugation).
double gain_irs_scsi(const Eigen::VectorXcd &h_id, const Eigen::VectorXcd &h_si, double mu);

// (|direct| + mu * sum_m |h_out[m] h_in[m]|)^2 -- hop with a direct link,
// iCSI design.
double gain_hop_icsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                     const Eigen::VectorXcd &h_in, double mu);

// |direct + mu * h_out^T h_in|^2 -- hop with a direct link, statistical
// design.
double gain_hop_scsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                     const Eigen::VectorXcd &h_in, double mu);

} // namespace hrnsim

#endif
