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

#include "rbd.hpp"

#include <cmath>
#include <stdexcept>

namespace hrnsim
{

namespace
{

void require_same_length(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("Channel vectors must have the same length.");
}

void require_amplitude(double mu)
{
    if (!(mu >= 0.0 && mu <= 1.0))
        throw std::invalid_argument("Reflection amplitude must lie in [0, 1].");
}

} // namespace

double wrap_phase(double phase)
{
    double p = std::fmod(phase, 2.0 * M_PI);
    if (p < 0.0)
        p += 2.0 * M_PI;
    if (p >= 2.0 * M_PI) // fmod can land exactly on 2pi after the bump
        p = 0.0;
    return p;
}

ReflectionConfig make_reflection(double mu, const Eigen::VectorXd &phases)
{
    require_amplitude(mu);
    ReflectionConfig config;
    config.amplitudes = Eigen::VectorXd::Constant(phases.size(), mu);
    config.phases = phases.unaryExpr([](double p) { return wrap_phase(p); });
    return config;
}

ReflectionConfig icsi_phases_cascade(const Eigen::VectorXcd &h_out, const Eigen::VectorXcd &h_in,
                                     std::optional<std::complex<double>> direct, double mu)
{
    require_same_length(h_out, h_in);
    const double direct_phase = direct ? std::arg(*direct) : 0.0;
    Eigen::VectorXd phases(h_out.size());
    for (Eigen::Index m = 0; m < h_out.size(); m++)
        phases(m) = direct_phase - std::arg(h_out(m) * h_in(m));
    return make_reflection(mu, phases);
}

std::complex<double> apply_reflection(const Eigen::VectorXcd &h_out, const Eigen::VectorXcd &h_in,
                                      const ReflectionConfig &config)
{
    require_same_length(h_out, h_in);
    if (config.size() != h_out.size())
        throw std::invalid_argument("Reflection config does not match the channel length.");
    std::complex<double> sum = 0.0;
    for (Eigen::Index m = 0; m < h_out.size(); m++)
        sum += config.amplitudes(m) * std::polar(1.0, config.phases(m)) * h_out(m) * h_in(m);
    return sum;
}

double gain_irs_icsi(const Eigen::VectorXcd &h_id, const Eigen::VectorXcd &h_si, double mu)
{
    require_same_length(h_id, h_si);
    require_amplitude(mu);
    double sum = 0.0;
    for (Eigen::Index m = 0; m < h_id.size(); m++)
        sum += std::abs(h_id(m) * h_si(m));
    double amp = mu * sum;
    return amp * amp;
}

double gain_irs_scsi(const Eigen::VectorXcd &h_id, const Eigen::VectorXcd &h_si, double mu)
{
    require_same_length(h_id, h_si);
    require_amplitude(mu);
    std::complex<double> inner = 0.0;
    for (Eigen::Index m = 0; m < h_id.size(); m++)
        inner += h_id(m) * h_si(m); // transpose product, no conjugation
    return std::norm(mu * inner);
}

double gain_hop_icsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                     const Eigen::VectorXcd &h_in, double mu)
{
    require_same_length(h_out, h_in);
    require_amplitude(mu);
    double sum = 0.0;
    for (Eigen::Index m = 0; m < h_out.size(); m++)
        sum += std::abs(h_out(m) * h_in(m));
    double amp = std::abs(direct) + mu * sum;
    return amp * amp;
}

double gain_hop_scsi(std::complex<double> direct, const Eigen::VectorXcd &h_out,
                     const Eigen::VectorXcd &h_in, double mu)
{
    require_same_length(h_out, h_in);
    require_amplitude(mu);
    std::complex<double> inner = 0.0;
    for (Eigen::Index m = 0; m < h_out.size(); m++)
        inner += h_out(m) * h_in(m);
    return std::norm(direct + mu * inner);
}

} // namespace hrnsim
