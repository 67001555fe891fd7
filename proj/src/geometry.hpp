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

#ifndef HRNSIM_GEOMETRY_HPP
#define HRNSIM_GEOMETRY_HPP

#include <cstddef>
#include <vector>

namespace hrnsim
{

struct Vec3
{
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

Vec3 operator+(const Vec3 &a, const Vec3 &b);
Vec3 operator-(const Vec3 &a, const Vec3 &b);
Vec3 operator*(double s, const Vec3 &a);
bool operator==(const Vec3 &a, const Vec3 &b);

double norm(const Vec3 &a);
double distance(const Vec3 &a, const Vec3 &b);

// Node placement of the four-terminal network. The surface enters path-loss
// computations as the single point `irs_center`; the per-element positions
// matter only for spatial correlation.
struct NodeLayout
{
    Vec3 source;
    Vec3 relay;
    Vec3 destination;
    Vec3 irs_center;
};

// Throws std::invalid_argument on non-finite coordinates or coincident nodes.
void validate(const NodeLayout &layout);

// Square array of reflective unit cells, M = m_d^2 positions on a uniform
// lattice.
struct UcGrid
{
    std::size_t m_d = 0;
    double spacing = 0.0; // meters
    std::vector<Vec3> positions;

    std::size_t size() const { return positions.size(); }
};

// Builds the m_d x m_d lattice centered on `center`, lying in the plane with
// the given normal. Row/column spacing is identical.
UcGrid build_uc_grid(std::size_t m_d, double spacing, const Vec3 &center,
                     const Vec3 &normal = Vec3{1.0, 0.0, 0.0});

// Distance-based variance model: rho[dB] = 10*log10((d/d0)^-alpha) + offset.
struct PathLossModel
{
    double reference_distance = 1.0; // d0, meters
    double offset_db = -20.0;
    double alpha_irs = 3.0;   // exponent for links that involve the surface
    double alpha_relay = 3.7; // exponent for relay <-> endpoint links
};

void validate(const PathLossModel &model);

// Linear-scale channel variance at distance d under the given exponent.
double channel_variance(double d, const PathLossModel &model, double alpha);

// Per-link variances for one layout. rho_ir == rho_ri by reciprocity.
struct LinkVariances
{
    double rho_sr = 0.0;
    double rho_rd = 0.0;
    double rho_si = 0.0;
    double rho_ir = 0.0;
    double rho_ri = 0.0;
    double rho_id = 0.0;
};

LinkVariances scenario_variances(const NodeLayout &layout, const UcGrid &grid,
                                 const PathLossModel &model);

} // namespace hrnsim

#endif
