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

#include "geometry.hpp"

#include <cmath>
#include <stdexcept>

namespace hrnsim
{

Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 operator*(double s, const Vec3 &a) { return {s * a.x, s * a.y, s * a.z}; }
bool operator==(const Vec3 &a, const Vec3 &b) { return a.x == b.x && a.y == b.y && a.z == b.z; }

double norm(const Vec3 &a) { return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z); }
double distance(const Vec3 &a, const Vec3 &b) { return norm(a - b); }

namespace
{

Vec3 cross(const Vec3 &a, const Vec3 &b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

Vec3 normalized(const Vec3 &a)
{
    double n = norm(a);
    if (n <= 0.0)
        throw std::invalid_argument("Cannot normalize a zero vector.");
    return (1.0 / n) * a;
}

bool finite(const Vec3 &a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

} // namespace

void validate(const NodeLayout &layout)
{
    const Vec3 *nodes[] = {&layout.source, &layout.relay, &layout.destination, &layout.irs_center};
    const char *names[] = {"source", "relay", "destination", "irs_center"};
    for (int i = 0; i < 4; i++)
        if (!finite(*nodes[i]))
            throw std::invalid_argument(std::string(names[i]) + " coordinates must be finite.");
    for (int i = 0; i < 4; i++)
        for (int j = i + 1; j < 4; j++)
            if (distance(*nodes[i], *nodes[j]) <= 0.0)
                throw std::invalid_argument(std::string(names[i]) + " and " + names[j] +
                                            " must not coincide.");
}

UcGrid build_uc_grid(std::size_t m_d, double spacing, const Vec3 &center, const Vec3 &normal)
{
    if (m_d < 1)
        throw std::invalid_argument("UC grid needs at least one element per dimension.");
    if (!(spacing > 0.0) || !std::isfinite(spacing))
        throw std::invalid_argument("UC spacing must be positive.");

    Vec3 n = normalized(normal);
    // In-plane axes: rows along `a`, columns along `b`. The up-reference
    // switches only when the normal is (anti)parallel to z.
    Vec3 up = (std::abs(n.z) > 0.99) ? Vec3{1.0, 0.0, 0.0} : Vec3{0.0, 0.0, 1.0};
    Vec3 a = normalized(cross(up, n));
    Vec3 b = cross(n, a);

    UcGrid grid;
    grid.m_d = m_d;
    grid.spacing = spacing;
    grid.positions.reserve(m_d * m_d);
    const double offset = 0.5 * static_cast<double>(m_d - 1);
    for (std::size_t j = 0; j < m_d; j++)
        for (std::size_t i = 0; i < m_d; i++)
        {
            double u = (static_cast<double>(i) - offset) * spacing;
            double v = (static_cast<double>(j) - offset) * spacing;
            grid.positions.push_back(center + u * a + v * b);
        }
    return grid;
}

void validate(const PathLossModel &model)
{
    if (!(model.reference_distance > 0.0))
        throw std::invalid_argument("Reference distance d0 must be positive.");
    if (!(model.alpha_irs > 0.0) || !(model.alpha_relay > 0.0))
        throw std::invalid_argument("Path-loss exponents must be positive.");
    if (!std::isfinite(model.offset_db))
        throw std::invalid_argument("Path-loss offset must be finite.");
}

double channel_variance(double d, const PathLossModel &model, double alpha)
{
    if (!(d > 0.0))
        throw std::invalid_argument("Distance must be positive.");
    return std::pow(d / model.reference_distance, -alpha) *
           std::pow(10.0, model.offset_db / 10.0);
}

LinkVariances scenario_variances(const NodeLayout &layout, const UcGrid &grid,
                                 const PathLossModel &model)
{
    validate(layout);
    validate(model);
    if (grid.size() == 0)
        throw std::invalid_argument("UC grid must not be empty.");

    LinkVariances v;
    v.rho_sr = channel_variance(distance(layout.source, layout.relay), model, model.alpha_relay);
    v.rho_rd = channel_variance(distance(layout.relay, layout.destination), model, model.alpha_relay);
    v.rho_si = channel_variance(distance(layout.source, layout.irs_center), model, model.alpha_irs);
    v.rho_ir = channel_variance(distance(layout.irs_center, layout.relay), model, model.alpha_irs);
    v.rho_ri = v.rho_ir;
    v.rho_id = channel_variance(distance(layout.irs_center, layout.destination), model, model.alpha_irs);
    return v;
}

} // namespace hrnsim
