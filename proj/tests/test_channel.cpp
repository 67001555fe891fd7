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

#include <doctest.h>

#include <cmath>

#include "channel.hpp"
#include "errors.hpp"

using namespace hrnsim;

namespace
{

const double kLambda = 299792458.0 / 1.9e9;

UcGrid reference_grid(std::size_t m_d, double spacing_wavelengths = 0.125)
{
    return build_uc_grid(m_d, spacing_wavelengths * kLambda, Vec3{100.0, 2.0, 8.0});
}

template <typename A, typename B> bool exactly_equal(const A &a, const B &b)
{
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.array() == b.array()).all();
}

} // namespace

TEST_CASE("correlation: unit diagonal and the lambda/8 neighbor value")
{
    CorrelationMatrix R = build_correlation(reference_grid(4), kLambda);
    for (Eigen::Index n = 0; n < R.size(); n++)
        CHECK(R.entries(n, n) == 1.0);
    // adjacent elements at lambda/8: sinc(1/4) = sin(pi/4)/(pi/4)
    CHECK(R.entries(0, 1) == doctest::Approx(0.90032).epsilon(1e-5));
    CHECK(R.entries(0, 1) == doctest::Approx(std::sin(M_PI / 4.0) / (M_PI / 4.0)).epsilon(1e-14));
}

TEST_CASE("correlation: entries vanish at half-wavelength separation")
{
    CorrelationMatrix R = build_correlation(reference_grid(3, 0.5), kLambda);
    CHECK(std::abs(R.entries(0, 1)) < 1e-15); // sinc(1)
    CHECK(std::abs(R.entries(0, 2)) < 1e-15); // sinc(2)
}

TEST_CASE("correlation: symmetric with non-negative clamped spectrum for assorted grids")
{
    for (std::size_t m_d : {2, 3, 5})
        for (double sw : {0.08, 0.125, 0.3, 0.55})
        {
            CorrelationMatrix R = build_correlation(reference_grid(m_d, sw), kLambda);
            CHECK(exactly_equal(R.entries, R.entries.transpose().eval()));
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(R.entries);
            CHECK(es.eigenvalues().minCoeff() >= -psd_tolerance(R.size()));
        }
}

TEST_CASE("correlation: non-positive wavelength is rejected")
{
    CHECK_THROWS_AS(build_correlation(reference_grid(2), 0.0), std::invalid_argument);
}

TEST_CASE("psd sqrt: identity maps to identity")
{
    CorrelationMatrix R;
    R.wavelength = kLambda;
    R.entries = Eigen::MatrixXd::Identity(6, 6);
    Eigen::MatrixXd root = psd_sqrt(R);
    CHECK((root - Eigen::MatrixXd::Identity(6, 6)).norm() < 1e-12);
}

TEST_CASE("psd sqrt: closed-form 2x2 root")
{
    const double c = 0.5;
    CorrelationMatrix R;
    R.wavelength = kLambda;
    R.entries.resize(2, 2);
    R.entries << 1.0, c, c, 1.0;
    Eigen::MatrixXd root = psd_sqrt(R);

    double diag = (std::sqrt(1.0 + c) + std::sqrt(1.0 - c)) / 2.0;
    double off = (std::sqrt(1.0 + c) - std::sqrt(1.0 - c)) / 2.0;
    CHECK(root(0, 0) == doctest::Approx(diag).epsilon(1e-12));
    CHECK(root(1, 1) == doctest::Approx(diag).epsilon(1e-12));
    CHECK(root(0, 1) == doctest::Approx(off).epsilon(1e-12));
    CHECK(root(1, 0) == doctest::Approx(off).epsilon(1e-12));
}

TEST_CASE("psd sqrt: reconstructs the lambda/8 correlation matrix")
{
    CorrelationMatrix R = build_correlation(reference_grid(8), kLambda); // M = 64
    Eigen::MatrixXd root = psd_sqrt(R);
    CHECK(exactly_equal(root, root.transpose().eval()));
    double rel = (root * root - R.entries).norm() / R.entries.norm();
    CHECK(rel < 1e-6);
}

TEST_CASE("psd sqrt: genuinely indefinite input raises a model error")
{
    CorrelationMatrix R;
    R.wavelength = kLambda;
    R.entries.resize(2, 2);
    R.entries << 1.0, 1.5, 1.5, 1.0; // eigenvalues 2.5 and -0.5
    CHECK_THROWS_AS(psd_sqrt(R), model_error);
}

TEST_CASE("scalar channel: zero variance and Rayleigh power statistics")
{
    Rng rng(7);
    CHECK(sample_scalar_channel(0.0, rng) == cplx(0.0, 0.0));

    const double rho = 2.5;
    const int n = 100000;
    double acc = 0.0;
    for (int i = 0; i < n; i++)
        acc += std::norm(sample_scalar_channel(rho, rng));
    CHECK(acc / n == doctest::Approx(rho).epsilon(0.02));
}

TEST_CASE("scalar channel: fixed seed reproduces the draw")
{
    Rng a = substream(42, 3);
    Rng b = substream(42, 3);
    CHECK(sample_scalar_channel(1.3, a) == sample_scalar_channel(1.3, b));
}

TEST_CASE("vector channel: zero variance gives the zero vector")
{
    Eigen::MatrixXd root = Eigen::MatrixXd::Identity(5, 5);
    Rng rng(11);
    CHECK(sample_vector_channel(root, 0.0, rng).norm() == 0.0);
}

TEST_CASE("vector channel: per-entry variance under an identity root")
{
    const double rho = 0.7;
    const int m = 8, n = 100000;
    Eigen::MatrixXd root = Eigen::MatrixXd::Identity(m, m);
    Rng rng(13);
    Eigen::VectorXd acc = Eigen::VectorXd::Zero(m);
    for (int i = 0; i < n; i++)
        acc += sample_vector_channel(root, rho, rng).cwiseAbs2();
    for (int k = 0; k < m; k++)
        CHECK(acc(k) / n == doctest::Approx(rho).epsilon(0.02));
}

TEST_CASE("vector channel: sample covariance converges to rho * R")
{
    const double rho = 1.8;
    const int n = 100000;
    CorrelationMatrix R = build_correlation(reference_grid(4), kLambda); // M = 16
    Eigen::MatrixXd root = psd_sqrt(R);
    const Eigen::Index m = R.size();

    Rng rng(17);
    Eigen::MatrixXcd cov = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 0; i < n; i++)
    {
        Eigen::VectorXcd h = sample_vector_channel(root, rho, rng);
        cov += h * h.adjoint();
    }
    cov /= static_cast<double>(n);

    double worst = (cov - rho * R.entries.cast<cplx>()).cwiseAbs().maxCoeff();
    CHECK(worst <= 0.02 * rho);
}

TEST_CASE("draw realization: deterministic under the sub-seeding contract")
{
    UcGrid grid = reference_grid(3);
    NodeLayout layout{{0, 0, 0}, {100, 0, 0}, {200, 0, 0}, {100, 2, 8}};
    LinkVariances vars = scenario_variances(layout, grid, PathLossModel{});
    ChannelModel model = make_channel_model(grid, kLambda, vars);

    Rng a = substream(1234, 56);
    Rng b = substream(1234, 56);
    ChannelRealization ra = draw_realization(model, a);
    ChannelRealization rb = draw_realization(model, b);
    CHECK(ra.h_sr == rb.h_sr);
    CHECK(ra.h_rd == rb.h_rd);
    CHECK(exactly_equal(ra.h_si, rb.h_si));
    CHECK(exactly_equal(ra.h_ir, rb.h_ir));
    CHECK(exactly_equal(ra.h_ri, rb.h_ri));
    CHECK(exactly_equal(ra.h_id, rb.h_id));
}

TEST_CASE("draw realization: independent links have vanishing cross-covariance")
{
    UcGrid grid = reference_grid(4);
    NodeLayout layout{{0, 0, 0}, {100, 0, 0}, {200, 0, 0}, {100, 2, 8}};
    LinkVariances vars = scenario_variances(layout, grid, PathLossModel{});
    ChannelModel model = make_channel_model(grid, kLambda, vars);

    const int n = 10000;
    Rng rng(23);
    cplx acc = 0.0;
    for (int i = 0; i < n; i++)
    {
        ChannelRealization r = draw_realization(model, rng);
        for (Eigen::Index k = 0; k < r.h_si.size(); k++)
            acc += r.h_si(k) * std::conj(r.h_id(k));
    }
    double scale = std::sqrt(vars.rho_si * vars.rho_id);
    double mean_cross = std::abs(acc) / (static_cast<double>(n) * double(model.size()));
    CHECK(mean_cross <= 0.02 * scale);
}
