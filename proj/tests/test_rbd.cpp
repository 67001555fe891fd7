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
#include <complex>

#include "rbd.hpp"
#include "rng.hpp"

using namespace hrnsim;
using namespace std::complex_literals;

namespace
{

using cplx = std::complex<double>;

Eigen::VectorXcd random_vector(Eigen::Index m, Rng &rng)
{
    Eigen::VectorXcd v(m);
    for (Eigen::Index i = 0; i < m; i++)
        v(i) = rng.complex_normal();
    return v;
}

} // namespace

TEST_CASE("wrap_phase lands in [0, 2pi)")
{
    CHECK(wrap_phase(0.0) == 0.0);
    CHECK(wrap_phase(-M_PI / 6.0) == doctest::Approx(2.0 * M_PI - M_PI / 6.0).epsilon(1e-14));
    CHECK(wrap_phase(7.0 * M_PI) == doctest::Approx(M_PI).epsilon(1e-12));
    CHECK(wrap_phase(2.0 * M_PI) == 0.0);
    CHECK(wrap_phase(-1e-9) < 2.0 * M_PI);
}

TEST_CASE("icsi phases: already-aligned cascades need no shift")
{
    Eigen::VectorXcd h_out(3), h_in(3);
    h_out << 1.0, 2.0, 0.5;
    h_in << 3.0, 0.25, 4.0;
    ReflectionConfig config = icsi_phases_cascade(h_out, h_in, std::nullopt);
    for (Eigen::Index m = 0; m < 3; m++)
        CHECK(config.phases(m) == 0.0);
}

TEST_CASE("icsi phases: single-element rule with a direct link")
{
    Eigen::VectorXcd h_out(1), h_in(1);
    h_out << std::polar(1.0, M_PI / 3.0);
    h_in << 1.0;
    auto direct = std::polar(1.0, M_PI / 6.0);
    ReflectionConfig config = icsi_phases_cascade(h_out, h_in, direct);
    CHECK(config.phases(0) == doctest::Approx(wrap_phase(M_PI / 6.0 - M_PI / 3.0)).epsilon(1e-12));
}

TEST_CASE("icsi phases: design collapses the composite to a magnitude sum")
{
    Rng rng(5);
    for (int rep = 0; rep < 50; rep++)
    {
        Eigen::VectorXcd h_out = random_vector(8, rng);
        Eigen::VectorXcd h_in = random_vector(8, rng);
        cplx direct = rng.complex_normal();
        const double mu = 0.9;

        ReflectionConfig config = icsi_phases_cascade(h_out, h_in, direct, mu);
        cplx composite = direct + apply_reflection(h_out, h_in, config);

        double sum = 0.0;
        for (Eigen::Index m = 0; m < 8; m++)
            sum += std::abs(h_out(m) * h_in(m));
        CHECK(std::abs(composite) ==
              doctest::Approx(std::abs(direct) + mu * sum).epsilon(1e-12));
    }
}

TEST_CASE("icsi phases: mismatched lengths are rejected")
{
    Eigen::VectorXcd a(2), b(3);
    a.setOnes();
    b.setOnes();
    CHECK_THROWS_AS(icsi_phases_cascade(a, b, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(gain_irs_icsi(a, b, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(gain_irs_scsi(a, b, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(gain_hop_icsi(1.0, a, b, 0.9), std::invalid_argument);
    CHECK_THROWS_AS(gain_hop_scsi(1.0, a, b, 0.9), std::invalid_argument);
}

TEST_CASE("gain_irs_icsi: boundary examples")
{
    Eigen::VectorXcd zero = Eigen::VectorXcd::Zero(4);
    Eigen::VectorXcd ones = Eigen::VectorXcd::Ones(4);
    CHECK(gain_irs_icsi(ones, zero, 0.9) == 0.0);

    Eigen::VectorXcd a(1), b(1);
    a << std::polar(1.0, 0.7);
    b << std::polar(1.0, -2.1);
    CHECK(gain_irs_icsi(a, b, 0.9) == doctest::Approx(0.81).epsilon(1e-12));

    Eigen::VectorXcd u(2), v(2);
    u << std::polar(1.0, 0.3), std::polar(1.0, 1.9);
    v << std::polar(1.0, -0.8), std::polar(1.0, 2.6);
    CHECK(gain_irs_icsi(u, v, 1.0) == doctest::Approx(4.0).epsilon(1e-12)); // (1+1)^2
}

TEST_CASE("gain_irs_scsi: transpose product and single-element equivalence")
{
    Eigen::VectorXcd h_id(2), h_si(2);
    h_id << 1.0, 1.0;
    h_si << 1.0, -1.0;
    CHECK(gain_irs_scsi(h_id, h_si, 0.9) == 0.0); // h_id^T h_si = 0

    Rng rng(6);
    Eigen::VectorXcd a = random_vector(1, rng);
    Eigen::VectorXcd b = random_vector(1, rng);
    CHECK(gain_irs_scsi(a, b, 0.9) == doctest::Approx(gain_irs_icsi(a, b, 0.9)).epsilon(1e-12));
}

TEST_CASE("gain_hop_icsi: switched-off surface, no direct path, and a spot value")
{
    Rng rng(8);
    Eigen::VectorXcd h_out = random_vector(5, rng);
    Eigen::VectorXcd h_in = random_vector(5, rng);
    cplx direct = rng.complex_normal();

    CHECK(gain_hop_icsi(direct, h_out, h_in, 0.0) ==
          doctest::Approx(std::norm(direct)).epsilon(1e-12));
    CHECK(gain_hop_icsi(0.0, h_out, h_in, 0.9) == gain_irs_icsi(h_out, h_in, 0.9));

    Eigen::VectorXcd u(1), v(1);
    u << 2.0;
    v << 2.0i;
    CHECK(gain_hop_icsi(3.0, u, v, 1.0) == doctest::Approx(49.0).epsilon(1e-12)); // (3+4)^2
}

TEST_CASE("gain_hop_scsi: destructive alignment and switched-off surface")
{
    Eigen::VectorXcd u(1), v(1);
    u << 1.0;
    v << -1.0;
    CHECK(gain_hop_scsi(1.0, u, v, 1.0) == doctest::Approx(0.0).epsilon(1e-15));

    Rng rng(9);
    Eigen::VectorXcd h_out = random_vector(4, rng);
    Eigen::VectorXcd h_in = random_vector(4, rng);
    cplx direct = rng.complex_normal();
    CHECK(gain_hop_scsi(direct, h_out, h_in, 0.0) ==
          doctest::Approx(std::norm(direct)).epsilon(1e-12));
    CHECK(gain_hop_scsi(0.0, h_out, h_in, 0.9) == gain_irs_scsi(h_out, h_in, 0.9));
}

TEST_CASE("pointwise dominance: aligned gains never fall below statistical gains")
{
    Rng rng(10);
    const double mu = 0.9;
    for (int rep = 0; rep < 2000; rep++)
    {
        Eigen::VectorXcd h_id = random_vector(6, rng);
        Eigen::VectorXcd h_si = random_vector(6, rng);
        cplx direct = rng.complex_normal();

        CHECK(gain_irs_icsi(h_id, h_si, mu) >= gain_irs_scsi(h_id, h_si, mu));
        CHECK(gain_hop_icsi(direct, h_id, h_si, mu) >= gain_hop_scsi(direct, h_id, h_si, mu));
        // adding the surface never hurts the aligned hop
        CHECK(gain_hop_icsi(direct, h_id, h_si, mu) >= std::norm(direct));
    }
}

TEST_CASE("icsi design is optimal against random phase configurations")
{
    Rng rng(12);
    const double mu = 0.9;
    const Eigen::Index m = 8;
    for (int rep = 0; rep < 100; rep++)
    {
        Eigen::VectorXcd h_out = random_vector(m, rng);
        Eigen::VectorXcd h_in = random_vector(m, rng);
        cplx direct = rng.complex_normal();

        double best_irs = gain_irs_icsi(h_out, h_in, mu);
        double best_hop = gain_hop_icsi(direct, h_out, h_in, mu);
        for (int t = 0; t < 200; t++)
        {
            Eigen::VectorXd phases(m);
            for (Eigen::Index i = 0; i < m; i++)
                phases(i) = 2.0 * M_PI * rng.uniform();
            ReflectionConfig config = make_reflection(mu, phases);
            cplx reflected = apply_reflection(h_out, h_in, config);
            CHECK(std::norm(reflected) <= best_irs * (1.0 + 1e-12));
            CHECK(std::norm(direct + reflected) <= best_hop * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("scaling: gains scale with the squared product of channel magnitudes")
{
    Rng rng(14);
    const double mu = 0.9;
    Eigen::VectorXcd h_out = random_vector(5, rng);
    Eigen::VectorXcd h_in = random_vector(5, rng);
    cplx a = 2.5 * std::polar(1.0, 0.4);
    cplx b = 0.3 * std::polar(1.0, -1.2);
    double factor = std::norm(a) * std::norm(b); // (|a||b|)^2

    CHECK(gain_irs_icsi((a * h_out).eval(), (b * h_in).eval(), mu) ==
          doctest::Approx(factor * gain_irs_icsi(h_out, h_in, mu)).epsilon(1e-12));
    CHECK(gain_irs_scsi((a * h_out).eval(), (b * h_in).eval(), mu) ==
          doctest::Approx(factor * gain_irs_scsi(h_out, h_in, mu)).epsilon(1e-12));
}

TEST_CASE("make_reflection validates the amplitude")
{
    Eigen::VectorXd phases = Eigen::VectorXd::Zero(3);
    CHECK_THROWS_AS(make_reflection(1.5, phases), std::invalid_argument);
    CHECK_THROWS_AS(make_reflection(-0.1, phases), std::invalid_argument);
    ReflectionConfig config = make_reflection(0.4, phases);
    CHECK(config.amplitudes.minCoeff() == 0.4);
}
