// SPDX-License-Identifier: Apache-2.0
//
// irsroute - multi-IRS multi-path beam routing simulator
// Copyright (C) 2026 The irsroute Authors
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

#include <catch_amalgamated.hpp>

#include "irsroute/channel.hpp"
#include "irsroute/random.hpp"

#include <cmath>
#include <numbers>

using namespace irsroute;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Independent oracle: free-space gain from the wavelength, written out.
double friis_beta(double f)
{
    const double lambda = 299792458.0 / f;
    return lambda * lambda / (16.0 * std::numbers::pi * std::numbers::pi);
}

double to_db(double x)
{
    return 10.0 * std::log10(x);
}

} // namespace

TEST_CASE("Reference gain - 5 GHz is about 2.28e-5, -46.4 dB")
{
    const double b = reference_gain(5e9);
    CHECK_THAT(b, WithinRel(2.28e-5, 0.01));
    CHECK_THAT(to_db(b), WithinAbs(-46.4, 0.05));
    CHECK_THAT(b, WithinRel(friis_beta(5e9), 1e-14));
}

TEST_CASE("Reference gain - halving the frequency quadruples it")
{
    CHECK_THAT(reference_gain(2.5e9), WithinRel(4.0 * reference_gain(5e9), 1e-14));
}

TEST_CASE("Reference gain - non-positive frequency throws")
{
    REQUIRE_THROWS_AS(reference_gain(0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(reference_gain(-1e9), std::invalid_argument);
    REQUIRE_THROWS_AS(CarrierSpec::at(0.0), std::invalid_argument);
}

TEST_CASE("Carrier - wavelength and beta are consistent")
{
    const CarrierSpec c = CarrierSpec::at(5e9);
    CHECK_THAT(c.wavelength(), WithinRel(0.0599584916, 1e-9));
    CHECK_THAT(c.beta(), WithinRel(std::pow(c.wavelength() / (4.0 * std::numbers::pi), 2), 1e-14));
}

TEST_CASE("LoS link - amplitude is sqrt(beta) / d")
{
    const CarrierSpec c{5e9};
    BsPose bs;
    bs.n_antennas = 4;
    const IrsPose near = make_irs_pose(Vec3(1, 0, 0), -Vec3::UnitX(), 2);
    const IrsPose far = make_irs_pose(Vec3(10, 0, 0), -Vec3::UnitX(), 2);
    CHECK_THAT(los_link(bs, near, c).amplitude, WithinRel(std::sqrt(c.beta()), 1e-14));
    CHECK_THAT(los_link(bs, far, c).amplitude, WithinRel(4.77e-4, 0.01));
}

TEST_CASE("LoS link - BS(4) to IRS(m0=2) is a rank-1 4x4 matrix")
{
    const CarrierSpec c{5e9};
    BsPose bs;
    bs.n_antennas = 4;
    const IrsPose irs = make_irs_pose(Vec3(3, 2, 1), Vec3(-1, -0.3, 0.2), 2);
    const LosChannel link = los_link(bs, irs, c);
    CHECK(link.kind == LinkKind::bs_to_irs);
    const CMatrix h = link.matrix();
    REQUIRE(h.rows() == 4);
    REQUIRE(h.cols() == 4);
    const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(h).singularValues();
    CHECK(sv[1] < 1e-10 * sv[0]);
}

TEST_CASE("LoS link - shapes, kinds and unsupported pairings")
{
    const CarrierSpec c{5e9};
    const IrsPose a = make_irs_pose(Vec3(1, 0, 0), Vec3::UnitY(), 3);
    const IrsPose b = make_irs_pose(Vec3(4, 2, 0), -Vec3::UnitY(), 2);
    const UserPose u{Vec3(5, 5, 1)};
    const LosChannel ab = los_link(a, b, c);
    CHECK(ab.kind == LinkKind::irs_to_irs);
    CHECK(ab.matrix().rows() == 4);
    CHECK(ab.matrix().cols() == 9);
    const LosChannel au = los_link(a, u, c);
    CHECK(au.kind == LinkKind::irs_to_user);
    CHECK(au.matrix().rows() == 1);
    CHECK(au.matrix().cols() == 9);
    REQUIRE_THROWS_AS(los_link(BsPose{}, u, c), std::invalid_argument);
    REQUIRE_THROWS_AS(los_link(u, a, c), std::invalid_argument);
    IrsPose same = a;
    same.normal = -a.normal;
    REQUIRE_THROWS_AS(los_link(a, same, c), std::invalid_argument);
}

TEST_CASE("LoS link - rank 1 and Frobenius norm for random geometry")
{
    const CarrierSpec c{5e9};
    Rng rng(21);
    for (int t = 0; t < 100; ++t)
    {
        BsPose bs;
        bs.n_antennas = 1 + static_cast<int>(rng.uniform() * 16);
        bs.axis = Vec3(rng.normal(), rng.normal(), rng.normal()).normalized();
        const Vec3 p(5 + rng.normal(), rng.normal(), rng.normal());
        const IrsPose irs = make_irs_pose(p, Vec3(rng.normal(), rng.normal(), rng.normal()),
                                          1 + static_cast<int>(rng.uniform() * 6));
        const LosChannel link = los_link(bs, irs, c);
        const CMatrix h = link.matrix();
        const double expected = std::sqrt(c.beta()) / p.norm() * std::sqrt(double(irs.element_count() * bs.n_antennas));
        CHECK_THAT(h.norm(), WithinRel(expected, 1e-12));
        if (h.rows() > 1 && h.cols() > 1)
        {
            const Eigen::VectorXd sv = Eigen::JacobiSVD<CMatrix>(h).singularValues();
            CHECK(sv[1] < 1e-10 * sv[0]);
        }
    }
}

TEST_CASE("LoS link - reverse direction conjugates the responses")
{
    const CarrierSpec c{5e9};
    const IrsPose a = make_irs_pose(Vec3(0, 0, 0), Vec3(1, 1, 0), 3);
    const IrsPose b = make_irs_pose(Vec3(3, 4, 1), Vec3(-1, -1, 0), 4);
    const LosChannel ab = los_link(a, b, c);
    const LosChannel ba = los_link(b, a, c);
    CHECK((ab.tx_response - ba.rx_response).norm() < 1e-12);
    CHECK((ab.rx_response - ba.tx_response).norm() < 1e-12);
    CHECK((ab.matrix().adjoint() - ba.matrix()).norm() < 1e-12 * ab.matrix().norm());
}

TEST_CASE("Rayleigh - identical seeds give identical matrices")
{
    const CarrierSpec c{5e9};
    const CMatrix a = rayleigh_nlos(7, 5, 10.0, 3.0, c, 99);
    const CMatrix b = rayleigh_nlos(7, 5, 10.0, 3.0, c, 99);
    CHECK(a == b);
    CHECK(a != rayleigh_nlos(7, 5, 10.0, 3.0, c, 100));
}

TEST_CASE("Rayleigh - sample variance matches beta d^-rho within 1%")
{
    const CarrierSpec c{5e9};
    const CMatrix h = rayleigh_nlos(1000, 1000, 10.0, 3.0, c, 5);
    const double target = c.beta() * 1e-3;
    CHECK_THAT(h.squaredNorm() / 1e6, WithinRel(target, 0.01));
    CHECK(std::abs(h.mean()) < 0.01 * std::sqrt(target));
    // Circular symmetry: real and imaginary parts each carry half.
    CHECK_THAT(h.real().squaredNorm() / 1e6, WithinRel(target / 2, 0.01));
}

TEST_CASE("Rayleigh - rho 2 at 1 m has variance beta")
{
    const CarrierSpec c{5e9};
    const CMatrix h = rayleigh_nlos(500, 400, 1.0, 2.0, c, 6);
    CHECK_THAT(h.squaredNorm() / 2e5, WithinRel(c.beta(), 0.015));
}

TEST_CASE("Rayleigh - invalid distance or exponent throws")
{
    const CarrierSpec c{5e9};
    REQUIRE_THROWS_AS(rayleigh_nlos(2, 2, 0.0, 3.0, c, 1), std::invalid_argument);
    REQUIRE_THROWS_AS(rayleigh_nlos(2, 2, 1.0, 1.5, c, 1), std::invalid_argument);
}

TEST_CASE("RNG - uniform range, normal moments, derived seeds differ")
{
    Rng rng(7);
    double sum = 0.0, sum2 = 0.0;
    const int n = 200000;
    for (int i = 0; i < n; ++i)
    {
        const double u = rng.uniform();
        REQUIRE(u >= 0.0);
        REQUIRE(u < 1.0);
        const double z = rng.normal();
        sum += z;
        sum2 += z * z;
    }
    CHECK(std::abs(sum / n) < 0.01);
    CHECK_THAT(sum2 / n, WithinRel(1.0, 0.02));
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) != derive_seed(2, 0));
    CHECK(derive_seed(5, 9) == derive_seed(5, 9));
}
