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

#include "irsroute/geometry.hpp"
#include "irsroute/random.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

using namespace irsroute;
using Catch::Matchers::WithinAbs;

namespace {

IrsPose pose_at_origin(int m0 = 2)
{
    IrsPose p;
    p.position = Vec3::Zero();
    p.normal = Vec3::UnitX();
    p.horizontal_axis = Vec3::UnitY();
    p.vertical_axis = Vec3::UnitZ();
    p.m0 = m0;
    return p;
}

Vec3 random_unit(Rng &rng)
{
    Vec3 v(rng.normal(), rng.normal(), rng.normal());
    return v.normalized();
}

} // namespace

TEST_CASE("ULA - broadside response is all ones")
{
    const CVector r = ula_response(4, 0.5, 0.0);
    REQUIRE(r.size() == 4);
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(r[k] - cdouble(1.0, 0.0)) < 1e-15);
}

TEST_CASE("ULA - single element is 1 for any cosine")
{
    const CVector r = ula_response(1, 0.5, 0.7);
    REQUIRE(r.size() == 1);
    CHECK(r[0] == cdouble(1.0, 0.0));
}

TEST_CASE("ULA - endfire at half wavelength alternates sign")
{
    const CVector r = ula_response(4, 0.5, 1.0);
    const cdouble expected[] = {{1, 0}, {-1, 0}, {1, 0}, {-1, 0}};
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(r[k] - expected[k]) < 1e-12);
}

TEST_CASE("ULA - element k has phase 2 pi s k c")
{
    const double s = 0.37, c = -0.61;
    const CVector r = ula_response(9, s, c);
    for (int k = 0; k < 9; ++k)
    {
        const cdouble expected = std::exp(cdouble(0.0, 2.0 * std::numbers::pi * s * k * c));
        CHECK(std::abs(r[k] - expected) < 1e-12);
    }
}

TEST_CASE("ULA - n < 1 throws")
{
    REQUIRE_THROWS_AS(ula_response(0, 0.5, 0.0), std::invalid_argument);
}

TEST_CASE("ULA - every element has unit modulus")
{
    Rng rng(11);
    for (int t = 0; t < 200; ++t)
    {
        const int n = 1 + static_cast<int>(rng.uniform() * 32);
        const CVector r = ula_response(n, 0.1 + rng.uniform(), 2.0 * rng.uniform() - 1.0);
        for (int k = 0; k < n; ++k)
            CHECK_THAT(std::abs(r[k]), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("UPA - m0 = 1 gives [1]")
{
    const CVector r = upa_response(pose_at_origin(1), Vec3(0.3, 0.4, 0.5).normalized());
    REQUIRE(r.size() == 1);
    CHECK(std::abs(r[0] - cdouble(1.0, 0.0)) < 1e-15);
}

TEST_CASE("UPA - along the normal is all ones")
{
    const IrsPose p = pose_at_origin(5);
    const CVector r = upa_response(p, p.normal);
    REQUIRE(r.size() == 25);
    for (int k = 0; k < 25; ++k)
        CHECK(std::abs(r[k] - cdouble(1.0, 0.0)) < 1e-15);
}

TEST_CASE("UPA - quarter-wavelength, vertical cosine 1 is kron([1, j], [1, 1])")
{
    IrsPose p = pose_at_origin(2);
    p.element_spacing_wavelengths = 0.25;
    const CVector r = upa_response(p, p.vertical_axis);
    const cdouble j(0.0, 1.0);
    const cdouble expected[] = {1.0, 1.0, j, j};
    for (int k = 0; k < 4; ++k)
        CHECK(std::abs(r[k] - expected[k]) < 1e-12);
}

TEST_CASE("UPA - equals kron of vertical and horizontal ULA responses")
{
    Rng rng(12);
    for (int t = 0; t < 100; ++t)
    {
        const Vec3 n = random_unit(rng);
        const IrsPose p = make_irs_pose(Vec3(rng.normal(), rng.normal(), rng.normal()), n,
                                        1 + static_cast<int>(rng.uniform() * 8));
        const Vec3 d = random_unit(rng);
        const CVector v = ula_response(p.m0, p.element_spacing_wavelengths, d.dot(p.vertical_axis));
        const CVector h = ula_response(p.m0, p.element_spacing_wavelengths, d.dot(p.horizontal_axis));
        const CVector r = upa_response(p, d);
        for (int kv = 0; kv < p.m0; ++kv)
            for (int kh = 0; kh < p.m0; ++kh)
                CHECK(std::abs(r[kv * p.m0 + kh] - v[kv] * h[kh]) < 1e-12);
    }
}

TEST_CASE("make_irs_pose - right-handed orthonormal frame")
{
    Rng rng(13);
    std::vector<Vec3> normals = {Vec3::UnitZ(), -Vec3::UnitZ(), Vec3::UnitX()};
    for (int t = 0; t < 50; ++t)
        normals.push_back(random_unit(rng));
    for (const auto &n : normals)
    {
        const IrsPose p = make_irs_pose(Vec3::Zero(), 3.0 * n, 4);
        CHECK_THAT(p.normal.norm(), WithinAbs(1.0, 1e-12));
        CHECK_THAT(p.horizontal_axis.norm(), WithinAbs(1.0, 1e-12));
        CHECK_THAT(p.vertical_axis.norm(), WithinAbs(1.0, 1e-12));
        CHECK_THAT(p.normal.dot(p.horizontal_axis), WithinAbs(0.0, 1e-12));
        CHECK_THAT(p.normal.dot(p.vertical_axis), WithinAbs(0.0, 1e-12));
        CHECK_THAT(p.horizontal_axis.dot(p.vertical_axis), WithinAbs(0.0, 1e-12));
        CHECK_THAT(p.horizontal_axis.cross(p.vertical_axis).dot(p.normal), WithinAbs(1.0, 1e-12));
    }
    REQUIRE_THROWS_AS(make_irs_pose(Vec3::Zero(), Vec3::Zero(), 4), std::invalid_argument);
    REQUIRE_THROWS_AS(make_irs_pose(Vec3::Zero(), Vec3::UnitX(), 0), std::invalid_argument);
}

TEST_CASE("Half-space - front, back and in-plane points")
{
    const IrsPose p = pose_at_origin();
    CHECK(half_space_contains(p, Vec3(1, 0, 0)));
    CHECK_FALSE(half_space_contains(p, Vec3(-1, 0, 0)));
    CHECK_FALSE(half_space_contains(p, Vec3(0, 1, 0)));
}

TEST_CASE("Half-space - flipping the normal never keeps a point inside")
{
    Rng rng(14);
    for (int t = 0; t < 1000; ++t)
    {
        IrsPose p = make_irs_pose(Vec3(rng.normal(), rng.normal(), rng.normal()), random_unit(rng), 2);
        const Vec3 q(rng.normal(), rng.normal(), rng.normal());
        const bool front = half_space_contains(p, q);
        p.normal = -p.normal;
        CHECK_FALSE((front && half_space_contains(p, q)));
    }
}

TEST_CASE("LoS - no obstacles never blocks")
{
    CHECK_FALSE(los_blocked(Vec3(0, 0, 0), Vec3(2, 0, 0), {}));
}

TEST_CASE("LoS - segment through a box is blocked")
{
    const std::vector<Obstacle> boxes = {{Vec3(0.5, -1, -1), Vec3(1.5, 1, 1)}};
    CHECK(los_blocked(Vec3(0, 0, 0), Vec3(2, 0, 0), boxes));
}

TEST_CASE("LoS - segment passing beside a box is clear")
{
    const std::vector<Obstacle> boxes = {{Vec3(0.5, -1, -1), Vec3(1.5, 1, 1)}};
    CHECK_FALSE(los_blocked(Vec3(0, 2, 0), Vec3(2, 2, 0), boxes));
    CHECK_FALSE(los_blocked(Vec3(0, 0, 0), Vec3(0.4, 0, 0), boxes));  // stops short
    CHECK_FALSE(los_blocked(Vec3(0, 1, 0), Vec3(2, 1, 0), boxes));    // grazes a face
}

TEST_CASE("LoS - endpoint inside a box is blocked")
{
    const std::vector<Obstacle> boxes = {{Vec3(-1, -1, -1), Vec3(1, 1, 1)}};
    CHECK(los_blocked(Vec3(0, 0, 0), Vec3(5, 5, 5), boxes));
}

TEST_CASE("LoS - blocking is symmetric in the endpoints")
{
    Rng rng(15);
    const std::vector<Obstacle> boxes = {{Vec3(-0.5, -0.5, -0.5), Vec3(0.5, 0.5, 0.5)},
                                         {Vec3(1.0, -2.0, 0.0), Vec3(1.2, 2.0, 1.0)}};
    int blocked = 0;
    for (int t = 0; t < 5000; ++t)
    {
        const Vec3 a(2 * rng.normal(), 2 * rng.normal(), 2 * rng.normal());
        const Vec3 b(2 * rng.normal(), 2 * rng.normal(), 2 * rng.normal());
        const bool ab = los_blocked(a, b, boxes);
        CHECK(ab == los_blocked(b, a, boxes));
        blocked += ab ? 1 : 0;
    }
    CHECK(blocked > 100);
    CHECK(blocked < 4900);
}

TEST_CASE("Responses - user is scalar 1, BS follows its axis")
{
    const UserPose u{Vec3(1, 2, 3)};
    const CVector ru = response_toward(Endpoint(u), Vec3(0, 0, 0));
    REQUIRE(ru.size() == 1);
    CHECK(ru[0] == cdouble(1.0, 0.0));

    BsPose bs;
    bs.n_antennas = 6;
    bs.axis = Vec3::UnitY();
    const CVector rb = response_toward(Endpoint(bs), Vec3(0, 3, 4));
    const CVector expected = ula_response(6, 0.5, 0.6);
    CHECK((rb - expected).norm() < 1e-12);
    REQUIRE_THROWS_AS(response_toward(Endpoint(bs), bs.position), std::invalid_argument);
}
