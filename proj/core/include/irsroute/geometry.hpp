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

#pragma once

#include <complex>
#include <span>
#include <variant>

#include <Eigen/Dense>

namespace irsroute {

using Vec3 = Eigen::Vector3d;
using cdouble = std::complex<double>;
using CVector = Eigen::VectorXcd;
using CMatrix = Eigen::MatrixXcd;
using CRowVector = Eigen::RowVectorXcd;

// Uniform planar array of m0 x m0 reflecting elements. The three axes form an
// orthonormal frame; the normal points into the reflection half-space.
struct IrsPose
{
    Vec3 position = Vec3::Zero();
    Vec3 normal = Vec3::UnitX();
    Vec3 horizontal_axis = Vec3::UnitY();
    Vec3 vertical_axis = Vec3::UnitZ();
    int m0 = 1;
    double element_spacing_wavelengths = 0.25;

    int element_count() const { return m0 * m0; }
};

// Uniform linear array along `axis`.
struct BsPose
{
    Vec3 position = Vec3::Zero();
    Vec3 axis = Vec3::UnitY();
    int n_antennas = 1;
    double element_spacing_wavelengths = 0.5;
};

// Single-antenna receiver.
struct UserPose
{
    Vec3 position = Vec3::Zero();
};

// Axis-aligned box.
struct Obstacle
{
    Vec3 min_corner = Vec3::Zero();
    Vec3 max_corner = Vec3::Zero();
};

using Endpoint = std::variant<BsPose, IrsPose, UserPose>;

// Builds an IRS pose from a facing direction. The horizontal axis is taken
// perpendicular to both the normal and +z (or +y when the normal is vertical),
// and the vertical axis completes the right-handed frame.
IrsPose make_irs_pose(const Vec3 &position, const Vec3 &normal, int m0, double spacing_wavelengths = 0.25);

// Steering vector of an n-element ULA: element k = exp(j 2 pi s k c).
CVector ula_response(int n, double spacing_wavelengths, double directional_cosine);

// UPA response toward a unit direction. Element ordering is vertical-major:
// index = kv * m0 + kh, i.e. kron(ula(<d, vertical>), ula(<d, horizontal>)).
CVector upa_response(const IrsPose &pose, const Vec3 &direction);

// Strict: points in the surface plane are outside.
bool half_space_contains(const IrsPose &pose, const Vec3 &point);

// True iff the open segment (a, b) passes through the interior of any box.
bool los_blocked(const Vec3 &a, const Vec3 &b, std::span<const Obstacle> obstacles);

const Vec3 &position_of(const Endpoint &node);

// Array response of `node` toward `target`. A user has the scalar response 1.
CVector response_toward(const Endpoint &node, const Vec3 &target);

Eigen::Index element_count(const Endpoint &node);

// Kronecker product of two vectors, a-major.
CVector kron(const CVector &a, const CVector &b);

} // namespace irsroute
