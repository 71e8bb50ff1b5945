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

#include "irsroute/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irsroute {

IrsPose make_irs_pose(const Vec3 &position, const Vec3 &normal, int m0, double spacing_wavelengths)
{
    if (m0 < 1)
        throw std::invalid_argument("make_irs_pose: m0 must be >= 1");
    const double len = normal.norm();
    if (!(len > 0.0) || !std::isfinite(len))
        throw std::invalid_argument("make_irs_pose: normal must be non-zero and finite");

    IrsPose pose;
    pose.position = position;
    pose.normal = normal / len;
    Vec3 up = Vec3::UnitZ();
    if (std::abs(pose.normal.dot(up)) > 1.0 - 1e-9)
        up = Vec3::UnitY();
    pose.horizontal_axis = up.cross(pose.normal).normalized();
    pose.vertical_axis = pose.normal.cross(pose.horizontal_axis).normalized();
    pose.m0 = m0;
    pose.element_spacing_wavelengths = spacing_wavelengths;
    return pose;
}

CVector ula_response(int n, double spacing_wavelengths, double directional_cosine)
{
    if (n < 1)
        throw std::invalid_argument("ula_response: n must be >= 1");
    CVector out(n);
    const double step = 2.0 * std::numbers::pi * spacing_wavelengths * directional_cosine;
    for (int k = 0; k < n; ++k)
        out[k] = std::polar(1.0, step * k);
    return out;
}

CVector kron(const CVector &a, const CVector &b)
{
    CVector out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i)
        out.segment(i * b.size(), b.size()) = a[i] * b;
    return out;
}

CVector upa_response(const IrsPose &pose, const Vec3 &direction)
{
    const CVector vert = ula_response(pose.m0, pose.element_spacing_wavelengths, direction.dot(pose.vertical_axis));
    const CVector horz = ula_response(pose.m0, pose.element_spacing_wavelengths, direction.dot(pose.horizontal_axis));
    return kron(vert, horz);
}

bool half_space_contains(const IrsPose &pose, const Vec3 &point)
{
    return pose.normal.dot(point - pose.position) > 0.0;
}

bool los_blocked(const Vec3 &a, const Vec3 &b, std::span<const Obstacle> obstacles)
{
    const Vec3 dir = b - a;
    for (const auto &box : obstacles)
    {
        double t_enter = 0.0, t_exit = 1.0;
        bool miss = false;
        for (int axis = 0; axis < 3 && !miss; ++axis)
        {
            const double lo = box.min_corner[axis], hi = box.max_corner[axis];
            if (dir[axis] == 0.0)
            {
                // Parallel to the slab: inside only if strictly between the faces.
                if (!(a[axis] > lo && a[axis] < hi))
                    miss = true;
                continue;
            }
            double t0 = (lo - a[axis]) / dir[axis];
            double t1 = (hi - a[axis]) / dir[axis];
            if (t0 > t1)
                std::swap(t0, t1);
            t_enter = std::max(t_enter, t0);
            t_exit = std::min(t_exit, t1);
            if (!(t_enter < t_exit))
                miss = true;
        }
        if (!miss)
            return true;
    }
    return false;
}

const Vec3 &position_of(const Endpoint &node)
{
    return std::visit([](const auto &n) -> const Vec3 & { return n.position; }, node);
}

CVector response_toward(const Endpoint &node, const Vec3 &target)
{
    const Vec3 &from = position_of(node);
    const Vec3 delta = target - from;
    const double dist = delta.norm();
    if (!(dist > 0.0))
        throw std::invalid_argument("response_toward: coincident positions");
    const Vec3 dir = delta / dist;

    if (const auto *bs = std::get_if<BsPose>(&node))
        return ula_response(bs->n_antennas, bs->element_spacing_wavelengths, dir.dot(bs->axis));
    if (const auto *irs = std::get_if<IrsPose>(&node))
        return upa_response(*irs, dir);
    return CVector::Ones(1);
}

Eigen::Index element_count(const Endpoint &node)
{
    if (const auto *bs = std::get_if<BsPose>(&node))
        return bs->n_antennas;
    if (const auto *irs = std::get_if<IrsPose>(&node))
        return irs->element_count();
    return 1;
}

} // namespace irsroute
