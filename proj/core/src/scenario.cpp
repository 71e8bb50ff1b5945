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

#include "irsroute/scenario.hpp"

#include <cmath>

namespace irsroute {

Endpoint ScenarioConfig::endpoint(int node) const
{
    if (node == 0)
        return bs;
    if (is_irs(node))
        return irs[static_cast<std::size_t>(node - 1)];
    if (node == user_node())
        return user;
    throw std::out_of_range("ScenarioConfig: node index out of range");
}

const Vec3 &ScenarioConfig::position(int node) const
{
    if (node == 0)
        return bs.position;
    if (is_irs(node))
        return irs[static_cast<std::size_t>(node - 1)].position;
    if (node == user_node())
        return user.position;
    throw std::out_of_range("ScenarioConfig: node index out of range");
}

void ScenarioConfig::validate() const
{
    CarrierSpec::at(carrier.frequency_hz);
    if (obstacles.has_value() == explicit_los_pairs.has_value())
        throw ScenarioError("obstacles", "exactly one of 'obstacles' and 'los_pairs' must be given");
    if (bs.n_antennas < 1)
        throw ScenarioError("bs.n_antennas", "must be >= 1");
    if (bs_codebook_size < bs.n_antennas)
        throw ScenarioError("bs_codebook_size", "must be >= bs.n_antennas");
    if (irs_codebook_size_per_dim < 1)
        throw ScenarioError("irs_codebook_size_per_dim", "must be >= 1");
    if (k_candidates < 1)
        throw ScenarioError("k_candidates", "must be >= 1");

    auto orthonormal = [](const Vec3 &a, const Vec3 &b) {
        return std::abs(a.norm() - 1.0) < 1e-9 && std::abs(b.norm() - 1.0) < 1e-9 && std::abs(a.dot(b)) < 1e-9;
    };
    for (std::size_t i = 0; i < irs.size(); ++i)
    {
        const auto &p = irs[i];
        const std::string field = "irs[" + std::to_string(i) + "]";
        if (p.m0 < 1)
            throw ScenarioError(field + ".m0", "must be >= 1");
        if (!orthonormal(p.normal, p.horizontal_axis) || !orthonormal(p.normal, p.vertical_axis) ||
            !orthonormal(p.horizontal_axis, p.vertical_axis))
            throw ScenarioError(field, "normal and array axes must be orthonormal");
    }

    for (int i = 0; i < node_count(); ++i)
        for (int j = i + 1; j < node_count(); ++j)
            if (!(distance(i, j) > 0.0))
                throw ScenarioError("positions", "nodes " + std::to_string(i) + " and " + std::to_string(j) +
                                                     " coincide");

    if (obstacles)
        for (std::size_t i = 0; i < obstacles->size(); ++i)
        {
            const auto &box = (*obstacles)[i];
            if ((box.min_corner.array() > box.max_corner.array()).any())
                throw ScenarioError("obstacles[" + std::to_string(i) + "]", "min corner exceeds max corner");
        }
    if (explicit_los_pairs)
        for (const auto &[a, b] : *explicit_los_pairs)
            if (a < 0 || b < 0 || a >= node_count() || b >= node_count() || a == b)
                throw ScenarioError("los_pairs", "invalid pair (" + std::to_string(a) + ", " + std::to_string(b) + ")");
}

CodebookSet::CodebookSet(const ScenarioConfig &scenario)
    : bs_(dft_codebook(scenario.bs_codebook_size, scenario.bs.n_antennas))
{
    for (const auto &p : scenario.irs)
        if (!irs_.contains(p.m0))
            irs_.emplace(p.m0, dft_grid_codebook(scenario.irs_codebook_size_per_dim, p.m0));
}

const Codebook &CodebookSet::irs(int m0) const
{
    const auto it = irs_.find(m0);
    if (it == irs_.end())
        throw std::out_of_range("CodebookSet: no IRS codebook for m0 = " + std::to_string(m0));
    return it->second;
}

} // namespace irsroute
