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

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "irsroute/channel.hpp"
#include "irsroute/codebook.hpp"
#include "irsroute/geometry.hpp"

namespace irsroute {

// Deployment description. Node 0 is the BS, nodes 1..J the IRSs and node J+1
// the user. Exactly one of `obstacles` / `explicit_los_pairs` is set.
struct ScenarioConfig
{
    CarrierSpec carrier;
    BsPose bs;
    std::vector<IrsPose> irs;
    UserPose user;
    std::optional<std::vector<Obstacle>> obstacles;
    std::optional<std::vector<std::pair<int, int>>> explicit_los_pairs;
    int bs_codebook_size = 16;
    int irs_codebook_size_per_dim = 64;
    double transmit_power_dbm = 30.0;
    int k_candidates = 4;
    std::uint64_t seed = 1;

    int irs_count() const { return static_cast<int>(irs.size()); }
    int node_count() const { return irs_count() + 2; }
    int user_node() const { return irs_count() + 1; }
    bool is_irs(int node) const { return node >= 1 && node <= irs_count(); }

    Endpoint endpoint(int node) const;
    const Vec3 &position(int node) const;
    double distance(int i, int j) const { return (position(j) - position(i)).norm(); }

    // Throws ScenarioError on structural problems (see parse rules).
    void validate() const;
};

class ScenarioError : public std::runtime_error
{
  public:
    ScenarioError(std::string field, const std::string &message)
        : std::runtime_error(field.empty() ? message : field + ": " + message), field_(std::move(field))
    {
    }
    const std::string &field() const { return field_; }

  private:
    std::string field_;
};

// BS codebook plus one IRS per-dimension codebook per distinct m0 in the scene.
class CodebookSet
{
  public:
    explicit CodebookSet(const ScenarioConfig &scenario);

    const Codebook &bs() const { return bs_; }
    const Codebook &irs(int m0) const;

  private:
    Codebook bs_;
    std::map<int, Codebook> irs_;
};

// Reads a JSON scenario file. Angles (degrees) are converted to direction
// vectors here; near-unit vectors (within 1e-6) are renormalized and reported
// through `warnings`, larger deviations are errors.
ScenarioConfig parse_scenario(const std::filesystem::path &path, std::vector<std::string> *warnings = nullptr);
ScenarioConfig parse_scenario_text(const std::string &text, std::vector<std::string> *warnings = nullptr);

} // namespace irsroute
