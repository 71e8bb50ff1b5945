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

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "irsroute/scenario.hpp"

namespace irsroute {

namespace {

using nlohmann::json;

constexpr double kUnitTolerance = 1e-6;
// Deviations below this are rounding noise and are renormalized silently.
constexpr double kRoundingNoise = 1e-12;

struct Reader
{
    std::vector<std::string> *warnings;

    const json &require(const json &obj, const std::string &key, const std::string &path) const
    {
        if (!obj.is_object() || !obj.contains(key))
            throw ScenarioError(path + key, "missing required field");
        return obj.at(key);
    }

    double number(const json &v, const std::string &path) const
    {
        if (!v.is_number())
            throw ScenarioError(path, "expected a number");
        const double x = v.get<double>();
        if (!std::isfinite(x))
            throw ScenarioError(path, "must be finite");
        return x;
    }

    int integer(const json &v, const std::string &path) const
    {
        if (!v.is_number_integer())
            throw ScenarioError(path, "expected an integer");
        return v.get<int>();
    }

    Vec3 vec3(const json &v, const std::string &path) const
    {
        if (!v.is_array() || v.size() != 3)
            throw ScenarioError(path, "expected an array of 3 numbers");
        return {number(v[0], path + "[0]"), number(v[1], path + "[1]"), number(v[2], path + "[2]")};
    }

    Vec3 unit(Vec3 v, const std::string &path) const
    {
        const double n = v.norm();
        const double dev = std::abs(n - 1.0);
        if (dev > kUnitTolerance)
            throw ScenarioError(path, "vector is not unit-norm (norm " + std::to_string(n) + ")");
        if (dev > kRoundingNoise && warnings != nullptr)
            warnings->push_back(path + ": renormalized near-unit vector");
        return v / n;
    }

    // Either an explicit vector under `key` or `<prefix>azimuth_deg` / `<prefix>elevation_deg`.
    Vec3 direction(const json &obj, const std::string &key, const std::string &prefix, const std::string &path) const
    {
        if (obj.contains(key))
            return unit(vec3(obj.at(key), path + key), path + key);
        const std::string az_key = prefix + "azimuth_deg";
        const std::string el_key = prefix + "elevation_deg";
        if (obj.contains(az_key))
        {
            const double az = number(obj.at(az_key), path + az_key) * std::numbers::pi / 180.0;
            const double el =
                obj.contains(el_key) ? number(obj.at(el_key), path + el_key) * std::numbers::pi / 180.0 : 0.0;
            return {std::cos(el) * std::cos(az), std::cos(el) * std::sin(az), std::sin(el)};
        }
        throw ScenarioError(path + key, "missing required field (or " + az_key + ")");
    }
};

template <typename T>
T optional_value(const json &obj, const std::string &key, T fallback, const Reader &rd, const std::string &path)
{
    if (!obj.contains(key))
        return fallback;
    if constexpr (std::is_same_v<T, int>)
        return rd.integer(obj.at(key), path + key);
    else
        return static_cast<T>(rd.number(obj.at(key), path + key));
}

ScenarioConfig from_json(const json &root, std::vector<std::string> *warnings)
{
    if (!root.is_object())
        throw ScenarioError("", "scenario must be a JSON object");
    Reader rd{warnings};
    ScenarioConfig sc;

    sc.carrier = CarrierSpec{optional_value<double>(root, "carrier_frequency_hz", 5e9, rd, "")};
    if (!(sc.carrier.frequency_hz > 0.0))
        throw ScenarioError("carrier_frequency_hz", "must be positive");
    sc.transmit_power_dbm = optional_value<double>(root, "transmit_power_dbm", 30.0, rd, "");
    sc.k_candidates = optional_value<int>(root, "k_candidates", 4, rd, "");
    sc.bs_codebook_size = optional_value<int>(root, "bs_codebook_size", 16, rd, "");
    sc.irs_codebook_size_per_dim = optional_value<int>(root, "irs_codebook_size_per_dim", 64, rd, "");
    if (root.contains("seed"))
    {
        const auto &s = root.at("seed");
        if (!s.is_number_unsigned() && !(s.is_number_integer() && s.get<long long>() >= 0))
            throw ScenarioError("seed", "expected a non-negative integer");
        sc.seed = s.get<std::uint64_t>();
    }

    const json &bs = rd.require(root, "bs", "");
    sc.bs.position = rd.vec3(rd.require(bs, "position", "bs."), "bs.position");
    sc.bs.axis = rd.direction(bs, "axis", "axis_", "bs.");
    sc.bs.n_antennas = optional_value<int>(bs, "n_antennas", 16, rd, "bs.");
    sc.bs.element_spacing_wavelengths = optional_value<double>(bs, "element_spacing_wavelengths", 0.5, rd, "bs.");

    const json &user = rd.require(root, "user", "");
    sc.user.position = rd.vec3(rd.require(user, "position", "user."), "user.position");

    std::optional<int> default_m0;
    if (root.contains("irs_m0"))
        default_m0 = rd.integer(root.at("irs_m0"), "irs_m0");
    const double default_spacing = optional_value<double>(root, "irs_element_spacing_wavelengths", 0.25, rd, "");

    if (root.contains("irs"))
    {
        const json &list = root.at("irs");
        if (!list.is_array())
            throw ScenarioError("irs", "expected an array");
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            const std::string path = "irs[" + std::to_string(i) + "].";
            const json &item = list[i];
            const Vec3 pos = rd.vec3(rd.require(item, "position", path), path + "position");
            const Vec3 normal = rd.direction(item, "normal", "", path);
            int m0 = 0;
            if (item.contains("m0"))
                m0 = rd.integer(item.at("m0"), path + "m0");
            else if (default_m0)
                m0 = *default_m0;
            else
                throw ScenarioError(path + "m0", "missing required field (or top-level irs_m0)");
            if (m0 < 1)
                throw ScenarioError(path + "m0", "must be >= 1");
            const double spacing =
                optional_value<double>(item, "element_spacing_wavelengths", default_spacing, rd, path);

            IrsPose pose = make_irs_pose(pos, normal, m0, spacing);
            if (item.contains("horizontal_axis"))
            {
                const Vec3 h = rd.unit(rd.vec3(item.at("horizontal_axis"), path + "horizontal_axis"),
                                       path + "horizontal_axis");
                if (std::abs(h.dot(pose.normal)) > kUnitTolerance)
                    throw ScenarioError(path + "horizontal_axis", "must be orthogonal to the normal");
                pose.horizontal_axis = (h - h.dot(pose.normal) * pose.normal).normalized();
                pose.vertical_axis = pose.normal.cross(pose.horizontal_axis);
            }
            sc.irs.push_back(pose);
        }
    }

    const bool has_obstacles = root.contains("obstacles");
    const bool has_pairs = root.contains("los_pairs");
    if (has_obstacles == has_pairs)
        throw ScenarioError("obstacles", "exactly one of 'obstacles' and 'los_pairs' must be given");
    if (has_obstacles)
    {
        const json &list = root.at("obstacles");
        if (!list.is_array())
            throw ScenarioError("obstacles", "expected an array");
        std::vector<Obstacle> boxes;
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            const std::string path = "obstacles[" + std::to_string(i) + "].";
            Obstacle box;
            box.min_corner = rd.vec3(rd.require(list[i], "min", path), path + "min");
            box.max_corner = rd.vec3(rd.require(list[i], "max", path), path + "max");
            boxes.push_back(box);
        }
        sc.obstacles = std::move(boxes);
    }
    else
    {
        const json &list = root.at("los_pairs");
        if (!list.is_array())
            throw ScenarioError("los_pairs", "expected an array");
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < list.size(); ++i)
        {
            const std::string path = "los_pairs[" + std::to_string(i) + "]";
            if (!list[i].is_array() || list[i].size() != 2)
                throw ScenarioError(path, "expected a pair of node indices");
            pairs.emplace_back(rd.integer(list[i][0], path + "[0]"), rd.integer(list[i][1], path + "[1]"));
        }
        sc.explicit_los_pairs = std::move(pairs);
    }

    sc.validate();
    return sc;
}

} // namespace

ScenarioConfig parse_scenario_text(const std::string &text, std::vector<std::string> *warnings)
{
    json root;
    try
    {
        root = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
        throw ScenarioError("", std::string("malformed JSON: ") + e.what());
    }
    return from_json(root, warnings);
}

ScenarioConfig parse_scenario(const std::filesystem::path &path, std::vector<std::string> *warnings)
{
    std::ifstream in(path);
    if (!in)
        throw ScenarioError("", "cannot open scenario file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario_text(buffer.str(), warnings);
}

} // namespace irsroute
