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

#include "irsroute/fullchannel.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "irsroute/random.hpp"

namespace irsroute {

CVector compose_precoder(std::span<const CVector> beams, std::span<const double> alphas,
                         std::span<const double> phases)
{
    if (beams.empty())
        throw std::invalid_argument("compose_precoder: no beams");
    if (beams.size() != alphas.size() || beams.size() != phases.size())
        throw std::invalid_argument("compose_precoder: length mismatch");
    double alpha_sum = 0.0;
    for (double a : alphas)
    {
        if (a < 0.0)
            throw std::invalid_argument("compose_precoder: negative power fraction");
        alpha_sum += a;
    }
    if (std::abs(alpha_sum - 1.0) > 1e-9)
        throw std::invalid_argument("compose_precoder: power fractions must sum to 1");

    CVector w = CVector::Zero(beams.front().size());
    for (std::size_t q = 0; q < beams.size(); ++q)
    {
        if (beams[q].size() != w.size())
            throw std::invalid_argument("compose_precoder: beam length mismatch");
        w += std::sqrt(alphas[q]) * std::polar(1.0, -phases[q]) * beams[q];
    }
    const double norm = w.norm();
    if (std::abs(norm - 1.0) > 1e-12 && norm > 0.0)
        w /= norm;
    return w;
}

NetworkConfiguration configure_network(const RoutingSolution &solution, const CodebookSet &codebooks)
{
    if (!solution.feasible())
        throw std::invalid_argument("configure_network: infeasible solution");
    NetworkConfiguration config;
    std::vector<CVector> beams;
    std::vector<double> phases;
    for (const auto &path : solution.paths)
    {
        beams.push_back(codebooks.bs()[path.bs_beam_index]);
        phases.push_back(path.phase);
        for (std::size_t l = 0; l < path.irs_sequence.size(); ++l)
            config.active_irs[path.irs_sequence[l]] = path.irs_selections[l].theta;
    }
    config.bs_precoder = compose_precoder(beams, solution.alphas, phases);
    return config;
}

namespace {

void check_configuration(const ScenarioConfig &scenario, const LosGraph &graph, const NetworkConfiguration &config)
{
    if (graph.node_count() != scenario.node_count())
        throw std::invalid_argument("channel evaluation: graph does not match scenario");
    if (config.bs_precoder.size() != scenario.bs.n_antennas)
        throw std::invalid_argument("channel evaluation: precoder length != N_B");
    for (const auto &[node, theta] : config.active_irs)
    {
        if (!scenario.is_irs(node))
            throw std::invalid_argument("channel evaluation: node " + std::to_string(node) + " is not an IRS");
        if (theta.size() != scenario.irs[static_cast<std::size_t>(node - 1)].element_count())
            throw std::invalid_argument("channel evaluation: theta length mismatch at IRS " + std::to_string(node));
    }
}

bool is_active(const NetworkConfiguration &config, int node)
{
    return config.active_irs.contains(node);
}

} // namespace

CompositeChannel effective_channel_dp(const LosGraph &graph, const ScenarioConfig &scenario,
                                      const NetworkConfiguration &config)
{
    check_configuration(scenario, graph, config);
    const int user = scenario.user_node();
    const auto n_b = static_cast<Eigen::Index>(scenario.bs.n_antennas);

    // incident[j]: field impinging on IRS j per BS antenna (M_j x N_B).
    std::map<int, CMatrix> incident;
    for (const auto &[node, theta] : config.active_irs)
        incident.emplace(node, CMatrix::Zero(theta.size(), n_b));

    CompositeChannel out;
    out.row_vector = CRowVector::Zero(n_b);

    for (int u : graph.topological_order())
    {
        if (u == user || (u != 0 && !is_active(config, u)))
            continue;
        const Endpoint tx = scenario.endpoint(u);

        CMatrix reflected;
        if (u != 0)
            reflected = config.active_irs.at(u).asDiagonal() * incident.at(u);

        for (const auto &e : graph.successors(u))
        {
            if (e.to != user && !is_active(config, e.to))
                continue;
            const LosChannel link = los_link(tx, scenario.endpoint(e.to), scenario.carrier);
            if (u == 0)
            {
                incident.at(e.to).noalias() += link.amplitude * link.rx_response * link.tx_response.adjoint();
                continue;
            }
            const CRowVector projected = link.amplitude * (link.tx_response.adjoint() * reflected);
            if (e.to == user)
                out.row_vector += link.rx_response[0] * projected;
            else
                incident.at(e.to).noalias() += link.rx_response * projected;
        }
    }
    return out;
}

CompositeChannel path_sum_channel(const LosGraph &graph, const ScenarioConfig &scenario,
                                  const NetworkConfiguration &config, std::size_t cap)
{
    check_configuration(scenario, graph, config);
    const int user = scenario.user_node();
    CompositeChannel out;
    out.row_vector = CRowVector::Zero(scenario.bs.n_antennas);

    std::vector<std::vector<int>> paths;
    std::vector<int> stack{0};
    std::function<void(int)> dfs = [&](int u) {
        for (const auto &e : graph.successors(u))
        {
            if (e.to != user && !is_active(config, e.to))
                continue;
            stack.push_back(e.to);
            if (e.to == user)
            {
                if (paths.size() >= cap)
                    throw std::length_error("path_sum_channel: more than " + std::to_string(cap) + " paths");
                paths.push_back(stack);
            }
            else
                dfs(e.to);
            stack.pop_back();
        }
    };
    dfs(0);

    for (const auto &nodes : paths)
    {
        // h = g^H Phi_L S Phi ... H, evaluated with explicit dense matrices.
        CMatrix cascade = los_link(scenario.endpoint(0), scenario.endpoint(nodes[1]), scenario.carrier).matrix();
        for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
        {
            const CMatrix phi = config.active_irs.at(nodes[i]).asDiagonal();
            const CMatrix hop =
                los_link(scenario.endpoint(nodes[i]), scenario.endpoint(nodes[i + 1]), scenario.carrier).matrix();
            cascade = hop * phi * cascade;
        }
        const CRowVector contribution = cascade.row(0);
        out.row_vector += contribution;
        out.per_path_contributions.emplace(nodes, contribution);
    }
    return out;
}

double dbm_to_mw(double dbm)
{
    return std::pow(10.0, dbm / 10.0);
}

double mw_to_dbm(double mw)
{
    if (!(mw > 0.0))
        return -std::numeric_limits<double>::infinity();
    return 10.0 * std::log10(mw);
}

ReceivedPower received_power(const CompositeChannel &channel, const CVector &precoder, double transmit_power_dbm)
{
    if (channel.row_vector.size() != precoder.size())
        throw std::invalid_argument("received_power: precoder length mismatch");
    const cdouble h = channel.row_vector * precoder;
    ReceivedPower p;
    p.linear_mw = dbm_to_mw(transmit_power_dbm) * std::norm(h);
    p.dbm = mw_to_dbm(p.linear_mw);
    return p;
}

double random_phase_power(std::span<const double> amplitudes, std::span<const double> alphas, std::uint64_t seed)
{
    if (amplitudes.size() != alphas.size())
        throw std::invalid_argument("random_phase_power: length mismatch");
    Rng rng(seed);
    cdouble sum{};
    for (std::size_t q = 0; q < amplitudes.size(); ++q)
        sum += std::sqrt(alphas[q]) * amplitudes[q] * std::polar(1.0, 2.0 * std::numbers::pi * rng.uniform());
    return std::norm(sum);
}

LosGraph routed_subgraph(const LosGraph &graph, const RoutingSolution &solution)
{
    LosGraph sub(graph.node_count());
    for (const auto &path : solution.paths)
    {
        const auto nodes = path.nodes(graph.user_node());
        for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
            if (!sub.has_edge(nodes[i], nodes[i + 1]))
                sub.add_edge(nodes[i], nodes[i + 1], graph.distance(nodes[i], nodes[i + 1]));
    }
    return sub;
}

} // namespace irsroute
