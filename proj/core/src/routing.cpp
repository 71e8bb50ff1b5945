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

#include "irsroute/routing.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>
#include <stdexcept>
#include <string>

namespace irsroute {

// ---------------------------------------------------------------------------
// LosGraph
// ---------------------------------------------------------------------------

LosGraph::LosGraph(int node_count)
{
    if (node_count < 2)
        throw std::invalid_argument("LosGraph: need at least the BS and the user");
    out_.resize(static_cast<std::size_t>(node_count));
}

void LosGraph::add_edge(int from, int to, double distance)
{
    const int n = node_count();
    if (from < 0 || to < 0 || from >= n || to >= n)
        throw std::out_of_range("LosGraph::add_edge: node out of range");
    if (from == to)
        throw std::invalid_argument("LosGraph::add_edge: self-loop");
    if (to == 0)
        throw std::invalid_argument("LosGraph::add_edge: edge into the BS");
    if (from == user_node())
        throw std::invalid_argument("LosGraph::add_edge: edge out of the user");
    if (from == 0 && to == user_node())
        throw std::invalid_argument("LosGraph::add_edge: direct BS-user edge");
    if (has_edge(from, to))
        throw std::invalid_argument("LosGraph::add_edge: duplicate edge");
    auto &list = out_[static_cast<std::size_t>(from)];
    const auto pos = std::lower_bound(list.begin(), list.end(), to,
                                      [](const LosEdge &e, int target) { return e.to < target; });
    list.insert(pos, LosEdge{to, distance});
}

bool LosGraph::has_edge(int from, int to) const
{
    if (from < 0 || from >= node_count())
        return false;
    const auto &list = out_[static_cast<std::size_t>(from)];
    return std::any_of(list.begin(), list.end(), [to](const LosEdge &e) { return e.to == to; });
}

double LosGraph::distance(int from, int to) const
{
    for (const auto &e : successors(from))
        if (e.to == to)
            return e.distance;
    throw std::out_of_range("LosGraph::distance: no edge " + std::to_string(from) + "->" + std::to_string(to));
}

std::vector<std::pair<int, int>> LosGraph::edges() const
{
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < node_count(); ++i)
        for (const auto &e : out_[static_cast<std::size_t>(i)])
            list.emplace_back(i, e.to);
    return list;
}

std::size_t LosGraph::edge_count() const
{
    std::size_t n = 0;
    for (const auto &list : out_)
        n += list.size();
    return n;
}

std::vector<int> LosGraph::topological_order() const
{
    std::vector<int> indegree(static_cast<std::size_t>(node_count()), 0);
    for (const auto &list : out_)
        for (const auto &e : list)
            ++indegree[static_cast<std::size_t>(e.to)];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (int i = 0; i < node_count(); ++i)
        if (indegree[static_cast<std::size_t>(i)] == 0)
            ready.push(i);
    std::vector<int> order;
    while (!ready.empty())
    {
        const int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (const auto &e : out_[static_cast<std::size_t>(u)])
            if (--indegree[static_cast<std::size_t>(e.to)] == 0)
                ready.push(e.to);
    }
    if (static_cast<int>(order.size()) != node_count())
        throw std::logic_error("LosGraph: cycle detected");
    return order;
}

LosGraph build_los_graph(const ScenarioConfig &scenario)
{
    scenario.validate();
    LosGraph graph(scenario.node_count());
    const int user = scenario.user_node();

    auto line_of_sight = [&](int i, int j) {
        if (scenario.obstacles)
            return !los_blocked(scenario.position(i), scenario.position(j), *scenario.obstacles);
        for (const auto &[a, b] : *scenario.explicit_los_pairs)
            if ((a == i && b == j) || (a == j && b == i))
                return true;
        return false;
    };

    for (int i = 0; i < user; ++i)
        for (int j = 1; j <= user; ++j)
        {
            if (i == j || (i == 0 && j == user))
                continue;
            if (scenario.is_irs(i) &&
                !half_space_contains(scenario.irs[static_cast<std::size_t>(i - 1)], scenario.position(j)))
                continue;
            if (scenario.is_irs(j) &&
                !half_space_contains(scenario.irs[static_cast<std::size_t>(j - 1)], scenario.position(i)))
                continue;
            if (j != user && !(scenario.distance(0, j) > scenario.distance(0, i)))
                continue;
            if (!line_of_sight(i, j))
                continue;
            graph.add_edge(i, j, scenario.distance(i, j));
        }
    return graph;
}

// ---------------------------------------------------------------------------
// Path gains
// ---------------------------------------------------------------------------

std::vector<int> CandidatePath::nodes(int user_node) const
{
    std::vector<int> seq;
    seq.reserve(irs_sequence.size() + 2);
    seq.push_back(0);
    seq.insert(seq.end(), irs_sequence.begin(), irs_sequence.end());
    seq.push_back(user_node);
    return seq;
}

PathEvaluator::PathEvaluator(const ScenarioConfig &scenario, const LosGraph &graph, const CodebookSet &codebooks)
    : scenario_(scenario), graph_(graph), codebooks_(codebooks)
{
    if (graph.node_count() != scenario.node_count())
        throw std::invalid_argument("PathEvaluator: graph does not match scenario");
}

const IrsBeamSelection &PathEvaluator::hop(int prev, int cur, int next) const
{
    const auto key = std::make_tuple(prev, cur, next);
    if (auto it = hops_.find(key); it != hops_.end())
        return it->second;
    const Endpoint node = scenario_.endpoint(cur);
    const CVector incoming = response_toward(node, scenario_.position(prev));
    const CVector outgoing = response_toward(node, scenario_.position(next));
    const Codebook &cb = codebooks_.irs(scenario_.irs[static_cast<std::size_t>(cur - 1)].m0);
    return hops_.emplace(key, best_irs_beam(cb, cb, incoming, outgoing)).first->second;
}

const BsBeamChoice &PathEvaluator::bs_beam(int first_irs) const
{
    if (auto it = bs_beams_.find(first_irs); it != bs_beams_.end())
        return it->second;
    const CVector response = response_toward(scenario_.endpoint(0), scenario_.position(first_irs));
    return bs_beams_.emplace(first_irs, best_bs_beam(codebooks_.bs(), response)).first->second;
}

CandidatePath PathEvaluator::evaluate(std::span<const int> irs_sequence) const
{
    if (irs_sequence.empty())
        throw std::invalid_argument("path_gain_exact: path must contain at least one IRS");
    CandidatePath path;
    path.irs_sequence.assign(irs_sequence.begin(), irs_sequence.end());
    const std::vector<int> nodes = path.nodes(scenario_.user_node());
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
        if (!scenario_.is_irs(nodes[i]))
            throw std::invalid_argument("path_gain_exact: node " + std::to_string(nodes[i]) + " is not an IRS");
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        if (!graph_.has_edge(nodes[i], nodes[i + 1]))
            throw std::invalid_argument("path_gain_exact: hop " + std::to_string(nodes[i]) + "->" +
                                        std::to_string(nodes[i + 1]) + " is not a LoS graph edge");

    const BsBeamChoice &bs = bs_beam(nodes[1]);
    path.bs_beam_index = bs.index;
    path.bs_value = bs.value;

    const double sqrt_beta = std::sqrt(scenario_.carrier.beta());
    cdouble gain = bs.value;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        gain *= sqrt_beta / graph_.distance(nodes[i], nodes[i + 1]);
    for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
    {
        const IrsBeamSelection &sel = hop(nodes[i - 1], nodes[i], nodes[i + 1]);
        gain *= sel.gain;
        path.irs_selections.push_back(sel);
    }
    path.gain = gain;
    path.amplitude = std::abs(gain);
    path.phase = std::arg(gain);
    return path;
}

CandidatePath path_gain_exact(std::span<const int> irs_sequence, const ScenarioConfig &scenario,
                              const LosGraph &graph, const CodebookSet &codebooks)
{
    return PathEvaluator(scenario, graph, codebooks).evaluate(irs_sequence);
}

void sort_canonical(std::vector<CandidatePath> &paths)
{
    std::stable_sort(paths.begin(), paths.end(), [](const CandidatePath &a, const CandidatePath &b) {
        if (a.amplitude != b.amplitude)
            return a.amplitude > b.amplitude;
        return a.irs_sequence < b.irs_sequence;
    });
}

WeightedDigraph idealized_edge_weights(const LosGraph &graph, const ScenarioConfig &scenario)
{
    if (graph.node_count() != scenario.node_count())
        throw std::invalid_argument("idealized_edge_weights: graph does not match scenario");
    WeightedDigraph wg;
    wg.source = 0;
    wg.target = graph.user_node();
    wg.out.resize(static_cast<std::size_t>(graph.node_count()));
    const double log_sqrt_beta = 0.5 * std::log(scenario.carrier.beta());
    for (int i = 0; i < graph.node_count(); ++i)
        for (const auto &e : graph.successors(i))
        {
            double log_gain = log_sqrt_beta - std::log(e.distance);
            if (scenario.is_irs(e.to))
                log_gain += std::log(static_cast<double>(scenario.irs[static_cast<std::size_t>(e.to - 1)].element_count()));
            if (i == 0)
                log_gain += 0.5 * std::log(static_cast<double>(scenario.bs.n_antennas));
            wg.out[static_cast<std::size_t>(i)].emplace_back(e.to, -log_gain);
        }
    return wg;
}

// ---------------------------------------------------------------------------
// Selection
// ---------------------------------------------------------------------------

std::vector<double> allocate_power(std::span<const double> amplitudes)
{
    if (amplitudes.empty())
        throw std::invalid_argument("allocate_power: no amplitudes");
    double total = 0.0;
    for (double a : amplitudes)
        total += a * a;
    if (!(total > 0.0))
        throw std::invalid_argument("allocate_power: all amplitudes are zero");
    std::vector<double> alphas;
    alphas.reserve(amplitudes.size());
    for (double a : amplitudes)
        alphas.push_back(a * a / total);
    return alphas;
}

double coherent_power(std::span<const double> amplitudes, std::span<const double> alphas)
{
    if (amplitudes.size() != alphas.size())
        throw std::invalid_argument("coherent_power: length mismatch");
    double sum = 0.0;
    for (std::size_t q = 0; q < amplitudes.size(); ++q)
        sum += std::sqrt(alphas[q]) * amplitudes[q];
    return sum * sum;
}

namespace {

bool disjoint(const CandidatePath &a, const CandidatePath &b)
{
    for (int x : a.irs_sequence)
        if (std::find(b.irs_sequence.begin(), b.irs_sequence.end(), x) != b.irs_sequence.end())
            return false;
    return true;
}

bool canonical_less(const CandidatePath &a, const CandidatePath &b)
{
    if (a.amplitude != b.amplitude)
        return a.amplitude > b.amplitude;
    return a.irs_sequence < b.irs_sequence;
}

double power_sum_canonical(std::span<const CandidatePath> paths, std::vector<int> members)
{
    std::stable_sort(members.begin(), members.end(), [&](int a, int b) {
        return canonical_less(paths[static_cast<std::size_t>(a)], paths[static_cast<std::size_t>(b)]);
    });
    double sum = 0.0;
    for (int m : members)
    {
        const double a = paths[static_cast<std::size_t>(m)].amplitude;
        sum += a * a;
    }
    return sum;
}

} // namespace

RoutingSolution make_solution(std::vector<CandidatePath> paths)
{
    RoutingSolution sol;
    if (paths.empty())
        return sol;
    for (std::size_t a = 0; a < paths.size(); ++a)
        for (std::size_t b = a + 1; b < paths.size(); ++b)
            if (!disjoint(paths[a], paths[b]))
                throw std::logic_error("make_solution: paths share an IRS");
    sort_canonical(paths);
    std::vector<double> amps;
    for (const auto &p : paths)
    {
        amps.push_back(p.amplitude);
        sol.gamma_u += p.amplitude * p.amplitude;
    }
    sol.alphas = allocate_power(amps);
    sol.paths = std::move(paths);
    sol.status = RouteStatus::ok;
    return sol;
}

RoutingSolution select_best(std::span<const CandidatePath> paths, std::span<const Clique> cliques)
{
    if (paths.empty() || cliques.empty())
        return {};
    double best = -1.0;
    const Clique *chosen = nullptr;
    for (const auto &clique : cliques)
    {
        for (int m : clique)
            if (m < 0 || static_cast<std::size_t>(m) >= paths.size())
                throw std::out_of_range("select_best: clique member out of range");
        const double value = power_sum_canonical(paths, clique);
        if (value > best)
        {
            best = value;
            chosen = &clique;
        }
    }
    std::vector<CandidatePath> members;
    for (int m : *chosen)
        members.push_back(paths[static_cast<std::size_t>(m)]);
    return make_solution(std::move(members));
}

std::vector<std::vector<int>> enumerate_simple_paths(const LosGraph &graph, std::size_t cap)
{
    std::vector<std::vector<int>> result;
    std::vector<int> stack{0};
    std::vector<char> on_path(static_cast<std::size_t>(graph.node_count()), 0);
    on_path[0] = 1;
    const int user = graph.user_node();

    std::function<void(int)> dfs = [&](int u) {
        for (const auto &e : graph.successors(u))
        {
            if (on_path[static_cast<std::size_t>(e.to)])
                continue;
            stack.push_back(e.to);
            if (e.to == user)
            {
                if (result.size() >= cap)
                    throw std::length_error("enumerate_simple_paths: more than " + std::to_string(cap) + " paths");
                result.push_back(stack);
            }
            else
            {
                on_path[static_cast<std::size_t>(e.to)] = 1;
                dfs(e.to);
                on_path[static_cast<std::size_t>(e.to)] = 0;
            }
            stack.pop_back();
        }
    };
    dfs(0);
    return result;
}

namespace {

std::vector<CandidatePath> evaluate_all(const PathEvaluator &ev, const std::vector<std::vector<int>> &node_paths)
{
    std::vector<CandidatePath> out;
    out.reserve(node_paths.size());
    for (const auto &nodes : node_paths)
        out.push_back(ev.evaluate(std::span<const int>(nodes).subspan(1, nodes.size() - 2)));
    return out;
}

} // namespace

RoutingSolution brute_force_route(const LosGraph &graph, const ScenarioConfig &scenario,
                                  const CodebookSet &codebooks, int max_paths, std::size_t path_cap)
{
    if (max_paths < 0)
        max_paths = static_cast<int>(graph.successors(0).size());
    const PathEvaluator ev(scenario, graph, codebooks);
    std::vector<CandidatePath> paths = evaluate_all(ev, enumerate_simple_paths(graph, path_cap));
    if (paths.empty() || max_paths == 0)
        return {};
    sort_canonical(paths);

    const auto n = paths.size();
    std::vector<std::vector<char>> compatible(n, std::vector<char>(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            compatible[a][b] = compatible[b][a] = disjoint(paths[a], paths[b]) ? 1 : 0;

    // Members are visited in canonical (index) order, so the running sum is
    // accumulated in the same order select_best uses.
    std::vector<int> current, best_set;
    double best = -1.0;
    std::function<void(std::size_t, double)> search = [&](std::size_t start, double sum) {
        if (!current.empty() && sum > best)
        {
            best = sum;
            best_set = current;
        }
        if (static_cast<int>(current.size()) >= max_paths)
            return;
        for (std::size_t c = start; c < n; ++c)
        {
            bool ok = true;
            for (int m : current)
                if (!compatible[static_cast<std::size_t>(m)][c])
                {
                    ok = false;
                    break;
                }
            if (!ok)
                continue;
            current.push_back(static_cast<int>(c));
            search(c + 1, sum + paths[c].amplitude * paths[c].amplitude);
            current.pop_back();
        }
    };
    search(0, 0.0);

    std::vector<CandidatePath> members;
    for (int m : best_set)
        members.push_back(paths[static_cast<std::size_t>(m)]);
    return make_solution(std::move(members));
}

CbaResult route_cba(const ScenarioConfig &scenario, const LosGraph &graph, const CodebookSet &codebooks, int k,
                    int clique_cap)
{
    CbaResult result;
    const auto ranked = yen_k_paths(idealized_edge_weights(graph, scenario), k);
    const PathEvaluator ev(scenario, graph, codebooks);
    for (const auto &wp : ranked)
        result.candidates.push_back(
            ev.evaluate(std::span<const int>(wp.nodes).subspan(1, wp.nodes.size() - 2)));
    if (result.candidates.empty())
        return result;
    sort_canonical(result.candidates);
    result.cliques = maximal_cliques(build_path_graph(result.candidates), clique_cap);
    result.solution = select_best(result.candidates, result.cliques);
    return result;
}

RoutingSolution best_single_path(const ScenarioConfig &scenario, const LosGraph &graph,
                                 const CodebookSet &codebooks, std::size_t path_cap)
{
    std::vector<std::vector<int>> node_paths;
    try
    {
        node_paths = enumerate_simple_paths(graph, path_cap);
    }
    catch (const std::length_error &)
    {
        for (auto &wp : yen_k_paths(idealized_edge_weights(graph, scenario), 64))
            node_paths.push_back(std::move(wp.nodes));
    }
    const PathEvaluator ev(scenario, graph, codebooks);
    std::vector<CandidatePath> paths = evaluate_all(ev, node_paths);
    if (paths.empty())
        return {};
    sort_canonical(paths);
    return make_solution({paths.front()});
}

} // namespace irsroute
