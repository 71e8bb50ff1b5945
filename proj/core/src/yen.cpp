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

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>

#include "irsroute/routing.hpp"

namespace irsroute {

namespace {

std::vector<int> topological_order(const WeightedDigraph &g)
{
    const auto n = static_cast<std::size_t>(g.node_count());
    std::vector<int> indegree(n, 0);
    for (const auto &list : g.out)
        for (const auto &[to, w] : list)
            ++indegree[static_cast<std::size_t>(to)];
    std::priority_queue<int, std::vector<int>, std::greater<>> ready;
    for (std::size_t i = 0; i < n; ++i)
        if (indegree[i] == 0)
            ready.push(static_cast<int>(i));
    std::vector<int> order;
    while (!ready.empty())
    {
        const int u = ready.top();
        ready.pop();
        order.push_back(u);
        for (const auto &[to, w] : g.out[static_cast<std::size_t>(u)])
            if (--indegree[static_cast<std::size_t>(to)] == 0)
                ready.push(to);
    }
    if (order.size() != n)
        throw std::invalid_argument("yen_k_paths: graph must be acyclic");
    return order;
}

double edge_weight(const WeightedDigraph &g, int u, int v)
{
    for (const auto &[to, w] : g.out[static_cast<std::size_t>(u)])
        if (to == v)
            return w;
    throw std::logic_error("yen_k_paths: missing edge");
}

double path_weight(const WeightedDigraph &g, const std::vector<int> &nodes)
{
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
        total += edge_weight(g, nodes[i], nodes[i + 1]);
    return total;
}

// Lexicographically smallest among the minimum-weight s-t paths, skipping
// banned nodes and edges. Costs-to-go are relaxed in reverse topological order
// (valid for negative weights on a DAG); the path is then rebuilt forward,
// taking the lowest-index successor that attains the optimum. The comparison
// recomputes the exact expression used in the relaxation, so ties are exact.
std::optional<std::vector<int>> shortest_path(const WeightedDigraph &g, const std::vector<int> &order, int s, int t,
                                              const std::vector<char> &banned_node,
                                              const std::set<std::pair<int, int>> &banned_edge)
{
    const auto n = static_cast<std::size_t>(g.node_count());
    constexpr double inf = std::numeric_limits<double>::infinity();
    std::vector<double> to_go(n, inf);
    if (banned_node[static_cast<std::size_t>(t)] || banned_node[static_cast<std::size_t>(s)])
        return std::nullopt;
    to_go[static_cast<std::size_t>(t)] = 0.0;
    auto usable = [&](int u, int v) {
        return !banned_node[static_cast<std::size_t>(v)] && !banned_edge.contains({u, v}) &&
               to_go[static_cast<std::size_t>(v)] != inf;
    };
    for (auto it = order.rbegin(); it != order.rend(); ++it)
    {
        const int u = *it;
        if (u == t || banned_node[static_cast<std::size_t>(u)])
            continue;
        for (const auto &[v, w] : g.out[static_cast<std::size_t>(u)])
            if (usable(u, v))
                to_go[static_cast<std::size_t>(u)] = std::min(to_go[static_cast<std::size_t>(u)],
                                                              w + to_go[static_cast<std::size_t>(v)]);
    }
    if (to_go[static_cast<std::size_t>(s)] == inf)
        return std::nullopt;
    std::vector<int> path{s};
    while (path.back() != t)
    {
        const int u = path.back();
        int next = -1;
        for (const auto &[v, w] : g.out[static_cast<std::size_t>(u)])
            if (usable(u, v) && w + to_go[static_cast<std::size_t>(v)] == to_go[static_cast<std::size_t>(u)] &&
                (next < 0 || v < next))
                next = v;
        if (next < 0)
            throw std::logic_error("yen_k_paths: inconsistent costs-to-go");
        path.push_back(next);
    }
    return path;
}

} // namespace

std::vector<WeightedPath> yen_k_paths(const WeightedDigraph &graph, int k)
{
    if (k < 1)
        throw std::invalid_argument("yen_k_paths: k must be >= 1");
    const int n = graph.node_count();
    if (graph.source < 0 || graph.source >= n || graph.target < 0 || graph.target >= n)
        throw std::out_of_range("yen_k_paths: source or target out of range");
    const std::vector<int> order = topological_order(graph);

    std::vector<WeightedPath> accepted;
    const std::vector<char> none(static_cast<std::size_t>(n), 0);
    auto first = shortest_path(graph, order, graph.source, graph.target, none, {});
    if (!first)
        return accepted;
    accepted.push_back({*first, path_weight(graph, *first)});

    std::set<std::pair<double, std::vector<int>>> candidates;
    std::set<std::vector<int>> seen{*first};

    while (static_cast<int>(accepted.size()) < k)
    {
        const std::vector<int> prev = accepted.back().nodes;
        for (std::size_t i = 0; i + 1 < prev.size(); ++i)
        {
            const int spur = prev[i];
            std::set<std::pair<int, int>> banned_edge;
            for (const auto &p : accepted)
                if (p.nodes.size() > i + 1 && std::equal(prev.begin(), prev.begin() + static_cast<long>(i) + 1,
                                                         p.nodes.begin()))
                    banned_edge.emplace(p.nodes[i], p.nodes[i + 1]);
            std::vector<char> banned_node(static_cast<std::size_t>(n), 0);
            for (std::size_t r = 0; r < i; ++r)
                banned_node[static_cast<std::size_t>(prev[r])] = 1;

            const auto spur_path = shortest_path(graph, order, spur, graph.target, banned_node, banned_edge);
            if (!spur_path)
                continue;
            std::vector<int> total(prev.begin(), prev.begin() + static_cast<long>(i));
            total.insert(total.end(), spur_path->begin(), spur_path->end());
            if (seen.insert(total).second)
                candidates.emplace(path_weight(graph, total), total);
        }
        if (candidates.empty())
            break;
        auto best = candidates.begin();
        accepted.push_back({best->second, best->first});
        candidates.erase(best);
    }
    return accepted;
}

} // namespace irsroute
