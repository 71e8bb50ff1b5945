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
#include <iterator>
#include <stdexcept>
#include <string>

#include "irsroute/routing.hpp"

namespace irsroute {

PathGraph build_path_graph(std::span<const CandidatePath> paths)
{
    PathGraph pg;
    pg.n_paths = static_cast<int>(paths.size());
    pg.adjacency.assign(paths.size(), std::vector<char>(paths.size(), 0));
    for (std::size_t a = 0; a < paths.size(); ++a)
    {
        std::vector<int> sa = paths[a].irs_sequence;
        std::sort(sa.begin(), sa.end());
        for (std::size_t b = a + 1; b < paths.size(); ++b)
        {
            std::vector<int> sb = paths[b].irs_sequence;
            std::sort(sb.begin(), sb.end());
            std::vector<int> common;
            std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(common));
            pg.adjacency[a][b] = pg.adjacency[b][a] = common.empty() ? 1 : 0;
        }
    }
    return pg;
}

std::vector<Clique> maximal_cliques(const PathGraph &graph, int cap)
{
    if (graph.n_paths > cap)
        throw std::length_error("maximal_cliques: " + std::to_string(graph.n_paths) +
                                " candidate paths exceed the cap of " + std::to_string(cap) +
                                "; use a smaller K");
    std::vector<Clique> cliques;
    if (graph.n_paths == 0)
        return cliques;

    const int n = graph.n_paths;
    auto neighbours_in = [&](int v, const std::vector<int> &set) {
        std::vector<int> out;
        for (int u : set)
            if (graph.adjacent(v, u))
                out.push_back(u);
        return out;
    };

    std::vector<int> r;
    std::function<void(std::vector<int>, std::vector<int>)> expand = [&](std::vector<int> p, std::vector<int> x) {
        if (p.empty())
        {
            if (x.empty())
            {
                Clique c = r;
                std::sort(c.begin(), c.end());
                cliques.push_back(std::move(c));
            }
            return;
        }
        // Pivot maximizing |P n N(u)| over P u X; lowest index on ties.
        int pivot = -1;
        std::size_t pivot_degree = 0;
        std::vector<int> pool = p;
        pool.insert(pool.end(), x.begin(), x.end());
        std::sort(pool.begin(), pool.end());
        for (int u : pool)
        {
            const std::size_t deg = neighbours_in(u, p).size();
            if (pivot < 0 || deg > pivot_degree)
            {
                pivot = u;
                pivot_degree = deg;
            }
        }
        std::vector<int> branch;
        for (int v : p)
            if (!graph.adjacent(pivot, v))
                branch.push_back(v);
        for (int v : branch)
        {
            r.push_back(v);
            expand(neighbours_in(v, p), neighbours_in(v, x));
            r.pop_back();
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
            std::sort(x.begin(), x.end());
        }
    };

    std::vector<int> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        all[static_cast<std::size_t>(i)] = i;
    expand(all, {});
    std::sort(cliques.begin(), cliques.end());
    return cliques;
}

} // namespace irsroute
