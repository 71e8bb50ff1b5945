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

#include <cstddef>
#include <map>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "irsroute/codebook.hpp"
#include "irsroute/scenario.hpp"

namespace irsroute {

// ---------------------------------------------------------------------------
// LoS graph
// ---------------------------------------------------------------------------

struct LosEdge
{
    int to = 0;
    double distance = 0.0;
};

// Directed graph over nodes 0 (BS) .. J+1 (user). add_edge rejects self-loops,
// edges into the BS, edges out of the user and the direct BS-user edge.
class LosGraph
{
  public:
    LosGraph() = default;
    explicit LosGraph(int node_count);

    int node_count() const { return static_cast<int>(out_.size()); }
    int user_node() const { return node_count() - 1; }
    int irs_count() const { return node_count() - 2; }

    void add_edge(int from, int to, double distance);
    bool has_edge(int from, int to) const;
    double distance(int from, int to) const;  // throws std::out_of_range if absent
    const std::vector<LosEdge> &successors(int node) const { return out_.at(static_cast<std::size_t>(node)); }
    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;

    // Nodes in an order where every edge points forward; throws std::logic_error on a cycle.
    std::vector<int> topological_order() const;

  private:
    std::vector<std::vector<LosEdge>> out_;
};

// Edge (i, j) exists iff the link is LoS, every IRS endpoint sees the other end
// strictly inside its reflection half-space, and j is strictly farther from the
// BS than i (unless j is the user). The BS-user edge is never added.
LosGraph build_los_graph(const ScenarioConfig &scenario);

// ---------------------------------------------------------------------------
// Per-path gains
// ---------------------------------------------------------------------------

struct CandidatePath
{
    std::vector<int> irs_sequence;  // a_1 .. a_L, IRS node indices
    cdouble gain{};                  // complex end-to-end channel with the chosen beams
    double amplitude = 0.0;          // |gain|
    double phase = 0.0;              // arg(gain)
    int bs_beam_index = -1;
    cdouble bs_value{};              // bs_response^H w at the chosen BS beam
    std::vector<IrsBeamSelection> irs_selections;

    // 0, a_1, .., a_L, user
    std::vector<int> nodes(int user_node) const;
};

// Computes exact codebook-constrained path gains. Hop selections depend only on
// (previous, current, next) node triples and are memoized, so one evaluator
// should be reused across the paths of a scene. Holds references to its
// inputs; not safe for concurrent use.
class PathEvaluator
{
  public:
    PathEvaluator(const ScenarioConfig &scenario, const LosGraph &graph, const CodebookSet &codebooks);

    // Throws std::invalid_argument if any hop is not an edge of the graph.
    CandidatePath evaluate(std::span<const int> irs_sequence) const;

  private:
    const IrsBeamSelection &hop(int prev, int cur, int next) const;
    const BsBeamChoice &bs_beam(int first_irs) const;

    const ScenarioConfig &scenario_;
    const LosGraph &graph_;
    const CodebookSet &codebooks_;
    mutable std::map<std::tuple<int, int, int>, IrsBeamSelection> hops_;
    mutable std::map<int, BsBeamChoice> bs_beams_;
};

CandidatePath path_gain_exact(std::span<const int> irs_sequence, const ScenarioConfig &scenario,
                              const LosGraph &graph, const CodebookSet &codebooks);

// Sorts by amplitude (descending), then IRS sequence (ascending). Every
// solution's paths are kept in this order so Gamma_u sums are reproducible.
void sort_canonical(std::vector<CandidatePath> &paths);

// ---------------------------------------------------------------------------
// K shortest paths
// ---------------------------------------------------------------------------

struct WeightedDigraph
{
    int source = 0;
    int target = 0;
    std::vector<std::vector<std::pair<int, double>>> out;

    int node_count() const { return static_cast<int>(out.size()); }
};

// -log of the ideal per-hop amplitude: sqrt(beta)/d, times M entering an IRS
// and sqrt(N_B) leaving the BS. Path sums give -log of the ideal path amplitude.
WeightedDigraph idealized_edge_weights(const LosGraph &graph, const ScenarioConfig &scenario);

struct WeightedPath
{
    std::vector<int> nodes;
    double weight = 0.0;
};

// Yen's algorithm over a DAG (negative weights allowed). Returns up to k
// loopless source-target paths by increasing weight; equal weights are ordered
// lexicographically by node sequence. Throws std::invalid_argument for k < 1.
std::vector<WeightedPath> yen_k_paths(const WeightedDigraph &graph, int k);

// ---------------------------------------------------------------------------
// Path graph and cliques
// ---------------------------------------------------------------------------

struct PathGraph
{
    int n_paths = 0;
    std::vector<std::vector<char>> adjacency;  // symmetric, irreflexive

    bool adjacent(int a, int b) const { return adjacency[a][b] != 0; }
};

// Two paths are adjacent iff their IRS sets are disjoint.
PathGraph build_path_graph(std::span<const CandidatePath> paths);

using Clique = std::vector<int>;

inline constexpr int kDefaultCliqueCap = 24;

// Bron-Kerbosch with Tomita pivoting. Each clique is sorted ascending and the
// list is sorted lexicographically. Throws std::length_error above `cap` paths.
std::vector<Clique> maximal_cliques(const PathGraph &graph, int cap = kDefaultCliqueCap);

// ---------------------------------------------------------------------------
// Selection and power allocation
// ---------------------------------------------------------------------------

enum class RouteStatus
{
    ok,
    infeasible,
};

struct RoutingSolution
{
    RouteStatus status = RouteStatus::infeasible;
    std::vector<CandidatePath> paths;  // canonical order, pairwise IRS-disjoint
    std::vector<double> alphas;
    double gamma_u = 0.0;              // received power for unit transmit power

    bool feasible() const { return status == RouteStatus::ok; }
    int q() const { return static_cast<int>(paths.size()); }
};

// alpha_q = a_q^2 / sum a^2. Throws std::invalid_argument if all amplitudes are zero.
std::vector<double> allocate_power(std::span<const double> amplitudes);

// (sum_q sqrt(alpha_q) a_q)^2 for arbitrary alphas on the simplex.
double coherent_power(std::span<const double> amplitudes, std::span<const double> alphas);

// Builds a solution from pairwise-disjoint paths; throws std::logic_error if they overlap.
RoutingSolution make_solution(std::vector<CandidatePath> paths);

// Picks the clique with the largest sum of squared amplitudes (first on ties).
RoutingSolution select_best(std::span<const CandidatePath> paths, std::span<const Clique> cliques);

// All BS-user node sequences of the graph; throws std::length_error past `cap`.
std::vector<std::vector<int>> enumerate_simple_paths(const LosGraph &graph, std::size_t cap);

inline constexpr std::size_t kDefaultPathCap = 4096;

// Exhaustive oracle over every set of pairwise-disjoint paths of at most
// max_paths members (default: the BS out-degree).
RoutingSolution brute_force_route(const LosGraph &graph, const ScenarioConfig &scenario,
                                  const CodebookSet &codebooks, int max_paths = -1,
                                  std::size_t path_cap = kDefaultPathCap);

struct CbaResult
{
    RoutingSolution solution;
    std::vector<CandidatePath> candidates;  // canonical order
    std::vector<Clique> cliques;
};

// Clique-based routing: Yen over idealized weights, exact gains for the k
// candidates, maximal cliques of the path graph, best clique.
CbaResult route_cba(const ScenarioConfig &scenario, const LosGraph &graph, const CodebookSet &codebooks, int k,
                    int clique_cap = kDefaultCliqueCap);

// Best single path by exact gain, searched over every BS-user path when there
// are at most `path_cap` of them, otherwise over the top Yen candidates.
RoutingSolution best_single_path(const ScenarioConfig &scenario, const LosGraph &graph,
                                 const CodebookSet &codebooks, std::size_t path_cap = kDefaultPathCap);

} // namespace irsroute
