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

#include <catch_amalgamated.hpp>

#include "irsroute/fullchannel.hpp"
#include "support/random_scene.hpp"

#include <cmath>
#include <numbers>
#include <set>

using namespace irsroute;
using namespace irsroute::testing;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

RoutingSolution route(const ScenarioConfig &sc, const LosGraph &g, const CodebookSet &cb, int k = 6)
{
    return route_cba(sc, g, cb, k, 64).solution;
}

} // namespace

TEST_CASE("Precoder - single beam without rotation is the beam itself")
{
    const Codebook cb = dft_codebook(8, 8);
    const std::vector<CVector> beams = {cb[3]};
    const std::vector<double> alphas = {1.0}, phases = {0.0};
    CHECK((compose_precoder(beams, alphas, phases) - cb[3]).norm() < 1e-15);
}

TEST_CASE("Precoder - orthonormal beams keep unit norm")
{
    const Codebook cb = dft_codebook(16, 16);
    const std::vector<CVector> two = {cb[1], cb[9]};
    const std::vector<double> half = {0.5, 0.5}, ph2 = {0.3, -2.0};
    CHECK_THAT(compose_precoder(two, half, ph2).norm(), WithinAbs(1.0, 1e-12));

    const std::vector<double> amps = {0.7, 0.2, 1.3};
    const auto alphas = allocate_power(amps);
    const std::vector<CVector> three = {cb[0], cb[5], cb[11]};
    const std::vector<double> ph3 = {1.0, 2.0, 3.0};
    const CVector w = compose_precoder(three, alphas, ph3);
    CHECK_THAT(w.norm(), WithinAbs(1.0, 1e-12));
    for (int q = 0; q < 3; ++q)
    {
        const cdouble coeff = three[q].dot(w);
        CHECK(std::abs(coeff - std::sqrt(alphas[q]) * std::polar(1.0, -ph3[q])) < 1e-12);
    }
}

TEST_CASE("Precoder - colliding beams are renormalized; bad input throws")
{
    const Codebook cb = dft_codebook(8, 8);
    const std::vector<CVector> same = {cb[2], cb[2]};
    const std::vector<double> half = {0.5, 0.5}, zero = {0.0, 0.0};
    CHECK_THAT(compose_precoder(same, half, zero).norm(), WithinAbs(1.0, 1e-12));
    const std::vector<double> one = {1.0}, bad_sum = {0.5, 0.4};
    REQUIRE_THROWS_AS(compose_precoder(same, one, zero), std::invalid_argument);
    REQUIRE_THROWS_AS(compose_precoder(same, bad_sum, zero), std::invalid_argument);
    REQUIRE_THROWS_AS(compose_precoder({}, {}, {}), std::invalid_argument);
}

TEST_CASE("Channel - single routed path matches its factorized gain")
{
    Rng rng(51);
    int checked = 0;
    for (int t = 0; t < 100 && checked < 40; ++t)
    {
        const ScenarioConfig sc = random_scene(rng);
        const LosGraph g = build_los_graph(sc);
        const CodebookSet cb(sc);
        const auto single = best_single_path(sc, g, cb);
        if (!single.feasible())
            continue;
        const auto &p = single.paths[0];
        const LosGraph sub = routed_subgraph(g, single);
        NetworkConfiguration cfg = configure_network(single, cb);
        cfg.bs_precoder = cb.bs()[p.bs_beam_index];
        const CompositeChannel ch = effective_channel_dp(sub, sc, cfg);
        CHECK(relative_error(cdouble((ch.row_vector * cfg.bs_precoder)(0)), p.gain) < 1e-10);
        ++checked;
    }
    CHECK(checked >= 40);
}

TEST_CASE("Channel - disjoint lanes without cross edges add coherently")
{
    const ScenarioConfig sc = two_lanes(0.5, -0.25, 4);
    const LosGraph g = build_los_graph(sc);
    REQUIRE(g.edge_count() == 4);
    const CodebookSet cb(sc);
    const RoutingSolution sol = route(sc, g, cb);
    REQUIRE(sol.q() == 2);
    const NetworkConfiguration cfg = configure_network(sol, cb);
    CHECK_THAT(cfg.bs_precoder.norm(), WithinAbs(1.0, 1e-12));
    const CompositeChannel ch = effective_channel_dp(g, sc, cfg);
    const double hand = std::sqrt(sol.alphas[0]) * sol.paths[0].amplitude +
                        std::sqrt(sol.alphas[1]) * sol.paths[1].amplitude;
    const cdouble received = (ch.row_vector * cfg.bs_precoder)(0);
    CHECK(relative_error(received, cdouble(hand, 0.0)) < 1e-10);
    CHECK_THAT(std::norm(received), WithinRel(sol.gamma_u, 1e-10));
    const CompositeChannel oracle = path_sum_channel(g, sc, cfg);
    CHECK(relative_error(ch.row_vector, oracle.row_vector) < 1e-10);
    CHECK(oracle.per_path_contributions.size() == 2);
}

TEST_CASE("Channel - removing cross-path edges leaves exactly the interference-free power")
{
    const std::pair<double, double> grid[] = {{0.5, -0.25}, {0.25, -0.5}, {0.75, -0.25}, {0.5, -0.75}};
    for (auto [c1, c2] : grid)
        for (int m0 : {2, 4, 6})
        {
            const ScenarioConfig sc = two_lanes(c1, c2, m0, true);
            const LosGraph g = build_los_graph(sc);
            const CodebookSet cb(sc);
            const RoutingSolution sol = route(sc, g, cb);
            if (sol.q() != 2)
                continue;
            const NetworkConfiguration cfg = configure_network(sol, cb);
            const auto routed = received_power(effective_channel_dp(routed_subgraph(g, sol), sc, cfg),
                                               cfg.bs_precoder, 0.0);
            CHECK_THAT(routed.linear_mw, WithinRel(sol.gamma_u, 1e-10));
            if (g.has_edge(1, 2))
            {
                const auto full = received_power(effective_channel_dp(g, sc, cfg), cfg.bs_precoder, 0.0);
                CHECK(full.linear_mw != routed.linear_mw);
            }
        }
}

TEST_CASE("Channel - DP equals path sum on random configurations")
{
    Rng rng(52);
    for (int t = 0; t < 200; ++t)
    {
        const ScenarioConfig sc = random_scene(rng);
        const LosGraph g = build_los_graph(sc);
        const NetworkConfiguration cfg = random_configuration(rng, sc);
        const CompositeChannel dp = effective_channel_dp(g, sc, cfg);
        const CompositeChannel ps = path_sum_channel(g, sc, cfg);
        CHECK(relative_error(dp.row_vector, ps.row_vector) < 1e-10);
        CRowVector sum = CRowVector::Zero(sc.bs.n_antennas);
        for (const auto &[nodes, c] : ps.per_path_contributions)
        {
            sum += c;
            for (std::size_t i = 1; i + 1 < nodes.size(); ++i)
                CHECK(cfg.active_irs.contains(nodes[i]));
        }
        CHECK(relative_error(sum, ps.row_vector) < 1e-12);
    }
}

TEST_CASE("Channel - empty active set gives a zero channel")
{
    Rng rng(53);
    const ScenarioConfig sc = random_scene(rng);
    const LosGraph g = build_los_graph(sc);
    NetworkConfiguration cfg;
    cfg.bs_precoder = CVector::Ones(sc.bs.n_antennas) / std::sqrt(double(sc.bs.n_antennas));
    CHECK(effective_channel_dp(g, sc, cfg).row_vector.norm() == 0.0);
    const CompositeChannel ps = path_sum_channel(g, sc, cfg);
    CHECK(ps.row_vector.norm() == 0.0);
    CHECK(ps.per_path_contributions.empty());
    const ReceivedPower p = received_power(ps, cfg.bs_precoder, 30.0);
    CHECK(p.linear_mw == 0.0);
    CHECK(std::isinf(p.dbm));
    CHECK(p.dbm < 0.0);
}

TEST_CASE("Channel - bad configurations throw")
{
    Rng rng(54);
    const ScenarioConfig sc = random_scene(rng, SceneShape{2, 3});
    const LosGraph g = build_los_graph(sc);
    NetworkConfiguration cfg = random_configuration(rng, sc);
    NetworkConfiguration short_w = cfg;
    short_w.bs_precoder = CVector::Ones(1);
    REQUIRE_THROWS_AS(effective_channel_dp(g, sc, short_w), std::invalid_argument);
    NetworkConfiguration bad_node = cfg;
    bad_node.active_irs[sc.user_node()] = CVector::Ones(1);
    REQUIRE_THROWS_AS(path_sum_channel(g, sc, bad_node), std::invalid_argument);
    NetworkConfiguration bad_theta = cfg;
    bad_theta.active_irs.begin()->second = CVector::Ones(1000);
    REQUIRE_THROWS_AS(effective_channel_dp(g, sc, bad_theta), std::invalid_argument);
}

TEST_CASE("Channel - per-path terms on their own beams rebuild the interference-free sum")
{
    Rng rng(55);
    int checked = 0;
    for (int t = 0; t < 200 && checked < 50; ++t)
    {
        const ScenarioConfig sc = random_scene(rng);
        const LosGraph g = build_los_graph(sc);
        const CodebookSet cb(sc);
        const RoutingSolution sol = route(sc, g, cb);
        if (!sol.feasible())
            continue;
        // Keep only routed hops, and give every path its own BS beam so the
        // precoder is orthonormal.
        std::set<int> beams;
        for (const auto &p : sol.paths)
            beams.insert(p.bs_beam_index);
        if (beams.size() != sol.paths.size())
            continue;
        const LosGraph sub = routed_subgraph(g, sol);
        const NetworkConfiguration cfg = configure_network(sol, cb);
        const CompositeChannel ch = effective_channel_dp(sub, sc, cfg);
        // Each path's term evaluated on its own beam only; the BS leakage of
        // the other beams is what separates this from the full channel.
        const CompositeChannel ps = path_sum_channel(sub, sc, cfg);
        cdouble total = 0.0;
        for (std::size_t q = 0; q < sol.paths.size(); ++q)
        {
            const auto &p = sol.paths[q];
            const CRowVector &c = ps.per_path_contributions.at(p.nodes(sc.user_node()));
            total += std::sqrt(sol.alphas[q]) * std::polar(1.0, -p.phase) * (c * cb.bs()[p.bs_beam_index])(0);
        }
        CHECK_THAT(std::norm(total), WithinRel(sol.gamma_u, 1e-10));
        CHECK(relative_error(ch.row_vector, ps.row_vector) < 1e-10);
        ++checked;
    }
    CHECK(checked >= 20);
}

TEST_CASE("Received power - Pt |h w|^2 in mW and dBm")
{
    CompositeChannel ch;
    ch.row_vector = CRowVector::Constant(4, cdouble(1e-3, 0.0));
    const CVector w = CVector::Ones(4) / 2.0;
    const ReceivedPower p = received_power(ch, w, 30.0);
    CHECK_THAT(p.linear_mw, WithinRel(1000.0 * 4e-6, 1e-12));
    CHECK_THAT(p.dbm, WithinAbs(30.0 + 10.0 * std::log10(4e-6), 1e-12));
    CHECK_THAT(dbm_to_mw(mw_to_dbm(0.0123)), WithinRel(0.0123, 1e-14));
    REQUIRE_THROWS_AS(received_power(ch, CVector::Ones(3), 30.0), std::invalid_argument);
}

TEST_CASE("Random phases - one path is seed independent; never beats coherent")
{
    const std::vector<double> one = {0.4}, full = {1.0};
    for (std::uint64_t s = 0; s < 20; ++s)
        CHECK_THAT(random_phase_power(one, full, s), WithinRel(0.16, 1e-14));

    const std::vector<double> amps = {1.0, 0.7, 0.3};
    const auto alphas = allocate_power(amps);
    const double coherent = coherent_power(amps, alphas);
    for (std::uint64_t s = 0; s < 10000; ++s)
        CHECK(random_phase_power(amps, alphas, s) <= coherent);
    CHECK(random_phase_power(amps, alphas, 77) == random_phase_power(amps, alphas, 77));
    REQUIRE_THROWS_AS(random_phase_power(amps, full, 1), std::invalid_argument);
}

TEST_CASE("Random phases - mean over 1e5 seeds is sum alpha a^2")
{
    const std::vector<double> amps = {1.0, 0.7, 0.3, 0.5};
    const auto alphas = allocate_power(amps);
    double expected = 0.0;
    for (std::size_t q = 0; q < amps.size(); ++q)
        expected += alphas[q] * amps[q] * amps[q];
    double mean = 0.0;
    const int n = 100000;
    for (int s = 0; s < n; ++s)
        mean += random_phase_power(amps, alphas, derive_seed(9, s));
    mean /= n;
    CHECK_THAT(mean, WithinRel(expected, 0.01));
}
