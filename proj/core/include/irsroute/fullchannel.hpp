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
#include <map>
#include <span>
#include <vector>

#include "irsroute/routing.hpp"

namespace irsroute {

// Which IRSs reflect (and how), and what the BS transmits. IRSs absent from
// `active_irs` are switched off: they neither reflect nor relay.
struct NetworkConfiguration
{
    std::map<int, CVector> active_irs;  // IRS node index -> theta
    CVector bs_precoder;                // unit norm
};

struct CompositeChannel
{
    CRowVector row_vector;  // 1 x N_B end-to-end channel
    // Filled by path_sum_channel only: node sequence -> that path's 1 x N_B term.
    std::map<std::vector<int>, CRowVector> per_path_contributions;
};

// w_B = sum_q sqrt(alpha_q) exp(-j phase_q) beam_q. When two paths share a
// codeword the sum is no longer unit norm; the result is then rescaled to unit
// norm so the transmit power stays fixed.
CVector compose_precoder(std::span<const CVector> beams, std::span<const double> alphas,
                         std::span<const double> phases);

// Reflection vectors of every routed IRS and the phase-compensated split precoder.
NetworkConfiguration configure_network(const RoutingSolution &solution, const CodebookSet &codebooks);

// Exact received channel through every LoS edge between active nodes,
// propagated in increasing BS distance (the graph's topological order).
CompositeChannel effective_channel_dp(const LosGraph &graph, const ScenarioConfig &scenario,
                                      const NetworkConfiguration &config);

inline constexpr std::size_t kDefaultChannelPathCap = 100000;

// Oracle for effective_channel_dp: enumerates every BS-user path through
// active IRSs and sums dense matrix cascades. Throws std::length_error past `cap`.
CompositeChannel path_sum_channel(const LosGraph &graph, const ScenarioConfig &scenario,
                                  const NetworkConfiguration &config, std::size_t cap = kDefaultChannelPathCap);

struct ReceivedPower
{
    double linear_mw = 0.0;
    double dbm = 0.0;  // -infinity for a zero channel
};

ReceivedPower received_power(const CompositeChannel &channel, const CVector &precoder, double transmit_power_dbm);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

// |sum_q sqrt(alpha_q) a_q exp(j psi_q)|^2 with psi_q ~ U[0, 2 pi) drawn from `seed`.
double random_phase_power(std::span<const double> amplitudes, std::span<const double> alphas, std::uint64_t seed);

// Copy of `graph` keeping only the hops used by the solution's paths.
LosGraph routed_subgraph(const LosGraph &graph, const RoutingSolution &solution);

} // namespace irsroute
