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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "irsroute/fullchannel.hpp"

namespace irsroute {

// One CSV line. Column order is fixed (see csv_header()); absent optional
// values are written as empty fields.
struct ResultRow
{
    std::string experiment;
    std::string param;
    std::string value;
    std::string status = "ok";
    int q = 0;
    std::string paths;              // node sequences, "0-3-6-8|0-1-2-8"
    std::string path_amplitude_db;  // 20 log10 |h_q|, ';'-separated
    std::string alphas;             // ';'-separated
    std::optional<double> gamma_if_dbm;
    std::optional<double> gamma_full_dbm;
    std::optional<double> gap_db;
    std::optional<double> single_path_dbm;
    std::optional<double> random_phase_mean_dbm;
    std::optional<double> baseline_dbm;
    std::optional<double> runtime_ms;
};

const std::vector<std::string> &csv_header();
void write_csv(std::ostream &out, std::span<const ResultRow> rows);

struct RouteReport
{
    LosGraph graph;
    CbaResult cba;
    RoutingSolution single;  // best single path (the Q = 1 special case)
    ResultRow row;
};

struct RunOptions
{
    int random_trials = 1000;   // random-phase combining draws per evaluation
    int baseline_realizations = 20;
    bool timing = false;        // fill runtime_ms (breaks byte-identical output)
};

// Full clique-based pipeline with scenario.k_candidates candidates.
RouteReport run_route(const ScenarioConfig &scenario, const RunOptions &options = {});

struct EvaluateReport
{
    ResultRow row;
    double gamma_if_mw = 0.0;       // P_t * sum |h_q|^2
    double gamma_full_mw = 0.0;     // P_t * |h_full w_B|^2 over the whole LoS graph
    double gap_db = 0.0;            // full - interference-free
    double random_mean_mw = 0.0;
    double random_max_mw = 0.0;
    double coherent_mw = 0.0;       // P_t * (sum sqrt(alpha) |h|)^2
};

// Throws std::invalid_argument if the solution does not fit the scenario.
EvaluateReport run_evaluate(const ScenarioConfig &scenario, const RoutingSolution &solution,
                            const RunOptions &options = {});

enum class SweepParam
{
    k,
    m0,
    rho,
};

SweepParam parse_sweep_param(const std::string &name);
std::string to_string(SweepParam param);

// One row per value, sorted by value (stable for repeats). Values may be
// evaluated concurrently; the row order does not depend on completion order.
std::vector<ResultRow> run_sweep(const ScenarioConfig &scenario, SweepParam param, std::span<const double> values,
                                 const RunOptions &options = {});

// Conventional single-reflection scheme: every IRS j serves the user over
// BS -> j -> user on its own (LoS where the LoS graph has the edge, Rayleigh
// with exponent rho otherwise), with continuous IRS phases, the best BS
// codeword per IRS, and coherent combining with optimal power split. Returns
// the mean received power for unit transmit power over `realizations` draws.
double single_reflection_baseline(const ScenarioConfig &scenario, const LosGraph &graph,
                                  const CodebookSet &codebooks, double rho, std::uint64_t seed, int realizations);

// Solution files: {"paths": [[3, 6], [1, 2]], "alphas": [...]}.
std::string solution_to_json(const RoutingSolution &solution);
RoutingSolution load_solution(const std::filesystem::path &path, const ScenarioConfig &scenario);
RoutingSolution solution_from_json(const std::string &text, const ScenarioConfig &scenario);

std::string format_number(double x);

} // namespace irsroute
