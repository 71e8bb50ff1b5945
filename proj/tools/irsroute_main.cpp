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

// irsroute command-line driver.
//
//   irsroute route    <scenario.json> [--save-solution FILE]
//   irsroute evaluate <scenario.json> [--solution FILE] [--trials N]
//   irsroute sweep    <scenario.json> --param {k|m0|rho} --values a,b,c
//
// Global: --seed, --k, --out <csv>, --timing.
// Exit status: 0 success, 2 infeasible scene (no BS-user path), 1 error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "irsroute/experiment.hpp"

namespace {

constexpr int kExitInfeasible = 2;

struct GlobalArgs
{
    std::optional<std::uint64_t> seed;
    std::optional<int> k;
    std::string out;
    bool timing = false;
    int trials = 1000;
    int realizations = 20;
};

irsroute::ScenarioConfig load(const std::string &path, const GlobalArgs &args)
{
    std::vector<std::string> warnings;
    irsroute::ScenarioConfig sc = irsroute::parse_scenario(path, &warnings);
    for (const auto &w : warnings)
        std::cerr << "warning: " << w << '\n';
    if (args.seed)
        sc.seed = *args.seed;
    if (args.k)
        sc.k_candidates = *args.k;
    sc.validate();
    return sc;
}

// CSV goes to --out when given, else to stdout; the human summary then goes
// to whichever stream is not carrying CSV.
std::ostream &summary_stream(const GlobalArgs &args)
{
    return args.out.empty() ? std::cerr : std::cout;
}

void emit_csv(const GlobalArgs &args, std::span<const irsroute::ResultRow> rows)
{
    if (args.out.empty())
    {
        irsroute::write_csv(std::cout, rows);
        return;
    }
    std::ofstream file(args.out, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write " + args.out);
    irsroute::write_csv(file, rows);
}

void print_solution(std::ostream &os, const irsroute::ScenarioConfig &sc, const irsroute::RoutingSolution &sol)
{
    if (!sol.feasible())
    {
        os << "status: infeasible (no BS-user reflection path)\n";
        return;
    }
    os << "status: ok, Q = " << sol.q() << '\n';
    for (std::size_t q = 0; q < sol.paths.size(); ++q)
    {
        const auto &p = sol.paths[q];
        os << "  path " << q + 1 << ":";
        for (int n : p.nodes(sc.user_node()))
            os << ' ' << n;
        os << "  |h| = " << irsroute::format_number(20.0 * std::log10(p.amplitude)) << " dB"
           << "  alpha = " << irsroute::format_number(sol.alphas[q]) << "  bs beam " << p.bs_beam_index << '\n';
    }
    os << "  received power (interference-free): "
       << irsroute::format_number(sc.transmit_power_dbm + 10.0 * std::log10(sol.gamma_u)) << " dBm\n";
}

std::vector<double> parse_values(const std::string &text)
{
    std::vector<double> values;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        if (item.empty())
            continue;
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        if (used != item.size())
            throw std::invalid_argument("bad sweep value '" + item + "'");
        values.push_back(v);
    }
    if (values.empty())
        throw std::invalid_argument("--values: empty value list");
    return values;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Multi-IRS multi-path beam routing simulator"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalArgs args;
    app.add_option("--seed", args.seed, "Override the scenario RNG seed");
    app.add_option("--k", args.k, "Number of candidate paths K")->check(CLI::PositiveNumber);
    app.add_option("--out", args.out, "Write CSV here instead of stdout");
    app.add_flag("--timing", args.timing, "Fill the runtime_ms column");
    app.add_option("--trials", args.trials, "Random-phase combining draws")->check(CLI::NonNegativeNumber);
    app.add_option("--realizations", args.realizations, "Rayleigh draws for the rho baseline")
        ->check(CLI::PositiveNumber);

    std::string scenario_path, solution_out, solution_in, param, values;

    auto *route = app.add_subcommand("route", "Select reflection paths, beams and power split");
    route->add_option("scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    route->add_option("--save-solution", solution_out, "Write the routing solution as JSON");

    auto *evaluate = app.add_subcommand("evaluate", "Evaluate a solution over the full LoS network");
    evaluate->add_option("scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    evaluate->add_option("--solution", solution_in, "Solution JSON (default: route first)")
        ->check(CLI::ExistingFile);

    auto *sweep = app.add_subcommand("sweep", "Sweep K, M0 or the NLoS path-loss exponent");
    sweep->add_option("scenario", scenario_path, "Scenario JSON")->required()->check(CLI::ExistingFile);
    sweep->add_option("--param", param, "k, m0 or rho")->required()->check(CLI::IsMember({"k", "m0", "rho"}));
    sweep->add_option("--values", values, "Comma-separated values")->required();

    CLI11_PARSE(app, argc, argv);

    try
    {
        const irsroute::ScenarioConfig sc = load(scenario_path, args);
        const irsroute::RunOptions options{args.trials, args.realizations, args.timing};
        std::ostream &info = summary_stream(args);

        if (route->parsed())
        {
            const auto report = irsroute::run_route(sc, options);
            print_solution(info, sc, report.cba.solution);
            if (report.single.feasible())
                info << "  best single path: "
                     << irsroute::format_number(sc.transmit_power_dbm + 10.0 * std::log10(report.single.gamma_u))
                     << " dBm\n";
            if (!solution_out.empty())
            {
                std::ofstream file(solution_out, std::ios::binary);
                if (!file)
                    throw std::runtime_error("cannot write " + solution_out);
                file << irsroute::solution_to_json(report.cba.solution);
            }
            emit_csv(args, std::span(&report.row, 1));
            return report.cba.solution.feasible() ? EXIT_SUCCESS : kExitInfeasible;
        }

        if (evaluate->parsed())
        {
            irsroute::RoutingSolution solution = solution_in.empty()
                                                     ? irsroute::run_route(sc, options).cba.solution
                                                     : irsroute::load_solution(solution_in, sc);
            const auto report = irsroute::run_evaluate(sc, solution, options);
            print_solution(info, sc, solution);
            if (solution.feasible())
            {
                info << "  received power (full network):      "
                     << irsroute::format_number(irsroute::mw_to_dbm(report.gamma_full_mw)) << " dBm\n"
                     << "  inter-beam interference gap:        " << irsroute::format_number(report.gap_db)
                     << " dB\n";
                if (args.trials > 0)
                    info << "  random-phase combining (" << args.trials << " draws): mean "
                         << irsroute::format_number(irsroute::mw_to_dbm(report.random_mean_mw)) << " dBm, max "
                         << irsroute::format_number(irsroute::mw_to_dbm(report.random_max_mw)) << " dBm\n";
            }
            emit_csv(args, std::span(&report.row, 1));
            return solution.feasible() ? EXIT_SUCCESS : kExitInfeasible;
        }

        const auto rows = irsroute::run_sweep(sc, irsroute::parse_sweep_param(param), parse_values(values), options);
        for (const auto &r : rows)
            info << param << " = " << r.value << ": " << r.status << ", Q = " << r.q << ", "
                 << (r.gamma_if_dbm ? irsroute::format_number(*r.gamma_if_dbm) : std::string("-")) << " dBm"
                 << (r.baseline_dbm ? ", baseline " + irsroute::format_number(*r.baseline_dbm) + " dBm" : "")
                 << '\n';
        emit_csv(args, rows);
        return EXIT_SUCCESS;
    }
    catch (const irsroute::ScenarioError &e)
    {
        std::cerr << "scenario error: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return EXIT_FAILURE;
    }
}
