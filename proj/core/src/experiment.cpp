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

#include "irsroute/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "irsroute/random.hpp"

namespace irsroute {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start)
{
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string join_nodes(const std::vector<int> &nodes)
{
    std::string s;
    for (std::size_t i = 0; i < nodes.size(); ++i)
    {
        if (i)
            s += '-';
        s += std::to_string(nodes[i]);
    }
    return s;
}

template <typename Range, typename Fn>
std::string join(const Range &items, char sep, Fn &&fn)
{
    std::string s;
    bool first = true;
    for (const auto &item : items)
    {
        if (!first)
            s += sep;
        first = false;
        s += fn(item);
    }
    return s;
}

void fill_solution_columns(ResultRow &row, const ScenarioConfig &scenario, const RoutingSolution &solution)
{
    row.status = solution.feasible() ? "ok" : "infeasible";
    row.q = solution.q();
    if (!solution.feasible())
        return;
    const int user = scenario.user_node();
    row.paths = join(solution.paths, '|', [&](const CandidatePath &p) { return join_nodes(p.nodes(user)); });
    row.path_amplitude_db = join(solution.paths, ';', [](const CandidatePath &p) {
        return format_number(20.0 * std::log10(p.amplitude));
    });
    row.alphas = join(solution.alphas, ';', [](double a) { return format_number(a); });

    double check = 0.0;
    for (const auto &p : solution.paths)
        check += p.amplitude * p.amplitude;
    if (std::abs(check - solution.gamma_u) > 1e-9 * std::abs(check))
        throw std::logic_error("interference-free power does not match the reported paths");
    row.gamma_if_dbm = scenario.transmit_power_dbm + 10.0 * std::log10(solution.gamma_u);
}

struct Evaluation
{
    RouteReport route;
    EvaluateReport eval;
};

Evaluation route_and_evaluate(const ScenarioConfig &scenario, const RunOptions &options)
{
    Evaluation ev;
    ev.route = run_route(scenario, options);
    if (ev.route.cba.solution.feasible())
        ev.eval = run_evaluate(scenario, ev.route.cba.solution, options);
    return ev;
}

} // namespace

std::string format_number(double x)
{
    if (std::isnan(x))
        return "nan";
    if (std::isinf(x))
        return x > 0 ? "inf" : "-inf";
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << x;
    std::string s = os.str();
    if (s == "-0.000000")
        s = "0.000000";
    return s;
}

const std::vector<std::string> &csv_header()
{
    static const std::vector<std::string> header = {
        "experiment",     "param",          "value",          "status",
        "Q",              "paths",          "path_amplitude_db", "alphas",
        "gamma_if_dbm",   "gamma_full_dbm", "gap_db",         "single_path_dbm",
        "random_phase_mean_dbm", "baseline_dbm", "runtime_ms",
    };
    return header;
}

void write_csv(std::ostream &out, std::span<const ResultRow> rows)
{
    const auto &header = csv_header();
    for (std::size_t i = 0; i < header.size(); ++i)
        out << (i ? "," : "") << header[i];
    out << '\n';
    auto opt = [](const std::optional<double> &v) { return v ? format_number(*v) : std::string(); };
    for (const auto &r : rows)
    {
        out << r.experiment << ',' << r.param << ',' << r.value << ',' << r.status << ',' << r.q << ',' << r.paths
            << ',' << r.path_amplitude_db << ',' << r.alphas << ',' << opt(r.gamma_if_dbm) << ','
            << opt(r.gamma_full_dbm) << ',' << opt(r.gap_db) << ',' << opt(r.single_path_dbm) << ','
            << opt(r.random_phase_mean_dbm) << ',' << opt(r.baseline_dbm) << ',' << opt(r.runtime_ms) << '\n';
    }
}

RouteReport run_route(const ScenarioConfig &scenario, const RunOptions &options)
{
    const auto start = Clock::now();
    RouteReport report;
    report.graph = build_los_graph(scenario);
    const CodebookSet codebooks(scenario);
    report.cba = route_cba(scenario, report.graph, codebooks, scenario.k_candidates);
    report.single = best_single_path(scenario, report.graph, codebooks);

    report.row.experiment = "route";
    fill_solution_columns(report.row, scenario, report.cba.solution);
    if (report.single.feasible())
        report.row.single_path_dbm = scenario.transmit_power_dbm + 10.0 * std::log10(report.single.gamma_u);
    if (options.timing)
        report.row.runtime_ms = elapsed_ms(start);
    return report;
}

EvaluateReport run_evaluate(const ScenarioConfig &scenario, const RoutingSolution &solution,
                            const RunOptions &options)
{
    const auto start = Clock::now();
    EvaluateReport report;
    report.row.experiment = "evaluate";
    fill_solution_columns(report.row, scenario, solution);
    if (!solution.feasible())
        return report;

    const LosGraph graph = build_los_graph(scenario);
    const CodebookSet codebooks(scenario);
    const PathEvaluator evaluator(scenario, graph, codebooks);
    for (const auto &path : solution.paths)
    {
        const CandidatePath fresh = evaluator.evaluate(path.irs_sequence);
        if (std::abs(fresh.gain - path.gain) > 1e-9 * std::abs(fresh.gain))
            throw std::invalid_argument("run_evaluate: solution does not match the scenario");
    }

    const NetworkConfiguration config = configure_network(solution, codebooks);
    const CompositeChannel channel = effective_channel_dp(graph, scenario, config);
    const ReceivedPower full = received_power(channel, config.bs_precoder, scenario.transmit_power_dbm);

    const double pt = dbm_to_mw(scenario.transmit_power_dbm);
    std::vector<double> amps;
    for (const auto &p : solution.paths)
        amps.push_back(p.amplitude);
    report.gamma_if_mw = pt * solution.gamma_u;
    report.gamma_full_mw = full.linear_mw;
    report.gap_db = full.dbm - mw_to_dbm(report.gamma_if_mw);
    report.coherent_mw = pt * coherent_power(amps, solution.alphas);

    double sum = 0.0;
    for (int t = 0; t < options.random_trials; ++t)
    {
        const double p = pt * random_phase_power(amps, solution.alphas, derive_seed(scenario.seed, static_cast<std::uint64_t>(t)));
        sum += p;
        report.random_max_mw = std::max(report.random_max_mw, p);
    }
    if (options.random_trials > 0)
        report.random_mean_mw = sum / options.random_trials;

    report.row.gamma_full_dbm = full.dbm;
    report.row.gap_db = report.gap_db;
    if (options.random_trials > 0)
        report.row.random_phase_mean_dbm = mw_to_dbm(report.random_mean_mw);
    if (options.timing)
        report.row.runtime_ms = elapsed_ms(start);
    return report;
}

SweepParam parse_sweep_param(const std::string &name)
{
    if (name == "k")
        return SweepParam::k;
    if (name == "m0")
        return SweepParam::m0;
    if (name == "rho")
        return SweepParam::rho;
    throw std::invalid_argument("unknown sweep parameter '" + name + "' (expected k, m0 or rho)");
}

std::string to_string(SweepParam param)
{
    switch (param)
    {
    case SweepParam::k:
        return "k";
    case SweepParam::m0:
        return "m0";
    case SweepParam::rho:
        return "rho";
    }
    return "";
}

std::vector<ResultRow> run_sweep(const ScenarioConfig &scenario, SweepParam param, std::span<const double> values,
                                 const RunOptions &options)
{
    if (values.empty())
        throw std::invalid_argument("run_sweep: empty value list");

    std::vector<ScenarioConfig> variants;
    for (double v : values)
    {
        ScenarioConfig sc = scenario;
        if (param == SweepParam::k || param == SweepParam::m0)
        {
            if (v != std::floor(v) || v < 1.0)
                throw std::invalid_argument("run_sweep: " + to_string(param) + " values must be positive integers");
            if (param == SweepParam::k)
                sc.k_candidates = static_cast<int>(v);
            else
                for (auto &p : sc.irs)
                    p.m0 = static_cast<int>(v);
        }
        else if (!(v >= 2.0))
            throw std::invalid_argument("run_sweep: rho values must be >= 2");
        sc.validate();
        variants.push_back(std::move(sc));
    }

    auto one = [&](std::size_t i) {
        const auto start = Clock::now();
        const ScenarioConfig &sc = variants[i];
        const Evaluation ev = route_and_evaluate(sc, RunOptions{options.random_trials, options.baseline_realizations, false});
        ResultRow row = ev.route.row;
        row.experiment = "sweep";
        row.param = to_string(param);
        row.value = param == SweepParam::rho ? format_number(values[i]) : std::to_string(static_cast<int>(values[i]));
        if (ev.route.cba.solution.feasible())
        {
            row.gamma_full_dbm = ev.eval.row.gamma_full_dbm;
            row.gap_db = ev.eval.row.gap_db;
            row.random_phase_mean_dbm = ev.eval.row.random_phase_mean_dbm;
        }
        if (param == SweepParam::rho)
        {
            const CodebookSet codebooks(sc);
            const double base = single_reflection_baseline(sc, ev.route.graph, codebooks, values[i], sc.seed,
                                                           options.baseline_realizations);
            row.baseline_dbm = sc.transmit_power_dbm + 10.0 * std::log10(base);
        }
        if (options.timing)
            row.runtime_ms = elapsed_ms(start);
        return row;
    };

    std::vector<std::future<ResultRow>> jobs;
    for (std::size_t i = 0; i < variants.size(); ++i)
        jobs.push_back(std::async(std::launch::async, one, i));
    std::vector<std::size_t> order(variants.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<ResultRow> results;
    for (auto &job : jobs)
        results.push_back(job.get());
    std::vector<ResultRow> rows;
    for (std::size_t i : order)
        rows.push_back(std::move(results[i]));
    return rows;
}

double single_reflection_baseline(const ScenarioConfig &scenario, const LosGraph &graph,
                                  const CodebookSet &codebooks, double rho, std::uint64_t seed, int realizations)
{
    if (realizations < 1)
        throw std::invalid_argument("single_reflection_baseline: need at least one realization");
    const int user = scenario.user_node();
    const Endpoint bs = scenario.endpoint(0);
    const Endpoint ue = scenario.endpoint(user);
    double total = 0.0;
    for (int r = 0; r < realizations; ++r)
    {
        const std::uint64_t draw_seed = derive_seed(seed, static_cast<std::uint64_t>(r));
        double gamma = 0.0;
        for (int j = 1; j <= scenario.irs_count(); ++j)
        {
            const IrsPose &pose = scenario.irs[static_cast<std::size_t>(j - 1)];
            if (!half_space_contains(pose, scenario.position(0)) || !half_space_contains(pose, scenario.position(user)))
                continue;
            const int m = pose.element_count();
            const Endpoint irs = scenario.endpoint(j);
            const CMatrix h_bs = graph.has_edge(0, j)
                                     ? los_link(bs, irs, scenario.carrier).matrix()
                                     : rayleigh_nlos(m, scenario.bs.n_antennas, scenario.distance(0, j), rho,
                                                     scenario.carrier, derive_seed(draw_seed, 2 * static_cast<std::uint64_t>(j)));
            const CMatrix g_user = graph.has_edge(j, user)
                                       ? los_link(irs, ue, scenario.carrier).matrix()
                                       : rayleigh_nlos(1, m, scenario.distance(j, user), rho, scenario.carrier,
                                                       derive_seed(draw_seed, 2 * static_cast<std::uint64_t>(j) + 1));
            const Eigen::ArrayXd g_abs = g_user.row(0).transpose().cwiseAbs().array();
            double best = 0.0;
            for (const auto &w : codebooks.bs().vectors())
            {
                // Continuous phases align every element: |g^H diag(theta) H w| = sum |g_m| |(H w)_m|.
                const double a = (g_abs * (h_bs * w).cwiseAbs().array()).sum();
                best = std::max(best, a);
            }
            gamma += best * best;
        }
        total += gamma;
    }
    return total / realizations;
}

std::string solution_to_json(const RoutingSolution &solution)
{
    nlohmann::json j;
    j["status"] = solution.feasible() ? "ok" : "infeasible";
    j["paths"] = nlohmann::json::array();
    for (const auto &p : solution.paths)
        j["paths"].push_back(p.irs_sequence);
    j["alphas"] = solution.alphas;
    j["gamma_u"] = solution.gamma_u;
    return j.dump(2) + "\n";
}

RoutingSolution solution_from_json(const std::string &text, const ScenarioConfig &scenario)
{
    nlohmann::json j;
    try
    {
        j = nlohmann::json::parse(text);
    }
    catch (const nlohmann::json::parse_error &e)
    {
        throw std::invalid_argument(std::string("solution: malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("paths") || !j.at("paths").is_array())
        throw std::invalid_argument("solution: missing 'paths' array");

    std::vector<std::vector<int>> sequences;
    for (const auto &p : j.at("paths"))
    {
        if (!p.is_array() || p.empty())
            throw std::invalid_argument("solution: each path must be a non-empty array of IRS indices");
        std::vector<int> seq;
        for (const auto &x : p)
        {
            if (!x.is_number_integer())
                throw std::invalid_argument("solution: IRS indices must be integers");
            seq.push_back(x.get<int>());
        }
        sequences.push_back(std::move(seq));
    }
    if (sequences.empty())
        return {};

    const LosGraph graph = build_los_graph(scenario);
    const CodebookSet codebooks(scenario);
    const PathEvaluator evaluator(scenario, graph, codebooks);
    std::vector<CandidatePath> paths;
    for (const auto &seq : sequences)
        paths.push_back(evaluator.evaluate(seq));
    RoutingSolution sol = make_solution(paths);

    if (j.contains("alphas"))
    {
        const auto &alphas = j.at("alphas");
        if (!alphas.is_array() || alphas.size() != sequences.size())
            throw std::invalid_argument("solution: 'alphas' must match 'paths' in length");
        for (std::size_t i = 0; i < sequences.size(); ++i)
        {
            if (!alphas[i].is_number())
                throw std::invalid_argument("solution: 'alphas' entries must be numbers");
        }
        for (std::size_t i = 0; i < sequences.size(); ++i)
            for (std::size_t q = 0; q < sol.paths.size(); ++q)
                if (sol.paths[q].irs_sequence == sequences[i] && std::abs(alphas[i].get<double>() - sol.alphas[q]) > 1e-6)
                    throw std::invalid_argument("solution: stored power split does not match the scenario");
    }
    return sol;
}

RoutingSolution load_solution(const std::filesystem::path &path, const ScenarioConfig &scenario)
{
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open solution file " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    return solution_from_json(buffer.str(), scenario);
}

} // namespace irsroute
