#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballots.hpp"
#include "metrics.hpp"
#include "registry.hpp"
#include "scenario.hpp"
#include "spatial.hpp"

namespace electoral {

struct RunParams {
    std::uint64_t seed = 42;
    double approval_tau = 1.5;
    std::vector<double> sigma_grid = {0.1, 0.3, 1.0};
    int total_seats = 100;
};

struct SystemRun {
    ElectionResult result;
    ElectionMetrics metrics;
};

struct SimulationOutput {
    std::string scenario_name;
    DistributionDiagnostics diagnostics;  // shared geometric median and mean
    Electorate electorate;
    std::vector<SystemRun> rows;  // registry order
};

// One electorate, one ballot profile, every registered system, all metrics
// against the shared geometric median.  Fully determined by (scenario,
// params).
inline SimulationOutput run_simulation(const Scenario& scenario, const RunParams& params = {}) {
    SimulationOutput out;
    out.scenario_name = scenario.name;
    out.electorate = sample_electorate(scenario.components, scenario.n_voters, params.seed);
    out.diagnostics = diagnostics(out.electorate.voters);

    PreferenceMatrix matrix = build_preference_matrix(out.electorate, scenario.candidates);
    BallotProfile profile = derive_ballots(std::move(matrix), {params.approval_tau});

    SystemInputs inputs{profile, scenario.candidates, out.electorate, params.total_seats};
    for (const SystemEntry& entry : system_registry(params.sigma_grid)) {
        ElectionResult result = entry.run(inputs);
        result.system_name = entry.name;
        ElectionMetrics metrics = evaluate(result, out.electorate, scenario.candidates,
                                           out.diagnostics.geometric_median);
        out.rows.push_back({std::move(result), metrics});
    }
    return out;
}

// Linear-interpolation percentile (the numpy convention): index h = (n-1)p
// into the sorted sample, fractionally blended.
inline double percentile(std::vector<double> values, double p) {
    if (values.empty()) throw std::invalid_argument("percentile: empty sample");
    std::sort(values.begin(), values.end());
    double h = static_cast<double>(values.size() - 1) * p;
    std::size_t lo = static_cast<std::size_t>(h);
    std::size_t hi = std::min(lo + 1, values.size() - 1);
    double frac = h - static_cast<double>(lo);
    return values[lo] + frac * (values[hi] - values[lo]);
}

struct MonteCarloStats {
    double median = 0.0;
    double q25 = 0.0;
    double q75 = 0.0;
    double p5 = 0.0;
    double p95 = 0.0;
};

struct MonteCarloSummary {
    std::string scenario_name;
    std::vector<std::string> system_names;
    std::vector<std::vector<double>> deltas;  // [system][trial]
    std::vector<MonteCarloStats> stats;       // per system
    // ranking_wins[a][b] = trials where system a's delta is strictly below b's
    std::vector<std::vector<int>> ranking_wins;
    int trials = 0;
    int voters_per_trial = 0;
    std::uint64_t base_seed = 0;
};

// Stability harness: every trial re-samples the electorate (trial t uses seed
// base + t * 1000003) and recomputes its own geometric median, so the
// distribution of delta reflects sampling noise, not a fixed draw.
inline MonteCarloSummary run_monte_carlo(const Scenario& scenario, int trials,
                                         int voters_per_trial, const RunParams& params = {}) {
    if (trials < 1) throw std::invalid_argument("run_monte_carlo: trials must be >= 1");
    if (voters_per_trial < 1)
        throw std::invalid_argument("run_monte_carlo: voters_per_trial must be >= 1");

    constexpr std::uint64_t kSeedStride = 1000003;

    MonteCarloSummary summary;
    summary.scenario_name = scenario.name;
    summary.trials = trials;
    summary.voters_per_trial = voters_per_trial;
    summary.base_seed = params.seed;
    for (const SystemEntry& entry : system_registry(params.sigma_grid))
        summary.system_names.push_back(entry.name);
    const std::size_t n_systems = summary.system_names.size();
    summary.deltas.assign(n_systems, {});
    for (auto& d : summary.deltas) d.reserve(trials);

    Scenario trial_scenario = scenario;
    trial_scenario.n_voters = voters_per_trial;
    for (int t = 0; t < trials; ++t) {
        RunParams trial_params = params;
        trial_params.seed = params.seed + static_cast<std::uint64_t>(t) * kSeedStride;
        SimulationOutput run = run_simulation(trial_scenario, trial_params);
        for (std::size_t s = 0; s < n_systems; ++s)
            summary.deltas[s].push_back(run.rows[s].metrics.distance_to_median);
    }

    summary.stats.resize(n_systems);
    for (std::size_t s = 0; s < n_systems; ++s) {
        const std::vector<double>& d = summary.deltas[s];
        summary.stats[s] = {percentile(d, 0.5), percentile(d, 0.25), percentile(d, 0.75),
                            percentile(d, 0.05), percentile(d, 0.95)};
    }
    summary.ranking_wins.assign(n_systems, std::vector<int>(n_systems, 0));
    for (int t = 0; t < trials; ++t)
        for (std::size_t a = 0; a < n_systems; ++a)
            for (std::size_t b = 0; b < n_systems; ++b)
                if (a != b && summary.deltas[a][t] < summary.deltas[b][t])
                    ++summary.ranking_wins[a][b];
    return summary;
}

}  // namespace electoral
