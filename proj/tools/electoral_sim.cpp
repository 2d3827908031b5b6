// Command-line driver: loads scenario YAMLs, runs the single-draw or
// Monte Carlo evaluation, and writes CSV/JSON/SVG reports.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "electoral/electoral.hpp"

namespace fs = std::filesystem;

#ifndef ELECTORAL_SCENARIO_DIR
#define ELECTORAL_SCENARIO_DIR "scenarios"
#endif

namespace {

std::string voters_csv(const electoral::Electorate& electorate) {
    std::ostringstream out;
    out << "x1,x2,component\n";
    for (std::size_t i = 0; i < electorate.voters.size(); ++i) {
        char buf[80];
        std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%d\n", electorate.voters[i].x1,
                      electorate.voters[i].x2, electorate.component_of[i]);
        out << buf;
    }
    return out.str();
}

void print_run(const electoral::SimulationOutput& run) {
    std::printf("scenario: %s\n", run.scenario_name.c_str());
    std::printf("  geometric median (%.4f, %.4f)  mean (%.4f, %.4f)  gap %.4f\n",
                run.diagnostics.geometric_median.x1, run.diagnostics.geometric_median.x2,
                run.diagnostics.arithmetic_mean.x1, run.diagnostics.arithmetic_mean.x2,
                run.diagnostics.median_mean_gap);
    std::printf("  %-26s %10s %10s\n", "system", "delta", "majority");
    for (const electoral::SystemRun& row : run.rows)
        std::printf("  %-26s %10.4f %10.4f\n", row.result.system_name.c_str(),
                    row.metrics.distance_to_median, row.metrics.majority_satisfaction);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Electoral system simulation over 2-D ideological space"};

    std::vector<std::string> requested;
    std::string scenario_dir = ELECTORAL_SCENARIO_DIR;
    std::string mode = "single";
    std::string output_dir = "out";
    std::vector<std::string> formats = {"csv"};
    electoral::RunParams params;
    int trials = 200;
    int mc_voters = 2000;
    bool dump_voters = false;

    app.add_option("--scenario", requested,
                   "Scenario name or slug (repeatable; default: all in --scenario-dir)");
    app.add_option("--scenario-dir", scenario_dir, "Directory of scenario YAML files")
        ->capture_default_str();
    app.add_option("--mode", mode, "single | monte-carlo")
        ->check(CLI::IsMember({"single", "monte-carlo"}))
        ->capture_default_str();
    app.add_option("--seed", params.seed, "Base random seed")->capture_default_str();
    app.add_option("--trials", trials, "Monte Carlo trial count")->capture_default_str();
    app.add_option("--mc-voters", mc_voters, "Voters re-sampled per Monte Carlo trial")
        ->capture_default_str();
    app.add_option("--tau", params.approval_tau, "Approval threshold multiplier")
        ->capture_default_str();
    app.add_option("--sigma", params.sigma_grid,
                   "Fractional Ballot temperature grid (repeatable)")
        ->capture_default_str();
    app.add_option("--seats", params.total_seats, "Legislature size for PR systems")
        ->capture_default_str();
    app.add_option("--output-dir", output_dir, "Directory for report files")
        ->capture_default_str();
    app.add_option("--format", formats, "Output formats: csv json svg (repeatable)")
        ->capture_default_str();
    app.add_flag("--dump-voters", dump_voters, "Also write sampled voter positions per scenario");

    CLI11_PARSE(app, argc, argv);

    for (const std::string& f : formats)
        if (f != "csv" && f != "json" && f != "svg") {
            std::fprintf(stderr, "error: unknown format '%s' (expected csv, json or svg)\n",
                         f.c_str());
            return 1;
        }
    if (formats.empty()) {
        std::fprintf(stderr, "error: at least one --format is required\n");
        return 1;
    }
    auto wants = [&formats](const char* f) {
        return std::find(formats.begin(), formats.end(), f) != formats.end();
    };

    std::string sigma_list;
    for (double s : params.sigma_grid)
        sigma_list += (sigma_list.empty() ? "" : ", ") + electoral::format_sigma(s);
    std::printf("config: mode=%s seed=%llu tau=%g sigma_grid=[%s] seats=%d\n", mode.c_str(),
                static_cast<unsigned long long>(params.seed), params.approval_tau,
                sigma_list.c_str(), params.total_seats);

    electoral::ScenarioLoadResult loaded;
    try {
        loaded = electoral::load_all_scenarios(scenario_dir);
    } catch (const electoral::ScenarioError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    for (const std::string& err : loaded.errors)
        std::fprintf(stderr, "warning: skipped scenario file: %s\n", err.c_str());

    std::vector<electoral::Scenario> scenarios;
    if (requested.empty()) {
        scenarios = loaded.scenarios;
        if (scenarios.empty()) {
            std::fprintf(stderr, "error: no scenarios found in %s\n", scenario_dir.c_str());
            return 1;
        }
    } else {
        for (const std::string& want : requested) {
            auto match = std::find_if(loaded.scenarios.begin(), loaded.scenarios.end(),
                                      [&want](const electoral::Scenario& s) {
                                          return want == s.name || want == electoral::slugify(s.name);
                                      });
            if (match == loaded.scenarios.end()) {
                std::fprintf(stderr, "error: scenario '%s' not found in %s\n", want.c_str(),
                             scenario_dir.c_str());
                return 1;
            }
            scenarios.push_back(*match);
        }
    }

    std::error_code dir_error;
    fs::create_directories(output_dir, dir_error);
    if (dir_error) {
        std::fprintf(stderr, "error: cannot create output dir %s: %s\n", output_dir.c_str(),
                     dir_error.message().c_str());
        return 1;
    }

    try {
        if (mode == "single") {
            std::vector<electoral::SimulationOutput> runs;
            for (const electoral::Scenario& sc : scenarios) {
                runs.push_back(electoral::run_simulation(sc, params));
                print_run(runs.back());
                if (dump_voters)
                    electoral::write_text_file(
                        fs::path(output_dir) /
                            ("voters_" + electoral::slugify(sc.name) + ".csv"),
                        voters_csv(runs.back().electorate));
            }
            if (wants("csv"))
                electoral::write_text_file(fs::path(output_dir) / "results.csv",
                                           electoral::results_csv(runs));
            if (wants("json"))
                electoral::write_text_file(fs::path(output_dir) / "results.json",
                                           electoral::results_json(runs, params).dump(2) + "\n");
            if (wants("svg"))
                electoral::write_text_file(fs::path(output_dir) / "heatmap.svg",
                                           electoral::heatmap_svg(runs));
        } else {
            for (const electoral::Scenario& sc : scenarios) {
                electoral::MonteCarloSummary summary =
                    electoral::run_monte_carlo(sc, trials, mc_voters, params);
                std::string slug = electoral::slugify(sc.name);
                std::printf("scenario: %s (%d trials x %d voters)\n", sc.name.c_str(),
                            summary.trials, summary.voters_per_trial);
                for (std::size_t s = 0; s < summary.system_names.size(); ++s)
                    std::printf("  %-26s median %.4f  IQR [%.4f, %.4f]  p5/p95 [%.4f, %.4f]\n",
                                summary.system_names[s].c_str(), summary.stats[s].median,
                                summary.stats[s].q25, summary.stats[s].q75, summary.stats[s].p5,
                                summary.stats[s].p95);
                if (wants("csv"))
                    electoral::write_text_file(fs::path(output_dir) / ("mc_" + slug + ".csv"),
                                               electoral::monte_carlo_csv(summary));
                if (wants("json"))
                    electoral::write_text_file(fs::path(output_dir) / ("mc_" + slug + ".json"),
                                               electoral::monte_carlo_json(summary).dump(2) +
                                                   "\n");
            }
            if (wants("svg"))
                std::fprintf(stderr, "note: svg output applies to single mode only; skipped\n");
        }
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
