#pragma once

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "simulation.hpp"

namespace electoral {

namespace detail {

inline std::string fixed6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string fixed6_opt(const std::optional<double>& v) {
    return v ? fixed6(*v) : std::string{};
}

// CSV carries 6 decimals, so the JSON export rounds identically to keep the
// two byte-comparable after parsing.
inline double round6(double v) { return std::round(v * 1e6) / 1e6; }

inline nlohmann::json round6_opt(const std::optional<double>& v) {
    return v ? nlohmann::json(round6(*v)) : nlohmann::json(nullptr);
}

}  // namespace detail

inline void write_text_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

inline const char* kResultsCsvHeader =
    "scenario,system,delta,majority_satisfaction,mean_distance,worst_distance,gini,"
    "centroid_delta,median_legislator_delta,artefact_gap";

// One row per system per scenario, registry order, 6-decimal reals, absent
// optionals as empty fields.
inline std::string results_csv(const std::vector<SimulationOutput>& runs) {
    std::ostringstream out;
    out << kResultsCsvHeader << "\n";
    for (const SimulationOutput& run : runs)
        for (const SystemRun& row : run.rows) {
            const ElectionMetrics& m = row.metrics;
            out << run.scenario_name << ',' << row.result.system_name << ','
                << detail::fixed6(m.distance_to_median) << ','
                << detail::fixed6(m.majority_satisfaction) << ','
                << detail::fixed6(m.mean_voter_distance) << ','
                << detail::fixed6(m.worst_voter_distance) << ','
                << detail::fixed6(m.distance_gini) << ','
                << detail::fixed6_opt(m.centroid_delta) << ','
                << detail::fixed6_opt(m.median_legislator_delta) << ','
                << detail::fixed6_opt(m.artefact_gap) << "\n";
        }
    return out.str();
}

inline nlohmann::json results_json(const std::vector<SimulationOutput>& runs,
                                   const RunParams& params) {
    nlohmann::json doc;
    doc["config"] = {{"seed", params.seed},
                     {"approval_tau", params.approval_tau},
                     {"sigma_grid", params.sigma_grid},
                     {"total_seats", params.total_seats}};
    doc["scenarios"] = nlohmann::json::array();
    for (const SimulationOutput& run : runs) {
        nlohmann::json entry;
        entry["name"] = run.scenario_name;
        entry["geometric_median"] = {run.diagnostics.geometric_median.x1,
                                     run.diagnostics.geometric_median.x2};
        entry["arithmetic_mean"] = {run.diagnostics.arithmetic_mean.x1,
                                    run.diagnostics.arithmetic_mean.x2};
        entry["median_mean_gap"] = run.diagnostics.median_mean_gap;
        entry["systems"] = nlohmann::json::array();
        for (const SystemRun& row : run.rows) {
            const ElectionMetrics& m = row.metrics;
            nlohmann::json sys;
            sys["system"] = row.result.system_name;
            sys["delta"] = detail::round6(m.distance_to_median);
            sys["majority_satisfaction"] = detail::round6(m.majority_satisfaction);
            sys["mean_distance"] = detail::round6(m.mean_voter_distance);
            sys["worst_distance"] = detail::round6(m.worst_voter_distance);
            sys["gini"] = detail::round6(m.distance_gini);
            sys["centroid_delta"] = detail::round6_opt(m.centroid_delta);
            sys["median_legislator_delta"] = detail::round6_opt(m.median_legislator_delta);
            sys["artefact_gap"] = detail::round6_opt(m.artefact_gap);
            sys["is_pr"] = row.result.is_pr;
            sys["winners"] = row.result.winner_indices;
            sys["seat_shares"] = row.result.seat_shares;
            sys["outcome_position"] = {row.result.outcome_position.x1,
                                       row.result.outcome_position.x2};
            sys["trace"] = row.result.trace;
            entry["systems"].push_back(std::move(sys));
        }
        doc["scenarios"].push_back(std::move(entry));
    }
    return doc;
}

namespace detail {

// Green -> yellow -> red over t in [0,1].
inline std::string heat_colour(double t) {
    auto lerp = [](double a, double b, double u) { return a + (b - a) * u; };
    double r, g, b;
    if (t < 0.5) {
        double u = t * 2.0;
        r = lerp(46, 253, u);
        g = lerp(125, 216, u);
        b = lerp(50, 53, u);
    } else {
        double u = (t - 0.5) * 2.0;
        r = lerp(253, 198, u);
        g = lerp(216, 40, u);
        b = lerp(53, 40, u);
    }
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", static_cast<int>(r), static_cast<int>(g),
                  static_cast<int>(b));
    return buf;
}

inline std::string xml_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

}  // namespace detail

// Static SVG heatmap: systems as rows, scenarios as columns, colour scaled
// over the observed delta range, black border on each column's minimum
// (lowest row index on ties).
inline std::string heatmap_svg(const std::vector<std::string>& scenario_names,
                               const std::vector<std::string>& system_names,
                               const std::vector<std::vector<double>>& deltas) {
    if (system_names.empty() || scenario_names.empty())
        throw std::invalid_argument("heatmap_svg: empty matrix");
    if (deltas.size() != system_names.size())
        throw std::invalid_argument("heatmap_svg: row count mismatch");
    for (const auto& row : deltas)
        if (row.size() != scenario_names.size())
            throw std::invalid_argument("heatmap_svg: column count mismatch");

    const std::size_t rows = system_names.size();
    const std::size_t cols = scenario_names.size();
    double v_min = deltas[0][0], v_max = deltas[0][0];
    for (const auto& row : deltas)
        for (double v : row) {
            v_min = std::min(v_min, v);
            v_max = std::max(v_max, v);
        }
    double span = v_max - v_min;

    std::vector<std::size_t> column_min(cols, 0);
    for (std::size_t c = 0; c < cols; ++c)
        for (std::size_t r = 1; r < rows; ++r)
            if (deltas[r][c] < deltas[column_min[c]][c]) column_min[c] = r;

    constexpr int cell_w = 96, cell_h = 30, left = 200, top = 140, pad = 16;
    const int width = left + static_cast<int>(cols) * cell_w + pad;
    const int height = top + static_cast<int>(rows) * cell_h + pad;

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width
        << "\" height=\"" << height << "\" font-family=\"sans-serif\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<text x=\"" << pad << "\" y=\"24\" font-size=\"15\" font-weight=\"bold\">"
        << "Distance to geometric median by system and scenario</text>\n";

    for (std::size_t c = 0; c < cols; ++c) {
        int cx = left + static_cast<int>(c) * cell_w + cell_w / 2;
        svg << "<text x=\"" << cx << "\" y=\"" << top - 8 << "\" font-size=\"11\" "
            << "text-anchor=\"start\" transform=\"rotate(-40 " << cx << " " << top - 8 << ")\">"
            << detail::xml_escape(scenario_names[c]) << "</text>\n";
    }
    for (std::size_t r = 0; r < rows; ++r) {
        int cy = top + static_cast<int>(r) * cell_h + cell_h / 2 + 4;
        svg << "<text x=\"" << left - 8 << "\" y=\"" << cy << "\" font-size=\"11\" "
            << "text-anchor=\"end\">" << detail::xml_escape(system_names[r]) << "</text>\n";
    }

    char annotation[32];
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            double v = deltas[r][c];
            double t = span > 0.0 ? (v - v_min) / span : 0.0;
            int x = left + static_cast<int>(c) * cell_w;
            int y = top + static_cast<int>(r) * cell_h;
            bool best = column_min[c] == r;
            svg << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell_w
                << "\" height=\"" << cell_h << "\" fill=\"" << detail::heat_colour(t) << "\""
                << (best ? " stroke=\"black\" stroke-width=\"2.5\""
                         : " stroke=\"#cccccc\" stroke-width=\"0.5\"")
                << "/>\n";
            std::snprintf(annotation, sizeof(annotation), "%.4f", v);
            svg << "<text x=\"" << x + cell_w / 2 << "\" y=\"" << y + cell_h / 2 + 4
                << "\" font-size=\"10\" text-anchor=\"middle\" fill=\""
                << (t > 0.75 ? "white" : "#111111") << "\">" << annotation << "</text>\n";
        }
    svg << "</svg>\n";
    return svg.str();
}

// Convenience wrapper building the matrix from simulation outputs
// (columns = scenarios in run order, rows = registry order).
inline std::string heatmap_svg(const std::vector<SimulationOutput>& runs) {
    if (runs.empty()) throw std::invalid_argument("heatmap_svg: no runs");
    std::vector<std::string> scenario_names, system_names;
    for (const SimulationOutput& run : runs) scenario_names.push_back(run.scenario_name);
    for (const SystemRun& row : runs.front().rows)
        system_names.push_back(row.result.system_name);
    std::vector<std::vector<double>> deltas(system_names.size(),
                                            std::vector<double>(runs.size(), 0.0));
    for (std::size_t c = 0; c < runs.size(); ++c) {
        if (runs[c].rows.size() != system_names.size())
            throw std::invalid_argument("heatmap_svg: inconsistent system rows across runs");
        for (std::size_t r = 0; r < system_names.size(); ++r)
            deltas[r][c] = runs[c].rows[r].metrics.distance_to_median;
    }
    return heatmap_svg(scenario_names, system_names, deltas);
}

// Long-format per-trial deltas so external tools can redraw the stability
// box plots.
inline std::string monte_carlo_csv(const MonteCarloSummary& summary) {
    std::ostringstream out;
    out << "scenario,system,trial,delta\n";
    for (std::size_t s = 0; s < summary.system_names.size(); ++s)
        for (int t = 0; t < summary.trials; ++t)
            out << summary.scenario_name << ',' << summary.system_names[s] << ',' << t << ','
                << detail::fixed6(summary.deltas[s][t]) << "\n";
    return out.str();
}

inline nlohmann::json monte_carlo_json(const MonteCarloSummary& summary) {
    nlohmann::json doc;
    doc["scenario"] = summary.scenario_name;
    doc["trials"] = summary.trials;
    doc["voters_per_trial"] = summary.voters_per_trial;
    doc["base_seed"] = summary.base_seed;
    doc["systems"] = nlohmann::json::array();
    for (std::size_t s = 0; s < summary.system_names.size(); ++s) {
        const MonteCarloStats& st = summary.stats[s];
        doc["systems"].push_back({{"system", summary.system_names[s]},
                                  {"median", st.median},
                                  {"q25", st.q25},
                                  {"q75", st.q75},
                                  {"p5", st.p5},
                                  {"p95", st.p95}});
    }
    doc["ranking_wins"] = summary.ranking_wins;
    return doc;
}

}  // namespace electoral
