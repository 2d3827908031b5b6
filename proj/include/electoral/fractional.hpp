#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballots.hpp"
#include "candidates.hpp"
#include "election_result.hpp"

namespace electoral {

enum class FractionalVariant { Discrete, Continuous };

struct FractionalConfig {
    double sigma = 0.1;  // softmax temperature
    FractionalVariant variant = FractionalVariant::Discrete;
};

struct WeightProfile {
    std::vector<std::vector<double>> weights;  // n x K rows on the simplex
    std::vector<double> mean_weights;          // column means
    Point2 centroid;                           // mean-weight blend of candidate positions
};

// Boltzmann softmax over distances, w_ik proportional to exp(-d_ik / sigma).
// Each row subtracts its minimum distance before exponentiating: softmax is
// shift invariant, and without this the exponentials underflow to an
// all-zero row at small sigma.
inline WeightProfile compute_weights(const PreferenceMatrix& matrix, double sigma,
                                     const CandidateSet& cs) {
    if (!(sigma > 0.0)) throw std::invalid_argument("compute_weights: sigma must be positive");
    const std::size_t n = matrix.voters();
    const std::size_t k_count = matrix.candidates();
    if (k_count != cs.size())
        throw std::invalid_argument("compute_weights: matrix/candidate width mismatch");

    WeightProfile wp;
    wp.weights.assign(n, std::vector<double>(k_count, 0.0));
    wp.mean_weights.assign(k_count, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double>& row = matrix.distances[i];
        double d_min = *std::min_element(row.begin(), row.end());
        double sum = 0.0;
        for (std::size_t k = 0; k < k_count; ++k) {
            double w = std::exp(-(row[k] - d_min) / sigma);
            wp.weights[i][k] = w;
            sum += w;
        }
        for (std::size_t k = 0; k < k_count; ++k) {
            wp.weights[i][k] /= sum;
            wp.mean_weights[k] += wp.weights[i][k];
        }
    }
    for (double& w : wp.mean_weights) w /= static_cast<double>(n);
    wp.centroid = {0.0, 0.0};
    for (std::size_t k = 0; k < k_count; ++k)
        wp.centroid += wp.mean_weights[k] * cs.positions[k];
    return wp;
}

// "0.1" -> "0.1", 1.0 -> "1.0"; keeps registry names readable.
inline std::string format_sigma(double sigma) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%g", sigma);
    std::string s(buf);
    if (s.find('.') == std::string::npos && s.find('e') == std::string::npos) s += ".0";
    return s;
}

// Fractional Ballot.  Both variants use the population-weight centroid as
// the outcome position, so they share delta by construction.  Discrete
// additionally crowns the candidate nearest the centroid (single-winner
// reading); Continuous hands every candidate its mean weight as fractional
// seat share (weighted-legislature reading).
inline ElectionResult run_fractional(const BallotProfile& profile, const CandidateSet& cs,
                                     FractionalConfig config) {
    WeightProfile wp = compute_weights(profile.distances, config.sigma, cs);

    ElectionResult r;
    r.outcome_position = wp.centroid;
    r.centroid_position = wp.centroid;
    r.trace = {{"sigma", config.sigma}, {"mean_weights", wp.mean_weights}};

    if (config.variant == FractionalVariant::Discrete) {
        int winner = nearest_candidate(wp.centroid, cs);
        r.system_name = "FBD (sigma=" + format_sigma(config.sigma) + ")";
        r.seat_shares.assign(cs.size(), 0.0);
        r.seat_shares[winner] = 1.0;
        r.winner_indices = {winner};
        r.is_pr = false;
    } else {
        r.system_name = "FBC (sigma=" + format_sigma(config.sigma) + ")";
        r.seat_shares = wp.mean_weights;
        for (std::size_t k = 0; k < cs.size(); ++k)
            if (wp.mean_weights[k] > 0.0) r.winner_indices.push_back(static_cast<int>(k));
        r.is_pr = true;
    }
    return r;
}

struct LimitReport {
    // sigma -> 0 behaviour (checked at 1e-4) over rows with a unique minimum
    int rows_checked = 0;
    int rows_excluded = 0;    // non-unique minima, skipped
    int argmax_mismatches = 0;
    bool fbd_matches_plurality = false;
    // sigma -> infinity behaviour (checked at 1e6)
    double max_uniform_deviation = 0.0;   // max_k |w-bar_k - 1/K|
    double centroid_mean_deviation = 0.0; // distance from equal-weight candidate mean
};

// Exercises both temperature limits on a concrete profile: tiny sigma must
// reproduce Plurality, huge sigma must flatten weights to uniform and pull
// the centroid onto the plain candidate mean.
inline LimitReport verify_limits(const PreferenceMatrix& matrix, const CandidateSet& cs) {
    LimitReport report;
    const std::size_t n = matrix.voters();
    const std::size_t k_count = matrix.candidates();

    WeightProfile sharp = compute_weights(matrix, 1e-4, cs);
    std::vector<int> plurality_votes(k_count, 0);
    std::vector<int> weight_votes(k_count, 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double>& row = matrix.distances[i];
        int nearest = static_cast<int>(std::min_element(row.begin(), row.end()) - row.begin());
        ++plurality_votes[nearest];
        bool unique = true;
        for (std::size_t k = 0; k < k_count; ++k)
            if (static_cast<int>(k) != nearest && row[k] == row[nearest]) unique = false;
        if (!unique) {
            ++report.rows_excluded;
            continue;
        }
        ++report.rows_checked;
        const std::vector<double>& w = sharp.weights[i];
        int heaviest = static_cast<int>(std::max_element(w.begin(), w.end()) - w.begin());
        ++weight_votes[heaviest];
        if (heaviest != nearest) ++report.argmax_mismatches;
    }
    int fbd_winner = nearest_candidate(sharp.centroid, cs);
    int plurality_winner =
        static_cast<int>(std::max_element(plurality_votes.begin(), plurality_votes.end()) -
                         plurality_votes.begin());
    report.fbd_matches_plurality = fbd_winner == plurality_winner;

    WeightProfile flat = compute_weights(matrix, 1e6, cs);
    double uniform = 1.0 / static_cast<double>(k_count);
    for (double w : flat.mean_weights)
        report.max_uniform_deviation = std::max(report.max_uniform_deviation, std::abs(w - uniform));
    Point2 candidate_mean{};
    for (Point2 p : cs.positions) candidate_mean += p;
    candidate_mean = candidate_mean / static_cast<double>(k_count);
    report.centroid_mean_deviation = euclidean_distance(flat.centroid, candidate_mean);
    return report;
}

}  // namespace electoral
