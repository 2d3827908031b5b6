#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "candidates.hpp"
#include "election_result.hpp"
#include "electorate.hpp"
#include "point.hpp"

namespace electoral {

// Gini coefficient: relative mean absolute difference, computed via the
// sorted identity G = 2*sum(i * x_(i)) / (n * sum) - (n + 1)/n.  All-zero
// input counts as perfectly equal.
inline double gini(std::vector<double> values) {
    if (values.empty()) throw std::invalid_argument("gini: empty input");
    double sum = 0.0;
    for (double v : values) {
        if (v < 0.0) throw std::invalid_argument("gini: negative value");
        sum += v;
    }
    if (sum == 0.0) return 0.0;
    std::sort(values.begin(), values.end());
    double weighted = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i)
        weighted += static_cast<double>(i + 1) * values[i];
    double n = static_cast<double>(values.size());
    return 2.0 * weighted / (n * sum) - (n + 1.0) / n;
}

// Position of the candidate at the 50th percentile of cumulative seat share
// when seated candidates are sorted by the economic axis.  A cumulative
// share landing exactly on 0.5 resolves to that candidate.
inline Point2 median_legislator(const std::vector<double>& seat_shares, const CandidateSet& cs) {
    if (seat_shares.size() != cs.size())
        throw std::invalid_argument("median_legislator: share/candidate length mismatch");
    std::vector<int> seated;
    for (std::size_t k = 0; k < seat_shares.size(); ++k) {
        if (seat_shares[k] < 0.0)
            throw std::invalid_argument("median_legislator: negative seat share");
        if (seat_shares[k] > 0.0) seated.push_back(static_cast<int>(k));
    }
    if (seated.empty()) throw std::invalid_argument("median_legislator: no seated candidates");
    std::sort(seated.begin(), seated.end(), [&cs](int a, int b) {
        if (cs.positions[a].x1 != cs.positions[b].x1) return cs.positions[a].x1 < cs.positions[b].x1;
        return a < b;
    });
    double cumulative = 0.0;
    for (int k : seated) {
        cumulative += seat_shares[k];
        if (cumulative >= 0.5 - 1e-12) return cs.positions[k];
    }
    return cs.positions[seated.back()];  // float fallback; shares sum to 1
}

struct ElectionMetrics {
    double distance_to_median = 0.0;  // delta, the primary metric
    double majority_satisfaction = 0.0;
    double mean_voter_distance = 0.0;
    double worst_voter_distance = 0.0;
    double distance_gini = 0.0;
    // Populated for PR results only.
    std::optional<double> median_legislator_delta;
    std::optional<double> centroid_delta;
    std::optional<double> artefact_gap;  // median-legislator delta minus centroid delta
};

// Evaluates one result against the shared geometric median of the
// electorate.  Majority satisfaction counts voters strictly closer to the
// outcome position than to every candidate standing elsewhere; a candidate
// located at the outcome itself (the winner, typically) is not a rival.
inline ElectionMetrics evaluate(const ElectionResult& result, const Electorate& electorate,
                                const CandidateSet& cs, Point2 median) {
    ElectionMetrics m;
    const Point2 outcome = result.outcome_position;
    m.distance_to_median = euclidean_distance(outcome, median);

    const std::size_t n = electorate.voters.size();
    std::vector<double> voter_distance(n);
    double worst = 0.0, total = 0.0;
    std::size_t satisfied = 0;
    for (std::size_t i = 0; i < n; ++i) {
        Point2 v = electorate.voters[i];
        double d = euclidean_distance(v, outcome);
        voter_distance[i] = d;
        total += d;
        worst = std::max(worst, d);

        bool beats_all = true;
        for (std::size_t k = 0; k < cs.size(); ++k) {
            if (euclidean_distance(cs.positions[k], outcome) <= 1e-12) continue;
            if (d >= euclidean_distance(v, cs.positions[k])) {
                beats_all = false;
                break;
            }
        }
        if (beats_all) ++satisfied;
    }
    m.mean_voter_distance = n ? total / static_cast<double>(n) : 0.0;
    m.worst_voter_distance = worst;
    m.majority_satisfaction = n ? static_cast<double>(satisfied) / static_cast<double>(n) : 0.0;
    m.distance_gini = gini(voter_distance);

    if (result.is_pr) {
        Point2 ml = median_legislator(result.seat_shares, cs);
        Point2 centroid = result.centroid_position ? *result.centroid_position
                                                   : seat_share_centroid(result.seat_shares, cs);
        m.median_legislator_delta = euclidean_distance(ml, median);
        m.centroid_delta = euclidean_distance(centroid, median);
        m.artefact_gap = *m.median_legislator_delta - *m.centroid_delta;
    }
    return m;
}

}  // namespace electoral
