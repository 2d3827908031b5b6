#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "candidates.hpp"
#include "electorate.hpp"
#include "point.hpp"

namespace electoral {

// n x K voter-candidate distances d_ik.
struct PreferenceMatrix {
    std::vector<std::vector<double>> distances;

    std::size_t voters() const { return distances.size(); }
    std::size_t candidates() const { return distances.empty() ? 0 : distances.front().size(); }
};

struct BallotConfig {
    double approval_tau = 1.5;  // approve candidates within tau * own minimum distance
};

// Every ballot type all systems consume, derived once per electorate so each
// system sees the same underlying preferences.
struct BallotProfile {
    PreferenceMatrix distances;
    std::vector<std::vector<int>> rankings;    // r_ik in 1..K, 1 = most preferred
    std::vector<std::vector<double>> scores;   // s_ik in [0,1], nearest candidate gets 1
    std::vector<std::vector<char>> approvals;  // a_ik
    std::vector<int> plurality_choice;         // rank-1 candidate per voter
    double approval_tau = 1.5;

    std::size_t voters() const { return rankings.size(); }
    std::size_t candidates() const { return rankings.empty() ? 0 : rankings.front().size(); }
};

inline PreferenceMatrix build_preference_matrix(const Electorate& electorate,
                                                const CandidateSet& cs) {
    if (electorate.voters.empty()) throw std::invalid_argument("preference matrix: no voters");
    if (cs.size() == 0) throw std::invalid_argument("preference matrix: no candidates");
    PreferenceMatrix m;
    m.distances.resize(electorate.voters.size());
    for (std::size_t i = 0; i < electorate.voters.size(); ++i) {
        m.distances[i].resize(cs.size());
        for (std::size_t k = 0; k < cs.size(); ++k)
            m.distances[i][k] = euclidean_distance(electorate.voters[i], cs.positions[k]);
    }
    return m;
}

// Rankings sort each row by ascending distance (ties to the lowest candidate
// index).  Scores min-max scale each row so the nearest candidate gets 1 and
// the farthest 0; a degenerate all-equal row scores 1 everywhere.  Approvals
// use the multiplicative threshold a_ik = [d_ik <= tau * d_i,min].
inline BallotProfile derive_ballots(PreferenceMatrix matrix, BallotConfig config = {}) {
    if (matrix.voters() == 0) throw std::invalid_argument("derive_ballots: empty matrix");
    if (!(config.approval_tau >= 1.0))
        throw std::invalid_argument("derive_ballots: approval tau must be >= 1");

    const std::size_t n = matrix.voters();
    const std::size_t k_count = matrix.candidates();

    BallotProfile profile;
    profile.approval_tau = config.approval_tau;
    profile.rankings.assign(n, std::vector<int>(k_count, 0));
    profile.scores.assign(n, std::vector<double>(k_count, 0.0));
    profile.approvals.assign(n, std::vector<char>(k_count, 0));
    profile.plurality_choice.resize(n);

    std::vector<int> order(k_count);
    for (std::size_t i = 0; i < n; ++i) {
        const std::vector<double>& row = matrix.distances[i];
        if (row.size() != k_count)
            throw std::invalid_argument("derive_ballots: ragged distance matrix");

        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&row](int a, int b) {
            if (row[a] != row[b]) return row[a] < row[b];
            return a < b;
        });

        double d_min = row[order.front()];
        double d_max = row[order.back()];
        double span = d_max - d_min;
        double threshold = config.approval_tau * d_min;

        for (std::size_t r = 0; r < k_count; ++r) profile.rankings[i][order[r]] = static_cast<int>(r) + 1;
        for (std::size_t k = 0; k < k_count; ++k) {
            profile.scores[i][k] = span > 0.0 ? 1.0 - (row[k] - d_min) / span : 1.0;
            profile.approvals[i][k] = row[k] <= threshold ? 1 : 0;
        }
        profile.plurality_choice[i] = order.front();
    }
    profile.distances = std::move(matrix);
    return profile;
}

}  // namespace electoral
