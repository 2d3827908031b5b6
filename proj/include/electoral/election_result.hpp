#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "candidates.hpp"
#include "point.hpp"

#include "json.hpp"

namespace electoral {

// Unified outcome record shared by every system.  Winner-take-all systems
// put seat mass 1 on the single winner and use its position as the outcome;
// PR systems fill fractional seat shares plus the supplementary seat-share
// centroid.  The trace carries round-by-round diagnostics as free-form JSON.
struct ElectionResult {
    std::string system_name;
    Point2 outcome_position;
    std::optional<Point2> centroid_position;
    std::vector<double> seat_shares;  // indexed by candidate, sums to 1
    std::vector<int> winner_indices;
    bool is_pr = false;
    nlohmann::json trace;
};

inline ElectionResult make_wta_result(std::string system_name, int winner,
                                      const CandidateSet& cs, nlohmann::json trace = {}) {
    ElectionResult r;
    r.system_name = std::move(system_name);
    r.outcome_position = cs.positions[winner];
    r.seat_shares.assign(cs.size(), 0.0);
    r.seat_shares[winner] = 1.0;
    r.winner_indices = {winner};
    r.is_pr = false;
    r.trace = std::move(trace);
    return r;
}

// Seat-share-weighted mean of candidate positions.
inline Point2 seat_share_centroid(const std::vector<double>& seat_shares,
                                  const CandidateSet& cs) {
    Point2 c{};
    for (std::size_t k = 0; k < seat_shares.size(); ++k) c += seat_shares[k] * cs.positions[k];
    return c;
}

}  // namespace electoral
