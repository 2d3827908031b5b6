#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "point.hpp"

namespace electoral {

struct CandidateSet {
    std::vector<std::string> labels;
    std::vector<Point2> positions;

    std::size_t size() const { return labels.size(); }
};

inline void validate_candidates(const CandidateSet& cs) {
    if (cs.labels.size() != cs.positions.size())
        throw std::invalid_argument("candidates: labels/positions length mismatch");
    if (cs.labels.empty()) throw std::invalid_argument("candidates: empty set");
    for (std::size_t i = 0; i < cs.labels.size(); ++i) {
        if (cs.labels[i].empty()) throw std::invalid_argument("candidates: empty label");
        if (!in_unit_square(cs.positions[i]))
            throw std::invalid_argument("candidates: position out of [0,1]^2 for '" +
                                        cs.labels[i] + "'");
        for (std::size_t j = i + 1; j < cs.labels.size(); ++j)
            if (cs.labels[i] == cs.labels[j])
                throw std::invalid_argument("candidates: duplicate label '" + cs.labels[i] + "'");
    }
}

// Argmin of distance; equidistant candidates resolve to the lowest index,
// the tie-break rule used for every argmin/argmax in this library.
inline int nearest_candidate(Point2 voter, const CandidateSet& cs) {
    if (cs.positions.empty()) throw std::invalid_argument("nearest_candidate: empty set");
    int best = 0;
    double best_d = euclidean_distance(voter, cs.positions[0]);
    for (std::size_t k = 1; k < cs.positions.size(); ++k) {
        double d = euclidean_distance(voter, cs.positions[k]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(k);
        }
    }
    return best;
}

}  // namespace electoral
