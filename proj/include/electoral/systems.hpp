#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ballots.hpp"
#include "candidates.hpp"
#include "election_result.hpp"
#include "electorate.hpp"
#include "metrics.hpp"

namespace electoral {

namespace detail {

// First-preference vote totals v_k.
inline std::vector<int> plurality_counts(const BallotProfile& profile) {
    std::vector<int> counts(profile.candidates(), 0);
    for (int choice : profile.plurality_choice) ++counts[choice];
    return counts;
}

// Lowest-index argmax, the global tie-break rule.
template <typename T>
int argmax_lowest(const std::vector<T>& xs) {
    return static_cast<int>(std::max_element(xs.begin(), xs.end()) - xs.begin());
}

}  // namespace detail

inline ElectionResult run_plurality(const BallotProfile& profile, const CandidateSet& cs) {
    std::vector<int> votes = detail::plurality_counts(profile);
    int winner = detail::argmax_lowest(votes);
    return make_wta_result("Plurality", winner, cs, {{"votes", votes}});
}

inline ElectionResult run_two_round(const BallotProfile& profile, const CandidateSet& cs) {
    std::vector<int> votes = detail::plurality_counts(profile);
    const int n = static_cast<int>(profile.voters());
    int leader = detail::argmax_lowest(votes);
    nlohmann::json trace{{"first_round", votes}};

    if (2 * votes[leader] > n) {
        trace["majority"] = true;
        return make_wta_result("Two-Round Runoff", leader, cs, std::move(trace));
    }

    // Top two by votes, ties to the lowest index.
    std::vector<int> order(votes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&votes](int a, int b) {
        if (votes[a] != votes[b]) return votes[a] > votes[b];
        return a < b;
    });
    int a = std::min(order[0], order[1]);
    int b = std::max(order[0], order[1]);

    int prefer_a = 0;
    for (const std::vector<int>& ranks : profile.rankings)
        if (ranks[a] < ranks[b]) ++prefer_a;
    int prefer_b = n - prefer_a;
    int winner = prefer_b > prefer_a ? b : a;

    trace["majority"] = false;
    trace["runoff"] = {{"pair", {a, b}}, {"votes", {prefer_a, prefer_b}}};
    return make_wta_result("Two-Round Runoff", winner, cs, std::move(trace));
}

inline ElectionResult run_irv(const BallotProfile& profile, const CandidateSet& cs) {
    const std::size_t k_count = profile.candidates();
    std::vector<char> remaining(k_count, 1);
    std::size_t alive = k_count;
    nlohmann::json rounds = nlohmann::json::array();

    while (alive > 1) {
        std::vector<int> votes(k_count, 0);
        for (const std::vector<int>& ranks : profile.rankings) {
            int best = -1;
            for (std::size_t k = 0; k < k_count; ++k)
                if (remaining[k] && (best < 0 || ranks[k] < ranks[best])) best = static_cast<int>(k);
            ++votes[best];
        }
        // Eliminate the weakest remaining candidate, lowest index on ties.
        int loser = -1;
        for (std::size_t k = 0; k < k_count; ++k) {
            if (!remaining[k]) continue;
            if (loser < 0 || votes[k] < votes[loser]) loser = static_cast<int>(k);
        }
        rounds.push_back({{"votes", votes}, {"eliminated", loser}});
        remaining[loser] = 0;
        --alive;
    }

    int winner = 0;
    for (std::size_t k = 0; k < k_count; ++k)
        if (remaining[k]) winner = static_cast<int>(k);
    return make_wta_result("IRV", winner, cs, {{"rounds", std::move(rounds)}});
}

inline ElectionResult run_borda(const BallotProfile& profile, const CandidateSet& cs) {
    const int k_count = static_cast<int>(profile.candidates());
    std::vector<long long> points(k_count, 0);
    for (const std::vector<int>& ranks : profile.rankings)
        for (int k = 0; k < k_count; ++k) points[k] += k_count - ranks[k];
    int winner = detail::argmax_lowest(points);
    return make_wta_result("Borda", winner, cs, {{"points", points}});
}

inline ElectionResult run_approval(const BallotProfile& profile, const CandidateSet& cs) {
    std::vector<int> approvals(profile.candidates(), 0);
    for (const std::vector<char>& row : profile.approvals)
        for (std::size_t k = 0; k < row.size(); ++k)
            if (row[k]) ++approvals[k];
    int winner = detail::argmax_lowest(approvals);
    return make_wta_result("Approval", winner, cs, {{"approvals", approvals}});
}

inline ElectionResult run_score(const BallotProfile& profile, const CandidateSet& cs) {
    const std::size_t n = profile.voters();
    std::vector<double> mean_score(profile.candidates(), 0.0);
    for (const std::vector<double>& row : profile.scores)
        for (std::size_t k = 0; k < row.size(); ++k) mean_score[k] += row[k];
    for (double& s : mean_score) s /= static_cast<double>(n);
    int winner = detail::argmax_lowest(mean_score);
    return make_wta_result("Score", winner, cs, {{"mean_scores", mean_score}});
}

// wins(k, k') = number of voters ranking k above k'.
struct PairwiseMatrix {
    std::vector<std::vector<int>> wins;
};

inline PairwiseMatrix compute_pairwise(const BallotProfile& profile) {
    const std::size_t k_count = profile.candidates();
    PairwiseMatrix pm;
    pm.wins.assign(k_count, std::vector<int>(k_count, 0));
    for (const std::vector<int>& ranks : profile.rankings)
        for (std::size_t a = 0; a < k_count; ++a)
            for (std::size_t b = a + 1; b < k_count; ++b) {
                if (ranks[a] < ranks[b])
                    ++pm.wins[a][b];
                else
                    ++pm.wins[b][a];
            }
    return pm;
}

// Strongest-beatpath strengths p(k, k').  Edges exist only where a direct
// majority win does (2*wins > n); path strength is the weakest edge, and
// the Floyd-Warshall style sweep maximises it.
struct BeatpathMatrix {
    std::vector<std::vector<int>> strengths;
};

inline BeatpathMatrix widest_paths(const PairwiseMatrix& pm, int n_voters) {
    const std::size_t k_count = pm.wins.size();
    BeatpathMatrix bp;
    bp.strengths.assign(k_count, std::vector<int>(k_count, 0));
    for (std::size_t i = 0; i < k_count; ++i)
        for (std::size_t j = 0; j < k_count; ++j)
            if (i != j && 2 * pm.wins[i][j] > n_voters) bp.strengths[i][j] = pm.wins[i][j];
    for (std::size_t k = 0; k < k_count; ++k)
        for (std::size_t i = 0; i < k_count; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0; j < k_count; ++j) {
                if (j == i || j == k) continue;
                int through = std::min(bp.strengths[i][k], bp.strengths[k][j]);
                if (through > bp.strengths[i][j]) bp.strengths[i][j] = through;
            }
        }
    return bp;
}

inline ElectionResult run_schulze(const BallotProfile& profile, const CandidateSet& cs) {
    const std::size_t k_count = profile.candidates();
    const int n = static_cast<int>(profile.voters());
    PairwiseMatrix pm = compute_pairwise(profile);

    nlohmann::json trace{{"wins", pm.wins}};

    // Stage 1: a candidate beating everyone head-to-head wins immediately.
    for (std::size_t k = 0; k < k_count; ++k) {
        bool dominates = true;
        for (std::size_t j = 0; j < k_count && dominates; ++j)
            if (j != k && 2 * pm.wins[k][j] <= n) dominates = false;
        if (dominates) {
            trace["stage"] = 1;
            return make_wta_result("Schulze", static_cast<int>(k), cs, std::move(trace));
        }
    }

    // Stage 2: widest beatpaths.
    BeatpathMatrix bp = widest_paths(pm, n);
    int winner = 0;
    for (std::size_t k = 0; k < k_count; ++k) {
        bool unbeaten = true;
        for (std::size_t j = 0; j < k_count && unbeaten; ++j)
            if (j != k && bp.strengths[k][j] < bp.strengths[j][k]) unbeaten = false;
        if (unbeaten) {
            winner = static_cast<int>(k);
            break;
        }
    }
    trace["stage"] = 2;
    trace["strengths"] = bp.strengths;
    return make_wta_result("Schulze", winner, cs, std::move(trace));
}

struct SeatAllocation {
    std::vector<int> seats;
    int total_seats = 0;
};

// Highest-averages apportionment: S sequential awards, each to the largest
// current quotient v_k / (s_k + 1), lowest index on ties.
inline SeatAllocation allocate_dhondt(const std::vector<double>& vote_shares, int total_seats) {
    if (vote_shares.empty()) throw std::invalid_argument("allocate_dhondt: empty share vector");
    if (total_seats < 1) throw std::invalid_argument("allocate_dhondt: seats must be >= 1");
    for (double v : vote_shares)
        if (v < 0.0) throw std::invalid_argument("allocate_dhondt: negative vote share");

    SeatAllocation alloc;
    alloc.total_seats = total_seats;
    alloc.seats.assign(vote_shares.size(), 0);
    for (int s = 0; s < total_seats; ++s) {
        int best = 0;
        double best_q = -1.0;
        for (std::size_t k = 0; k < vote_shares.size(); ++k) {
            double q = vote_shares[k] / static_cast<double>(alloc.seats[k] + 1);
            if (q > best_q) {
                best_q = q;
                best = static_cast<int>(k);
            }
        }
        ++alloc.seats[best];
    }
    return alloc;
}

// Party-list PR: every candidate is a single-member party whose vote share
// is its plurality share.  Outcome is the median legislator; the seat-share
// centroid is carried as the supplementary position.
inline ElectionResult run_party_list_pr(const BallotProfile& profile, const CandidateSet& cs,
                                        int total_seats = 100) {
    std::vector<int> votes = detail::plurality_counts(profile);
    const double n = static_cast<double>(profile.voters());
    std::vector<double> shares(votes.size());
    for (std::size_t k = 0; k < votes.size(); ++k) shares[k] = votes[k] / n;

    SeatAllocation alloc = allocate_dhondt(shares, total_seats);

    ElectionResult r;
    r.system_name = "Party-List PR (D'Hondt)";
    r.is_pr = true;
    r.seat_shares.resize(alloc.seats.size());
    for (std::size_t k = 0; k < alloc.seats.size(); ++k) {
        r.seat_shares[k] = static_cast<double>(alloc.seats[k]) / total_seats;
        if (alloc.seats[k] > 0) r.winner_indices.push_back(static_cast<int>(k));
    }
    r.outcome_position = median_legislator(r.seat_shares, cs);
    r.centroid_position = seat_share_centroid(r.seat_shares, cs);
    r.trace = {{"vote_shares", shares}, {"seats", alloc.seats}};
    return r;
}

// Mixed-member proportional.  Voters sorted by the economic axis are split
// into floor(S/2) equal contiguous districts, each electing its plurality
// winner.  List seats top parties up to their proportional target
// floor(v_k * S) (computed in exact integer arithmetic as votes_k * S / n);
// leftover list seats follow the largest remainder.  Parties keep district
// seats beyond their target (overhang), so the realised chamber can exceed
// S; seat shares are normalised by the realised size.
inline ElectionResult run_mmp(const BallotProfile& profile, const CandidateSet& cs,
                              const Electorate& electorate, int total_seats = 100) {
    if (total_seats < 2) throw std::invalid_argument("run_mmp: need at least 2 seats");
    const std::size_t n = profile.voters();
    const std::size_t k_count = profile.candidates();
    const int districts = total_seats / 2;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&electorate](int a, int b) {
        double xa = electorate.voters[a].x1, xb = electorate.voters[b].x1;
        if (xa != xb) return xa < xb;
        return a < b;
    });

    // Contiguous blocks; the first (n mod D) districts take one extra voter.
    std::vector<int> district_seats(k_count, 0);
    nlohmann::json district_winners = nlohmann::json::array();
    std::size_t base = n / districts, extra = n % districts, cursor = 0;
    for (int d = 0; d < districts; ++d) {
        std::size_t block = base + (static_cast<std::size_t>(d) < extra ? 1 : 0);
        if (block == 0) continue;  // more districts than voters
        std::vector<int> votes(k_count, 0);
        for (std::size_t i = 0; i < block; ++i)
            ++votes[profile.plurality_choice[order[cursor + i]]];
        cursor += block;
        int winner = detail::argmax_lowest(votes);
        ++district_seats[winner];
        district_winners.push_back(winner);
    }

    // Proportional targets in exact integers: floor and remainder of
    // votes_k * S / n.
    std::vector<int> votes = detail::plurality_counts(profile);
    std::vector<long long> target(k_count), remainder(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        long long scaled = static_cast<long long>(votes[k]) * total_seats;
        target[k] = scaled / static_cast<long long>(n);
        remainder[k] = scaled % static_cast<long long>(n);
    }

    std::vector<int> list_seats(k_count, 0);
    long long realised = 0;
    for (std::size_t k = 0; k < k_count; ++k) {
        list_seats[k] = std::max(0LL, target[k] - district_seats[k]);
        realised += district_seats[k] + list_seats[k];
    }

    // Largest-remainder distribution of any seats still short of S.
    if (realised < total_seats) {
        std::vector<int> by_remainder(k_count);
        std::iota(by_remainder.begin(), by_remainder.end(), 0);
        std::sort(by_remainder.begin(), by_remainder.end(), [&remainder](int a, int b) {
            if (remainder[a] != remainder[b]) return remainder[a] > remainder[b];
            return a < b;
        });
        for (std::size_t idx = 0; realised < total_seats; ++realised, ++idx)
            ++list_seats[by_remainder[idx % k_count]];
    }

    ElectionResult r;
    r.system_name = "MMP";
    r.is_pr = true;
    r.seat_shares.resize(k_count);
    for (std::size_t k = 0; k < k_count; ++k) {
        int total_k = district_seats[k] + list_seats[k];
        r.seat_shares[k] = static_cast<double>(total_k) / static_cast<double>(realised);
        if (total_k > 0) r.winner_indices.push_back(static_cast<int>(k));
    }
    r.outcome_position = median_legislator(r.seat_shares, cs);
    r.centroid_position = seat_share_centroid(r.seat_shares, cs);
    r.trace = {{"district_winners", std::move(district_winners)},
               {"district_seats", district_seats},
               {"list_seats", list_seats},
               {"realised_total", realised}};
    return r;
}

}  // namespace electoral
