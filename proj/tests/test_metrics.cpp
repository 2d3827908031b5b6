#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "electoral/metrics.hpp"
#include "electoral/rng.hpp"
#include "electoral/spatial.hpp"

using namespace electoral;
using Catch::Matchers::WithinAbs;

namespace {

// O(n^2) mean-absolute-difference definition, the oracle for the sorted
// identity used in production.
double gini_pairwise(const std::vector<double>& xs) {
    double sum = 0.0, diff = 0.0;
    for (double x : xs) sum += x;
    if (sum == 0.0) return 0.0;
    for (double a : xs)
        for (double b : xs) diff += std::abs(a - b);
    double n = static_cast<double>(xs.size());
    return diff / (2.0 * n * sum);
}

}  // namespace

TEST_CASE("gini closed-form cases", "[metrics]") {
    CHECK_THAT(gini({1.0, 1.0, 1.0, 1.0}), WithinAbs(0.0, 1e-15));
    CHECK_THAT(gini({0.0, 1.0}), WithinAbs(0.5, 1e-15));
    CHECK_THAT(gini({0.0, 0.0, 0.0, 1.0}), WithinAbs(0.75, 1e-15));
    CHECK_THAT(gini({0.0, 0.0, 0.0}), WithinAbs(0.0, 1e-15));  // all-zero counts as equal
    CHECK_THAT(gini({5.0}), WithinAbs(0.0, 1e-15));
}

TEST_CASE("gini validation", "[metrics]") {
    CHECK_THROWS_AS(gini({}), std::invalid_argument);
    CHECK_THROWS_AS(gini({0.5, -0.1}), std::invalid_argument);
}

TEST_CASE("gini matches the pairwise definition and is scale invariant",
          "[metrics][property]") {
    Rng rng(987);
    for (int rep = 0; rep < 50; ++rep) {
        int n = 1 + static_cast<int>(rng.uniform() * 60);
        std::vector<double> xs(n);
        for (double& x : xs) x = rng.uniform() * 3.0;
        double g = gini(xs);
        REQUIRE_THAT(g, WithinAbs(gini_pairwise(xs), 1e-9));
        REQUIRE(g >= 0.0);
        REQUIRE(g <= 1.0);
        std::vector<double> doubled;
        for (double x : xs) doubled.push_back(2.0 * x);
        REQUIRE_THAT(gini(doubled), WithinAbs(g, 1e-12));
    }
}

namespace {

CandidateSet three_parties() {
    return {{"L", "C", "R"}, {{0.2, 0.5}, {0.5, 0.5}, {0.8, 0.5}}};
}

}  // namespace

TEST_CASE("median legislator", "[metrics]") {
    CandidateSet cs = three_parties();

    // One party holds everything.
    CHECK(median_legislator({0.0, 1.0, 0.0}, cs).x1 == 0.5);

    // 0.4 / 0.2 / 0.4: the cumulative share crosses 0.5 at the centre.
    CHECK(median_legislator({0.4, 0.2, 0.4}, cs).x1 == 0.5);

    // Exact 0.5 boundary resolves to the lower-x1 party.
    CandidateSet two{{"A", "B"}, {{0.3, 0.5}, {0.7, 0.5}}};
    CHECK(median_legislator({0.5, 0.5}, two).x1 == 0.3);

    // Sorting is by position, not index: swap the candidate order.
    CandidateSet swapped{{"R", "L"}, {{0.8, 0.5}, {0.2, 0.5}}};
    CHECK(median_legislator({0.3, 0.7}, swapped).x1 == 0.2);

    CHECK_THROWS_AS(median_legislator({0.5, 0.5}, cs), std::invalid_argument);
    CHECK_THROWS_AS(median_legislator({0.0, 0.0, 0.0}, cs), std::invalid_argument);
    CHECK_THROWS_AS(median_legislator({-0.1, 0.6, 0.5}, cs), std::invalid_argument);
}

namespace {

Electorate fixed_voters(std::vector<Point2> vs) {
    Electorate e;
    e.voters = std::move(vs);
    return e;
}

ElectionResult wta_at(int winner, const CandidateSet& cs) {
    return make_wta_result("test", winner, cs);
}

}  // namespace

TEST_CASE("evaluate: winner-take-all outcome", "[metrics]") {
    CandidateSet cs = three_parties();
    Electorate e = fixed_voters({{0.2, 0.5}, {0.3, 0.5}, {0.4, 0.5}, {0.9, 0.5}});
    Point2 median = geometric_median(e.voters).position;

    ElectionMetrics m = evaluate(wta_at(0, cs), e, cs, median);
    CHECK_THAT(m.distance_to_median, WithinAbs(euclidean_distance({0.2, 0.5}, median), 1e-12));

    // Voters at 0.2, 0.3 are strictly nearer L than C and R; 0.4 is nearer
    // C (0.1 vs 0.2), 0.9 nearer R.
    CHECK_THAT(m.majority_satisfaction, WithinAbs(0.5, 1e-12));

    // Mean/worst distances to the outcome at (0.2, 0.5).
    CHECK_THAT(m.mean_voter_distance, WithinAbs((0.0 + 0.1 + 0.2 + 0.7) / 4.0, 1e-12));
    CHECK_THAT(m.worst_voter_distance, WithinAbs(0.7, 1e-12));

    // WTA rows carry no legislature metrics.
    CHECK_FALSE(m.centroid_delta.has_value());
    CHECK_FALSE(m.median_legislator_delta.has_value());
    CHECK_FALSE(m.artefact_gap.has_value());
}

TEST_CASE("evaluate: candidate at the outcome is not its own rival", "[metrics]") {
    // Both voters sit exactly on the winner; distance ties against other
    // candidates do not happen, so satisfaction is 1.
    CandidateSet cs{{"A", "B"}, {{0.25, 0.5}, {0.75, 0.5}}};
    Electorate e = fixed_voters({{0.25, 0.5}, {0.25, 0.5}});
    ElectionMetrics m = evaluate(wta_at(0, cs), e, cs, {0.25, 0.5});
    CHECK_THAT(m.majority_satisfaction, WithinAbs(1.0, 1e-15));
    CHECK_THAT(m.distance_to_median, WithinAbs(0.0, 1e-15));
    CHECK_THAT(m.mean_voter_distance, WithinAbs(0.0, 1e-15));
    CHECK_THAT(m.distance_gini, WithinAbs(0.0, 1e-15));
}

TEST_CASE("evaluate: equidistant voter counts as unsatisfied", "[metrics]") {
    CandidateSet cs{{"A", "B"}, {{0.3, 0.5}, {0.7, 0.5}}};
    Electorate e = fixed_voters({{0.5, 0.5}});
    ElectionMetrics m = evaluate(wta_at(0, cs), e, cs, {0.5, 0.5});
    CHECK_THAT(m.majority_satisfaction, WithinAbs(0.0, 1e-15));
}

TEST_CASE("evaluate: proportional outcome carries the legislature metrics", "[metrics]") {
    CandidateSet cs = three_parties();
    Electorate e = fixed_voters({{0.35, 0.5}, {0.5, 0.5}, {0.6, 0.5}});
    Point2 median = geometric_median(e.voters).position;

    ElectionResult r;
    r.system_name = "pr";
    r.is_pr = true;
    r.seat_shares = {0.4, 0.2, 0.4};
    r.outcome_position = median_legislator(r.seat_shares, cs);
    r.centroid_position = seat_share_centroid(r.seat_shares, cs);

    ElectionMetrics m = evaluate(r, e, cs, median);
    REQUIRE(m.centroid_delta.has_value());
    REQUIRE(m.median_legislator_delta.has_value());
    REQUIRE(m.artefact_gap.has_value());
    CHECK_THAT(*m.median_legislator_delta,
               WithinAbs(euclidean_distance({0.5, 0.5}, median), 1e-12));
    CHECK_THAT(*m.centroid_delta, WithinAbs(euclidean_distance({0.5, 0.5}, median), 1e-12));
    CHECK_THAT(*m.artefact_gap, WithinAbs(*m.median_legislator_delta - *m.centroid_delta,
                                          1e-15));
    // Outcome is the median legislator, so the headline delta matches it.
    CHECK_THAT(m.distance_to_median, WithinAbs(*m.median_legislator_delta, 1e-15));
}

TEST_CASE("evaluate: lopsided chamber opens an artefact gap", "[metrics]") {
    // Seat shares 0.6 / 0.4 across a wide ideological gulf: the median
    // legislator sits with the majority party while the centroid blends.
    CandidateSet cs{{"A", "B"}, {{0.2, 0.5}, {0.8, 0.5}}};
    Electorate e = fixed_voters({{0.44, 0.5}});  // median is the lone voter

    ElectionResult r;
    r.is_pr = true;
    r.seat_shares = {0.6, 0.4};
    r.outcome_position = median_legislator(r.seat_shares, cs);
    r.centroid_position = seat_share_centroid(r.seat_shares, cs);

    ElectionMetrics m = evaluate(r, e, cs, {0.44, 0.5});
    CHECK_THAT(*m.median_legislator_delta, WithinAbs(0.24, 1e-12));  // |0.2 - 0.44|
    CHECK_THAT(*m.centroid_delta, WithinAbs(0.0, 1e-12));            // 0.6*0.2 + 0.4*0.8
    CHECK_THAT(*m.artefact_gap, WithinAbs(0.24, 1e-12));
}
