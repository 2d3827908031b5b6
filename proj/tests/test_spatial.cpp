#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "electoral/rng.hpp"
#include "electoral/spatial.hpp"

using namespace electoral;
using Catch::Matchers::WithinAbs;

namespace {

std::vector<Point2> random_points(Rng& rng, int n) {
    std::vector<Point2> pts;
    pts.reserve(n);
    for (int i = 0; i < n; ++i) pts.push_back({rng.uniform(), rng.uniform()});
    return pts;
}

double grid_min_objective(const std::vector<Point2>& pts) {
    double best = 1e300;
    for (int gx = 0; gx <= 200; ++gx)
        for (int gy = 0; gy <= 200; ++gy)
            best = std::min(best, detail::total_distance(pts, {gx / 200.0, gy / 200.0}));
    return best;
}

}  // namespace

TEST_CASE("euclidean distance basics", "[spatial]") {
    CHECK(euclidean_distance({0.0, 0.0}, {0.0, 0.0}) == 0.0);
    CHECK_THAT(euclidean_distance({0.0, 0.0}, {0.6, 0.8}), WithinAbs(1.0, 1e-15));
    // Cluster-mean separation in the bimodal benchmark electorate.
    CHECK_THAT(euclidean_distance({0.25, 0.38}, {0.72, 0.58}),
               WithinAbs(0.51078371156488533, 1e-15));
    CHECK(euclidean_distance({0.1, 0.9}, {0.9, 0.1}) ==
          euclidean_distance({0.9, 0.1}, {0.1, 0.9}));
}

TEST_CASE("arithmetic mean", "[spatial]") {
    CHECK_THROWS_AS(arithmetic_mean({}), std::invalid_argument);
    Point2 m = arithmetic_mean({{0.0, 0.0}, {1.0, 0.0}, {0.5, 0.9}});
    CHECK_THAT(m.x1, WithinAbs(0.5, 1e-15));
    CHECK_THAT(m.x2, WithinAbs(0.3, 1e-15));
}

TEST_CASE("geometric median degenerate inputs", "[spatial]") {
    CHECK_THROWS_AS(geometric_median({}), std::invalid_argument);
    CHECK_THROWS_AS(geometric_median({{0.5, 0.5}}, {.tolerance = 0.0}), std::invalid_argument);

    GeometricMedianResult single = geometric_median({{0.3, 0.7}});
    CHECK(single.position.x1 == 0.3);
    CHECK(single.position.x2 == 0.7);
    CHECK(single.converged);

    // All points identical: the mean coincides with every point.
    GeometricMedianResult same = geometric_median({{0.4, 0.4}, {0.4, 0.4}, {0.4, 0.4}});
    CHECK_THAT(euclidean_distance(same.position, {0.4, 0.4}), WithinAbs(0.0, 1e-12));
    CHECK(same.converged);
}

TEST_CASE("geometric median closed-form cases", "[spatial]") {
    // Two points: any point on the segment is optimal; the mean qualifies.
    GeometricMedianResult two = geometric_median({{0.2, 0.2}, {0.8, 0.8}});
    CHECK_THAT(detail::total_distance({{0.2, 0.2}, {0.8, 0.8}}, two.position),
               WithinAbs(euclidean_distance({0.2, 0.2}, {0.8, 0.8}), 1e-9));

    // Collinear points: the middle one.
    GeometricMedianResult mid = geometric_median({{0.0, 0.0}, {0.5, 0.0}, {1.0, 0.0}});
    CHECK_THAT(mid.position.x1, WithinAbs(0.5, 1e-6));
    CHECK_THAT(mid.position.x2, WithinAbs(0.0, 1e-6));

    // Equilateral triangle: the Fermat point is the centroid.
    double h = std::sqrt(3.0) / 2.0;
    GeometricMedianResult tri = geometric_median({{0.0, 0.0}, {1.0, 0.0}, {0.5, h}});
    CHECK_THAT(tri.position.x1, WithinAbs(0.5, 1e-6));
    CHECK_THAT(tri.position.x2, WithinAbs(0.28867513459481287, 1e-6));

    // Square corners: the centre by symmetry.
    GeometricMedianResult sq =
        geometric_median({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    CHECK_THAT(sq.position.x1, WithinAbs(0.5, 1e-9));
    CHECK_THAT(sq.position.x2, WithinAbs(0.5, 1e-9));
}

TEST_CASE("geometric median at a vertex with obtuse angle", "[spatial]") {
    // The angle at (0.1, 0.1) exceeds 120 degrees, so that vertex is the
    // median; the Vardi-Zhang correction must stop there instead of dividing
    // by the zero distance.
    std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}, {0.1, 0.1}};
    GeometricMedianResult r = geometric_median(pts);
    CHECK(r.converged);
    CHECK_THAT(euclidean_distance(r.position, {0.1, 0.1}), WithinAbs(0.0, 1e-6));
}

TEST_CASE("geometric median when the mean hits a data point", "[spatial]") {
    // Mean of the set is (1, 0), itself a repeated data point: the first
    // iterate must apply the multiplicity correction, not blow up.
    std::vector<Point2> pts{{0.0, 0.0}, {1.0, 0.0}, {2.0, 0.0}, {1.0, 0.0}};
    GeometricMedianResult r = geometric_median(pts);
    CHECK(r.converged);
    CHECK_THAT(euclidean_distance(r.position, {1.0, 0.0}), WithinAbs(0.0, 1e-9));
}

TEST_CASE("geometric median beats a fine grid search", "[spatial][property]") {
    Rng rng(20240801);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 3 + static_cast<int>(rng.uniform() * 47);
        std::vector<Point2> pts = random_points(rng, n);
        GeometricMedianResult r = geometric_median(pts);
        REQUIRE(r.converged);
        double ours = detail::total_distance(pts, r.position);
        CHECK(ours <= grid_min_objective(pts) + 1e-3);
        CHECK(ours <= detail::total_distance(pts, arithmetic_mean(pts)) + 1e-12);
    }
}

TEST_CASE("geometric median is translation equivariant", "[spatial][property]") {
    Rng rng(7);
    std::vector<Point2> pts = random_points(rng, 40);
    Point2 shift{0.173, -0.245};
    std::vector<Point2> moved;
    for (Point2 p : pts) moved.push_back(p + shift);
    Point2 a = geometric_median(pts).position + shift;
    Point2 b = geometric_median(moved).position;
    CHECK_THAT(euclidean_distance(a, b), WithinAbs(0.0, 1e-8));
}

TEST_CASE("geometric median reports non-convergence", "[spatial]") {
    Rng rng(99);
    std::vector<Point2> pts = random_points(rng, 30);
    GeometricMedianResult r = geometric_median(pts, {.tolerance = 1e-13, .max_iterations = 1});
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 1);
}

TEST_CASE("distribution diagnostics", "[spatial]") {
    DistributionDiagnostics sym =
        diagnostics({{0.0, 0.0}, {1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}});
    CHECK_THAT(sym.median_mean_gap, WithinAbs(0.0, 1e-9));
    CHECK(sym.median_converged);

    // Skewed set: gap must equal the distance between the two summaries.
    std::vector<Point2> skew{{0.1, 0.1}, {0.12, 0.1}, {0.1, 0.12}, {0.11, 0.11}, {0.9, 0.9}};
    DistributionDiagnostics d = diagnostics(skew);
    CHECK_THAT(d.median_mean_gap,
               WithinAbs(euclidean_distance(d.geometric_median, d.arithmetic_mean), 1e-15));
    CHECK(d.median_mean_gap > 0.1);  // the outlier drags the mean, not the median
}
