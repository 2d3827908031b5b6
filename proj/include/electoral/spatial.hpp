#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "point.hpp"

namespace electoral {

struct WeiszfeldOptions {
    double tolerance = 1e-9;  // stop once the iterate moves less than this
    int max_iterations = 10000;
};

struct GeometricMedianResult {
    Point2 position;
    int iterations = 0;
    bool converged = true;
};

namespace detail {

inline double total_distance(const std::vector<Point2>& points, Point2 y) {
    double s = 0.0;
    for (Point2 p : points) s += euclidean_distance(p, y);
    return s;
}

}  // namespace detail

inline Point2 arithmetic_mean(const std::vector<Point2>& points) {
    if (points.empty()) throw std::invalid_argument("arithmetic_mean: empty point set");
    Point2 m{};
    for (Point2 p : points) m += p;
    return m / static_cast<double>(points.size());
}

// Weiszfeld iteration for the point minimising total Euclidean distance.
// Starts from the arithmetic mean.  Iterates that land on a data point use
// the Vardi-Zhang correction: with R = W*(T - y) the pull of the non-
// coincident points and eta the multiplicity at y, y is optimal when
// |R| <= eta, otherwise the step is damped by eta/|R|.  See Vardi & Zhang,
// PNAS 97(4), 2000.  The objective is non-increasing; debug builds check.
inline GeometricMedianResult geometric_median(const std::vector<Point2>& points,
                                              WeiszfeldOptions opts = {}) {
    if (points.empty()) throw std::invalid_argument("geometric_median: empty point set");
    if (!(opts.tolerance > 0.0))
        throw std::invalid_argument("geometric_median: tolerance must be positive");
    if (points.size() == 1) return {points.front(), 0, true};

    constexpr double kCoincident = 1e-12;
    Point2 y = arithmetic_mean(points);
#ifndef NDEBUG
    double prev_objective = detail::total_distance(points, y);
#endif
    for (int it = 1; it <= opts.max_iterations; ++it) {
        double weight_sum = 0.0;
        double eta = 0.0;  // multiplicity of data points sitting on y
        Point2 t{};
        for (Point2 p : points) {
            double d = euclidean_distance(p, y);
            if (d <= kCoincident) {
                eta += 1.0;
                continue;
            }
            double w = 1.0 / d;
            weight_sum += w;
            t += w * p;
        }
        if (weight_sum == 0.0) return {y, it, true};  // all points coincide with y
        t = t / weight_sum;

        Point2 next;
        if (eta > 0.0) {
            Point2 r = weight_sum * (t - y);
            double rn = norm(r);
            if (rn <= eta) return {y, it, true};  // optimality condition at a data point
            double lambda = eta / rn;
            next = (1.0 - lambda) * t + lambda * y;
        } else {
            next = t;
        }

#ifndef NDEBUG
        double objective = detail::total_distance(points, next);
        assert(objective <= prev_objective + 1e-9 && "Weiszfeld objective increased");
        prev_objective = objective;
#endif
        double step = euclidean_distance(next, y);
        y = next;
        if (step < opts.tolerance) return {y, it, true};
    }
    return {y, opts.max_iterations, false};
}

struct DistributionDiagnostics {
    Point2 geometric_median;
    Point2 arithmetic_mean;
    double median_mean_gap = 0.0;
    bool median_converged = true;
};

inline DistributionDiagnostics diagnostics(const std::vector<Point2>& points,
                                           WeiszfeldOptions opts = {}) {
    Point2 mean = arithmetic_mean(points);
    GeometricMedianResult gm = geometric_median(points, opts);
    return {gm.position, mean, euclidean_distance(gm.position, mean), gm.converged};
}

}  // namespace electoral
