#pragma once

#include <cmath>

namespace electoral {

// Position in the 2-D ideological space: x1 = economic axis, x2 = social
// axis.  Voters and candidates live in [0,1]^2; computed centroids and
// medians are not clamped (they stay inside the convex hull anyway).
struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
inline Point2 operator*(double s, Point2 p) { return {s * p.x1, s * p.x2}; }
inline Point2 operator*(Point2 p, double s) { return {s * p.x1, s * p.x2}; }
inline Point2 operator/(Point2 p, double s) { return {p.x1 / s, p.x2 / s}; }
inline Point2& operator+=(Point2& a, Point2 b) {
    a.x1 += b.x1;
    a.x2 += b.x2;
    return a;
}

inline double norm(Point2 p) { return std::hypot(p.x1, p.x2); }

inline double euclidean_distance(Point2 a, Point2 b) { return norm(a - b); }

inline bool in_unit_square(Point2 p) {
    return p.x1 >= 0.0 && p.x1 <= 1.0 && p.x2 >= 0.0 && p.x2 <= 1.0;
}

}  // namespace electoral
