#pragma once

#include <cmath>
#include <stdexcept>

#include "d3g3/rng.hpp"

namespace d3g3 {

// Position on the 2D unit torus. Coordinates are wrapped into [0,1) at
// construction so the invariant never leaks.
struct TorusPoint {
    double x = 0.0;
    double y = 0.0;

    TorusPoint() = default;
    TorusPoint(double px, double py) : x(wrap(px)), y(wrap(py)) {}

    static TorusPoint random(Rng& rng) {
        const double px = rng.next_unit();
        const double py = rng.next_unit();
        return TorusPoint(px, py);
    }

    static double wrap(double c) {
        double f = c - std::floor(c);
        if (f >= 1.0) f = 0.0;  // guard against floating rounding at 1.0
        return f;
    }

    friend bool operator==(const TorusPoint& a, const TorusPoint& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double axis_delta(double a, double b) {
    const double diff = std::fabs(a - b);
    return std::min(diff, 1.0 - diff);
}

// Squared distance, for threshold comparisons without the sqrt.
inline double toroidal_distance_sq(const TorusPoint& a, const TorusPoint& b) {
    const double dx = axis_delta(a.x, b.x);
    const double dy = axis_delta(a.y, b.y);
    return dx * dx + dy * dy;
}

// Euclidean distance with per-axis wrap-around; at most sqrt(2)/2.
inline double toroidal_distance(const TorusPoint& a, const TorusPoint& b) {
    return std::sqrt(toroidal_distance_sq(a, b));
}

// Probability that two independent uniform points lie within distance d.
// The disk-area formula only holds while the disk fits the torus, hence the
// d <= 1/2 requirement.
inline double connection_probability(double d) {
    if (!(d > 0.0) || d > 0.5)
        throw std::invalid_argument("connection_probability: requires 0 < d <= 1/2");
    return M_PI * d * d;
}

inline constexpr double kMaxThreshold = 0.70710678118654752440;  // sqrt(2)/2

}  // namespace d3g3
