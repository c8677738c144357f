#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "d3g3/degree_set.hpp"

namespace d3g3 {

// Parameters of the equal-segments regime S_S = S_C = [m, M].
struct SegmentParams {
    std::uint64_t m = 0;
    std::uint64_t M = 0;
    double d = 0.1;
    double p = 0.0;  // pi d^2

    static SegmentParams make(std::uint64_t m, std::uint64_t M, double d);
};

// Probability that a node of an n-vertex random geometric graph has degree in
// [m, M]: the binomial tail sum over k in [m, min(M, n-1)].
double survival_probability(const SegmentParams& params, std::uint64_t n);

// Expected next order f(n) = 2 n * survival_probability(n), with f(0) = 0.
double relationship(const SegmentParams& params, std::uint64_t n);

// Closed form for f(n+1) - f(n); agrees with the direct difference.
double relationship_delta(const SegmentParams& params, std::uint64_t n);

struct MonotonicBounds {
    double x_m;  // (m+1)/p - 1: f increasing below this
    double x_M;  // (M+1)/p - 1: f decreasing above this
};

MonotonicBounds monotonic_bounds(const SegmentParams& params);

// Integer argmax of f, scanned over the monotonicity bracket; ties break
// toward the smaller n.
std::uint64_t argmax_relationship(const SegmentParams& params);

// All crossing integers of f against the identity in [0, search_cap], per the
// two-clause crossing definition. First element is always 0.
std::vector<std::uint64_t> fixed_points(const SegmentParams& params, std::uint64_t search_cap);

std::uint64_t default_search_cap(const SegmentParams& params);

// Smallest N >= x_M such that f(n) < 1 for all n > N.
std::uint64_t collapse_bound(const SegmentParams& params);

struct SustainableInterval {
    std::uint64_t lo = 0;        // N_m, first positive fixed point
    std::uint64_t hi = 0;        // N'_m, last integer with f >= N_m on the way down
    bool interval_stable = false;  // max f <= N'_m, so f maps the interval into itself
};

// Present only in the three-fixed-point regime.
std::optional<SustainableInterval> sustainable_interval(const SegmentParams& params);

struct IsolatedLimit {
    double l;                  // expected conserved-node count
    double equilibrium_order;  // 2 l
};

// Closed-form equilibrium for S = {0}.
IsolatedLimit isolated_limit(double d);

// 8 / (pi d^2): order bound for S = {0} trajectories at t > 0.
double isolated_order_bound(double d);

// P(n_{t+1} > n_t) for duplication set D = S_S intersect S_C; requires D
// finite (throws otherwise), returns 0 for D empty.
double growth_probability(const DegreeSet& ss, const DegreeSet& sc, double d, std::uint64_t n);

enum class FixedPointRegime { one_fp, two_fp, three_fp };
std::string to_string(FixedPointRegime r);

struct RelationshipProfile {
    SegmentParams params;
    std::uint64_t n_star = 0;
    double f_max = 0.0;
    std::vector<std::uint64_t> fixed_points;
    std::optional<SustainableInterval> interval;
    FixedPointRegime regime = FixedPointRegime::one_fp;
    std::uint64_t collapse_bound = 0;
    std::uint64_t search_cap = 0;
};

// Full analysis for one parameter triple. Throws if more than three crossings
// are found (the three-fixed-point statement is a conjecture, not an
// assumption baked into the scan).
RelationshipProfile analyze_relationship(const SegmentParams& params,
                                         std::optional<std::uint64_t> search_cap = std::nullopt);

}  // namespace d3g3
