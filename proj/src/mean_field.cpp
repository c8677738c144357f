#include "d3g3/mean_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "d3g3/torus.hpp"

namespace d3g3 {

namespace {

// Sum of binomial pmf terms C(trials, k) p^k (1-p)^(trials-k) for
// k in [k_lo, k_hi]. The first term starts in log space; successive terms use
// the ratio recurrence, which stays finite for trials ~ 1e5 and beyond.
double binomial_range_sum(std::uint64_t trials, double p, std::uint64_t k_lo,
                          std::uint64_t k_hi) {
    k_hi = std::min(k_hi, trials);
    if (k_lo > k_hi) return 0.0;

    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double nt = static_cast<double>(trials);
    const double k0 = static_cast<double>(k_lo);
    double log_term = std::lgamma(nt + 1.0) - std::lgamma(k0 + 1.0) -
                      std::lgamma(nt - k0 + 1.0) + k0 * log_p + (nt - k0) * log_q;
    double term = std::exp(log_term);
    double sum = term;
    const double ratio_pq = p / (1.0 - p);
    for (std::uint64_t k = k_lo; k < k_hi; ++k) {
        term *= (nt - static_cast<double>(k)) / (static_cast<double>(k) + 1.0) * ratio_pq;
        sum += term;
    }
    return std::min(sum, 1.0);
}

}  // namespace

SegmentParams SegmentParams::make(std::uint64_t m, std::uint64_t M, double d) {
    if (m > M) throw std::invalid_argument("SegmentParams: requires m <= M");
    SegmentParams params;
    params.m = m;
    params.M = M;
    params.d = d;
    params.p = connection_probability(d);  // rejects d outside (0, 1/2]
    return params;
}

double survival_probability(const SegmentParams& params, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("survival_probability: requires n >= 1");
    return binomial_range_sum(n - 1, params.p, params.m, params.M);
}

double relationship(const SegmentParams& params, std::uint64_t n) {
    if (n == 0) return 0.0;
    return 2.0 * static_cast<double>(n) * survival_probability(params, n);
}

double relationship_delta(const SegmentParams& params, std::uint64_t n) {
    // 2 sum_{k=m}^{M} (k+1) C(n,k) p^k (1-p)^(n-1-k) (1 - (n+1)p/(k+1)),
    // with C(n,k) = 0 for k > n.
    const std::uint64_t k_hi = std::min(params.M, n);
    if (params.m > k_hi) return 0.0;

    const double p = params.p;
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    const double nd = static_cast<double>(n);
    const double k0 = static_cast<double>(params.m);
    double log_binom = std::lgamma(nd + 1.0) - std::lgamma(k0 + 1.0) -
                       std::lgamma(nd - k0 + 1.0);
    double base = std::exp(log_binom + k0 * log_p + (nd - 1.0 - k0) * log_q);
    double sum = 0.0;
    const double ratio_pq = p / (1.0 - p);
    for (std::uint64_t k = params.m;; ++k) {
        const double kd = static_cast<double>(k);
        sum += (kd + 1.0) * base * (1.0 - (nd + 1.0) * p / (kd + 1.0));
        if (k == k_hi) break;
        // C(n,k+1)/C(n,k) * p/(1-p), plus the extra (1-p)^{-1} step cancels in
        // the (n-1-k) exponent bookkeeping
        base *= (nd - kd) / (kd + 1.0) * ratio_pq;
    }
    return 2.0 * sum;
}

MonotonicBounds monotonic_bounds(const SegmentParams& params) {
    return {(static_cast<double>(params.m) + 1.0) / params.p - 1.0,
            (static_cast<double>(params.M) + 1.0) / params.p - 1.0};
}

std::uint64_t argmax_relationship(const SegmentParams& params) {
    const auto [x_m, x_M] = monotonic_bounds(params);
    const std::uint64_t lo = x_m <= 1.0
        ? 0
        : static_cast<std::uint64_t>(std::ceil(x_m)) - 1;
    const std::uint64_t hi = static_cast<std::uint64_t>(std::floor(x_M)) + 1;

    std::uint64_t best_n = lo;
    double best_f = relationship(params, lo);
    for (std::uint64_t n = lo + 1; n <= hi; ++n) {
        const double f = relationship(params, n);
        if (f > best_f) {
            best_f = f;
            best_n = n;
        }
    }
    return best_n;
}

namespace {

bool is_crossing(const SegmentParams& params, std::uint64_t n) {
    const double fn = relationship(params, n);
    const double fn1 = relationship(params, n + 1);
    const double nd = static_cast<double>(n);
    return (fn <= nd && fn1 > nd + 1.0) || (fn >= nd && fn1 < nd + 1.0);
}

}  // namespace

std::vector<std::uint64_t> fixed_points(const SegmentParams& params, std::uint64_t search_cap) {
    const auto [x_m, x_M] = monotonic_bounds(params);
    const std::uint64_t tail_start =
        std::min<std::uint64_t>(search_cap, static_cast<std::uint64_t>(std::ceil(x_M)) + 1);

    std::vector<std::uint64_t> points;
    for (std::uint64_t n = 0; n <= tail_start; ++n)
        if (is_crossing(params, n)) points.push_back(n);

    // Past x_M, f is decreasing, so g(n) = f(n) - n is strictly decreasing and
    // at most one crossing remains; binary search for the last n with f(n) >= n.
    if (tail_start < search_cap &&
        relationship(params, tail_start + 1) >= static_cast<double>(tail_start + 1)) {
        std::uint64_t lo = tail_start + 1;  // predicate true here
        std::uint64_t hi = search_cap;
        if (relationship(params, hi) >= static_cast<double>(hi)) {
            // crossing beyond the cap; clamp to the cap per contract
            if (is_crossing(params, hi)) points.push_back(hi);
        } else {
            while (lo + 1 < hi) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                if (relationship(params, mid) >= static_cast<double>(mid)) lo = mid;
                else hi = mid;
            }
            points.push_back(lo);
        }
    }
    return points;
}

std::uint64_t collapse_bound(const SegmentParams& params) {
    const auto [x_m, x_M] = monotonic_bounds(params);
    const std::uint64_t start = std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(x_M)));
    if (relationship(params, start) < 1.0) return start;

    std::uint64_t hi = start;
    do {
        hi *= 2;
    } while (relationship(params, hi) >= 1.0);

    std::uint64_t lo = start;  // f(lo) >= 1, f(hi) < 1
    while (lo + 1 < hi) {
        const std::uint64_t mid = lo + (hi - lo) / 2;
        if (relationship(params, mid) >= 1.0) lo = mid;
        else hi = mid;
    }
    return lo;
}

std::uint64_t default_search_cap(const SegmentParams& params) {
    const auto [x_m, x_M] = monotonic_bounds(params);
    const std::uint64_t two_xM = static_cast<std::uint64_t>(std::ceil(2.0 * x_M));
    return std::max<std::uint64_t>({two_xM, collapse_bound(params), 1000000});
}

std::optional<SustainableInterval> sustainable_interval(const SegmentParams& params) {
    const std::uint64_t n_star = argmax_relationship(params);
    const double f_max = relationship(params, n_star);
    if (f_max <= static_cast<double>(n_star)) return std::nullopt;

    // First positive fixed point, iterated on the increasing branch. Absent
    // (n never dips below f before the max) means the two-fixed-point regime,
    // where no [N_m, N_m'] interval exists.
    std::optional<std::uint64_t> n_m;
    for (std::uint64_t n = 1; n < n_star; ++n) {
        if (relationship(params, n) <= static_cast<double>(n) &&
            relationship(params, n + 1) > static_cast<double>(n + 1)) {
            n_m = n;
            break;
        }
    }
    if (!n_m) return std::nullopt;

    SustainableInterval interval;
    interval.lo = *n_m;

    // N'_m: walk the decreasing side until f drops below N_m; existence is
    // guaranteed because f eventually falls below 1.
    const double target = static_cast<double>(*n_m);
    std::uint64_t n = n_star;
    while (relationship(params, n + 1) >= target) ++n;
    interval.hi = n;
    interval.interval_stable = f_max <= static_cast<double>(interval.hi);
    return interval;
}

IsolatedLimit isolated_limit(double d) {
    const double p = connection_probability(d);
    const double alpha = 1.0 / (1.0 - p);
    const double root = (std::sqrt(1.0 + 4.0 * alpha) - 1.0) / 2.0;
    const double l = 1.0 - std::log(root) / std::log(alpha);
    return {l, 2.0 * l};
}

double isolated_order_bound(double d) {
    if (!(d > 0.0) || d >= 0.5)
        throw std::invalid_argument("isolated_order_bound: requires 0 < d < 1/2");
    return 8.0 / (M_PI * d * d);
}

double growth_probability(const DegreeSet& ss, const DegreeSet& sc, double d, std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("growth_probability: requires n >= 1");
    const auto dup = finite_intersection(ss, sc);
    if (!dup)
        throw std::invalid_argument("growth_probability: duplication set is infinite");
    if (dup->empty()) return 0.0;

    const double p = connection_probability(d);
    double s = 0.0;
    for (std::uint64_t k : *dup)
        s += binomial_range_sum(n - 1, p, k, k);
    s = std::min(s, 1.0);
    if (s >= 1.0) return 1.0;
    // 1 - (1 - s)^n, kept accurate when s is tiny
    return -std::expm1(static_cast<double>(n) * std::log1p(-s));
}

std::string to_string(FixedPointRegime r) {
    switch (r) {
        case FixedPointRegime::one_fp: return "one_fp";
        case FixedPointRegime::two_fp: return "two_fp";
        case FixedPointRegime::three_fp: return "three_fp";
    }
    return "?";
}

RelationshipProfile analyze_relationship(const SegmentParams& params,
                                         std::optional<std::uint64_t> search_cap) {
    RelationshipProfile profile;
    profile.params = params;
    profile.search_cap = search_cap.value_or(default_search_cap(params));
    profile.n_star = argmax_relationship(params);
    profile.f_max = relationship(params, profile.n_star);
    profile.fixed_points = fixed_points(params, profile.search_cap);
    profile.collapse_bound = d3g3::collapse_bound(params);
    profile.interval = sustainable_interval(params);

    switch (profile.fixed_points.size()) {
        case 1: profile.regime = FixedPointRegime::one_fp; break;
        case 2: profile.regime = FixedPointRegime::two_fp; break;
        case 3: profile.regime = FixedPointRegime::three_fp; break;
        default:
            throw std::runtime_error(
                "analyze_relationship: found more than three fixed points, outside the "
                "conjectured regimes");
    }
    return profile;
}

}  // namespace d3g3
