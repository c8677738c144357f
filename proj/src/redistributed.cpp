#include "d3g3/redistributed.hpp"

#include <cmath>
#include <stdexcept>

namespace d3g3 {

std::uint64_t sample_binomial(std::uint64_t n, double p, Rng& rng) {
    if (p < 0.0 || p > 1.0)
        throw std::invalid_argument("sample_binomial: p outside [0,1]");
    if (n == 0 || p == 0.0) return 0;
    if (p == 1.0) return n;

    if (static_cast<double>(n) * p <= 64.0 && n <= 1u << 20) {
        // inversion: walk the CDF with the pmf ratio recurrence
        const double u = rng.next_unit();
        const double q = 1.0 - p;
        double pmf = std::exp(static_cast<double>(n) * std::log(q));  // k = 0
        double cdf = pmf;
        std::uint64_t k = 0;
        while (u > cdf && k < n) {
            pmf *= (static_cast<double>(n - k) / static_cast<double>(k + 1)) * (p / q);
            cdf += pmf;
            ++k;
        }
        return k;
    }

    std::uint64_t count = 0;
    for (std::uint64_t i = 0; i < n; ++i)
        if (rng.next_unit() < p) ++count;
    return count;
}

std::uint64_t redistributed_step(std::uint64_t n, const SegmentParams& params, Rng& rng) {
    if (n == 0) return 0;  // absorbing
    const double surv = survival_probability(params, n);
    return 2 * sample_binomial(n, surv, rng);
}

OrderChain redistributed_run(std::uint64_t n0, const SegmentParams& params, std::uint64_t T,
                             Rng& rng) {
    OrderChain chain;
    chain.params = params;
    chain.orders.reserve(T + 1);
    chain.orders.push_back(n0);
    std::uint64_t n = n0;
    for (std::uint64_t t = 0; t < T && n > 0; ++t) {
        n = redistributed_step(n, params, rng);
        chain.orders.push_back(n);
    }
    return chain;
}

}  // namespace d3g3
