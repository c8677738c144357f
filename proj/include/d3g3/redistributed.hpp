#pragma once

#include <cstdint>
#include <vector>

#include "d3g3/mean_field.hpp"
#include "d3g3/rng.hpp"

namespace d3g3 {

// Seeded binomial sampler. Inversion by CDF walk for small means; for large n
// the count is accumulated from individual Bernoulli draws, which keeps the
// stream deterministic at any size.
std::uint64_t sample_binomial(std::uint64_t n, double p, Rng& rng);

// Markov chain of orders in the relaxed model where every snapshot is a fresh
// random geometric graph: n_{t+1} = 2 * Binomial(n_t, p(S, d, n_t)).
std::uint64_t redistributed_step(std::uint64_t n, const SegmentParams& params, Rng& rng);

struct OrderChain {
    SegmentParams params;
    std::vector<std::uint64_t> orders;  // n_0, n_1, ...
    std::uint64_t rng_seed = 0;
    bool absorbed() const { return !orders.empty() && orders.back() == 0; }
};

OrderChain redistributed_run(std::uint64_t n0, const SegmentParams& params, std::uint64_t T,
                             Rng& rng);

}  // namespace d3g3
