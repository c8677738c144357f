#include <doctest.h>

#include <cmath>
#include <vector>

#include "d3g3/redistributed.hpp"
#include "support/oracles.hpp"

using namespace d3g3;

TEST_CASE("binomial sampler degenerate cases") {
    Rng rng(1);
    CHECK(sample_binomial(0, 0.5, rng) == 0);
    CHECK(sample_binomial(10, 0.0, rng) == 0);
    CHECK(sample_binomial(10, 1.0, rng) == 10);
    for (int i = 0; i < 100; ++i) CHECK(sample_binomial(5, 0.5, rng) <= 5);
}

TEST_CASE("binomial sampler passes a chi-square fit at alpha = 0.01") {
    struct Case {
        std::uint64_t n;
        double p;
        std::uint64_t seed;
    };
    // both sampler branches: small mean (inversion) and large n (Bernoulli)
    const Case cases[] = {{20, 0.3, 101}, {50, 0.05, 202}, {1000, 0.2, 303}};
    for (const auto& c : cases) {
        Rng rng(c.seed);
        std::vector<std::uint64_t> samples;
        samples.reserve(100000);
        for (int i = 0; i < 100000; ++i) samples.push_back(sample_binomial(c.n, c.p, rng));
        const double pvalue = oracles::chi_square_binomial_pvalue(samples, c.n, c.p);
        CHECK(pvalue > 0.01);
    }
}

TEST_CASE("sampler mean and variance track n p at large n") {
    Rng rng(404);
    const std::uint64_t n = 300000;
    const double p = 0.001;
    double sum = 0.0, sum_sq = 0.0;
    const int reps = 500;
    for (int i = 0; i < reps; ++i) {
        const double x = double(sample_binomial(n, p, rng));
        sum += x;
        sum_sq += x * x;
    }
    const double mean = sum / reps;
    const double var = sum_sq / reps - mean * mean;
    const double true_mean = double(n) * p;
    const double true_var = true_mean * (1.0 - p);
    CHECK(std::fabs(mean - true_mean) < 4.0 * std::sqrt(true_var / reps));
    CHECK(var == doctest::Approx(true_var).epsilon(0.15));
}

TEST_CASE("one step doubles a binomial survivor count") {
    const auto params = SegmentParams::make(2, 5, 0.05);
    Rng rng(7);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t next = redistributed_step(500, params, rng);
        CHECK(next % 2 == 0);
        CHECK(next <= 1000);
    }
    CHECK(redistributed_step(0, params, rng) == 0);
}

TEST_CASE("step mean matches the expected-order map f") {
    const auto params = SegmentParams::make(2, 5, 0.05);
    const std::uint64_t n = 598;
    const double f = relationship(params, n);
    const double s = survival_probability(params, n);
    Rng rng(11);
    double sum = 0.0;
    const int reps = 10000;
    for (int i = 0; i < reps; ++i) sum += double(redistributed_step(n, params, rng));
    const double mean = sum / reps;
    // Var(2 Bin(n, s)) = 4 n s (1 - s)
    const double sd_of_mean = 2.0 * std::sqrt(double(n) * s * (1.0 - s) / reps);
    CHECK(std::fabs(mean - f) < 3.0 * sd_of_mean);
}

TEST_CASE("isolated-rule step mean uses the isolation probability") {
    const auto params = SegmentParams::make(0, 0, 0.1);
    const std::uint64_t n = 30;
    const double s = survival_probability(params, n);  // (1-p)^29
    Rng rng(13);
    double sum = 0.0;
    const int reps = 20000;
    for (int i = 0; i < reps; ++i) sum += double(redistributed_step(n, params, rng));
    const double sd_of_mean = 2.0 * std::sqrt(double(n) * s * (1.0 - s) / reps);
    CHECK(std::fabs(sum / reps - 2.0 * double(n) * s) < 3.0 * sd_of_mean);
}

TEST_CASE("runs stop at absorption and stay reproducible") {
    const auto params = SegmentParams::make(2, 5, 0.05);

    SUBCASE("absorbing start") {
        Rng rng(1);
        const auto chain = redistributed_run(0, params, 100, rng);
        CHECK(chain.absorbed());
        CHECK(chain.orders == std::vector<std::uint64_t>{0});
    }
    SUBCASE("tiny start collapses quickly") {
        // from n = 1 no node can have degree >= 2, so survival is 0
        Rng rng(2);
        const auto chain = redistributed_run(1, params, 100, rng);
        CHECK(chain.absorbed());
        CHECK(chain.orders.size() == 2);
    }
    SUBCASE("same seed, same chain") {
        Rng a(42), b(42);
        const auto ca = redistributed_run(598, params, 200, a);
        const auto cb = redistributed_run(598, params, 200, b);
        CHECK(ca.orders == cb.orders);
    }
    SUBCASE("budget run records T + 1 orders unless absorbed") {
        Rng rng(5);
        const auto chain = redistributed_run(598, params, 50, rng);
        if (!chain.absorbed()) CHECK(chain.orders.size() == 51);
        for (std::size_t i = 1; i < chain.orders.size(); ++i) CHECK(chain.orders[i] % 2 == 0);
    }
}

TEST_CASE("chains started inside the sustainable interval rarely leave it") {
    const auto params = SegmentParams::make(2, 5, 0.05);
    const auto interval = sustainable_interval(params);
    REQUIRE(interval);
    Rng rng(99);
    int survived = 0;
    const int reps = 40;
    for (int r = 0; r < reps; ++r) {
        const auto chain = redistributed_run(598, params, 500, rng);
        bool inside = true;
        for (std::size_t t = 1; t < chain.orders.size(); ++t)
            inside = inside && chain.orders[t] >= interval->lo && chain.orders[t] <= interval->hi;
        if (!chain.absorbed() && inside) ++survived;
    }
    CHECK(survived >= 38);  // concentration keeps excursions rare at this scale
}
