#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "d3g3/graph.hpp"
#include "d3g3/metrics.hpp"
#include "d3g3/rng.hpp"

using namespace d3g3;

TEST_CASE("vertex nervousness worked examples") {
    const std::vector<VertexId> a{1, 2, 3};
    const std::vector<VertexId> b{2, 3, 4};
    // sym diff {1,4}, union {1,2,3,4}
    CHECK(*vertex_nervousness(a, b) == doctest::Approx(0.5));

    const std::vector<VertexId> disjoint{7, 8};
    CHECK(*vertex_nervousness(a, disjoint) == doctest::Approx(1.0));

    CHECK(*vertex_nervousness(a, a) == doctest::Approx(0.0));

    const std::vector<VertexId> super{1, 2, 3, 4, 5, 6};
    // sym diff {4,5,6}, union size 6
    CHECK(*vertex_nervousness(a, super) == doctest::Approx(0.5));

    const std::vector<VertexId> one{1};
    const std::vector<VertexId> two{1, 2, 3};
    CHECK(*vertex_nervousness(one, two) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("nervousness of two empty sets is undefined, not zero") {
    const std::vector<VertexId> none;
    const std::vector<VertexId> some{1};
    CHECK_FALSE(vertex_nervousness(none, none).has_value());
    CHECK(*vertex_nervousness(none, some) == doctest::Approx(1.0));
    CHECK(*vertex_nervousness(some, none) == doctest::Approx(1.0));

    const std::vector<Edge> no_edges;
    CHECK_FALSE(edge_nervousness(no_edges, no_edges).has_value());
}

TEST_CASE("edge nervousness worked example") {
    const std::vector<Edge> e0{{1, 2}, {2, 3}};
    const std::vector<Edge> e1{{1, 2}, {3, 4}};
    // sym diff {23, 34}, union {12, 23, 34}
    CHECK(*edge_nervousness(e0, e1) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("jaccard distance satisfies the triangle inequality") {
    Rng rng(13);
    for (int trial = 0; trial < 300; ++trial) {
        auto sample = [&rng]() {
            std::vector<VertexId> v;
            const std::size_t n = 1 + rng.next_u64() % 8;
            for (std::size_t i = 0; i < n; ++i) v.push_back(rng.next_u64() % 10);
            return v;
        };
        const auto a = sample();
        const auto b = sample();
        const auto c = sample();
        const auto ab = vertex_nervousness_parts(a, b);
        const auto bc = vertex_nervousness_parts(b, c);
        const auto ac = vertex_nervousness_parts(a, c);
        REQUIRE(ab);
        REQUIRE(bc);
        REQUIRE(ac);
        CHECK(ac->ratio() <= ab->ratio() + bc->ratio() + 1e-12);
        CHECK(ab->sym_diff <= ab->uni);
    }
}

TEST_CASE("graph nervousness bundles both metrics") {
    GraphSnapshot g0, g1;
    g0.t = 0;
    g1.t = 1;
    g0.ids = {1, 2, 3};
    g1.ids = {2, 3, 4};
    g0.pos.resize(3);
    g1.pos.resize(3);
    g0.edges = {{1, 2}, {2, 3}};
    g1.edges = {{2, 3}};
    const auto gn = graph_nervousness(g0, g1);
    CHECK(*gn.vn == doctest::Approx(0.5));
    CHECK(*gn.en == doctest::Approx(0.5));  // sym diff {12}, union {12, 23}
}

TEST_CASE("segment-regime identity VN = n/(n+s), checked exactly") {
    // with S_S = S_C every survivor also spawns, so the union has n + s ids
    // and the symmetric difference has (n - s) removed plus s created
    CHECK(segment_nervousness_check(10, 10) == doctest::Approx(0.5));
    CHECK(segment_nervousness_check(10, 0) == doctest::Approx(1.0));
    CHECK(segment_nervousness_check(4, 12) == doctest::Approx(0.25));
    CHECK_THROWS_AS(segment_nervousness_check(0, 0), std::invalid_argument);
}

TEST_CASE("segment identity holds on simulated equal-segment runs") {
    GeneratorConfig cfg;
    cfg.d = 0.2;
    cfg.ss = DegreeSet::segment(1, 5);
    cfg.sc = DegreeSet::segment(1, 5);
    cfg.seed_order = 60;
    cfg.rng_seed = 31;
    const auto traj = run(cfg, 30);
    for (std::size_t i = 1; i < traj.snapshots.size(); ++i) {
        const auto& prev = traj.snapshots[i - 1];
        const auto& curr = traj.snapshots[i];
        if (prev.is_null()) break;
        const auto tax = node_taxonomy(prev, curr, cfg);
        const auto vn = vertex_nervousness(prev.ids, curr.ids);
        REQUIRE(vn);
        const std::uint64_t n = prev.order();
        const std::uint64_t s = tax.conserved.size();
        CHECK(*vn == doctest::Approx(segment_nervousness_check(n, s)));
    }
}

TEST_CASE("full renewal pins VN to 1 and equal rules pin it to 1/2") {
    GeneratorConfig cfg;
    cfg.d = 0.1;
    cfg.seed_order = 20;
    cfg.rng_seed = 3;

    SUBCASE("empty/nat renews every vertex") {
        cfg.ss = DegreeSet::empty();
        cfg.sc = DegreeSet::naturals();
        const auto traj = run(cfg, 10);
        for (std::size_t i = 1; i < traj.snapshots.size(); ++i)
            CHECK(*vertex_nervousness(traj.snapshots[i - 1].ids, traj.snapshots[i].ids) ==
                  doctest::Approx(1.0));
    }
    SUBCASE("nat/nat duplicates every vertex") {
        cfg.ss = DegreeSet::naturals();
        cfg.sc = DegreeSet::naturals();
        const auto traj = run(cfg, 5);
        for (std::size_t i = 1; i < traj.snapshots.size(); ++i)
            CHECK(*vertex_nervousness(traj.snapshots[i - 1].ids, traj.snapshots[i].ids) ==
                  doctest::Approx(0.5));
    }
}

TEST_CASE("sustainability verdict reflects the stop reason") {
    GeneratorConfig cfg;
    cfg.d = 0.1;
    cfg.seed_order = 10;
    cfg.rng_seed = 1;

    SUBCASE("null") {
        cfg.ss = DegreeSet::empty();
        cfg.sc = DegreeSet::empty();
        const auto v = sustainability_verdict(run(cfg, 20));
        CHECK(v.kind == SustainabilityVerdict::Kind::became_null);
        CHECK(v.t == 1);
    }
    SUBCASE("frozen") {
        cfg.ss = DegreeSet::naturals();
        cfg.sc = DegreeSet::empty();
        const auto v = sustainability_verdict(run(cfg, 20));
        CHECK(v.kind == SustainabilityVerdict::Kind::froze);
        CHECK(v.t == 0);
    }
    SUBCASE("survived") {
        cfg.ss = DegreeSet::empty();
        cfg.sc = DegreeSet::naturals();
        const auto v = sustainability_verdict(run(cfg, 20));
        CHECK(v.kind == SustainabilityVerdict::Kind::survived_budget);
        CHECK(v.t == 20);
    }
}

TEST_CASE("verdict kinds have stable names") {
    CHECK(to_string(SustainabilityVerdict::Kind::became_null) == "null");
    CHECK(to_string(SustainabilityVerdict::Kind::froze) == "frozen");
    CHECK(to_string(SustainabilityVerdict::Kind::survived_budget) == "survived");
}
