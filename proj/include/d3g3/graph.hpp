#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "d3g3/degree_set.hpp"
#include "d3g3/rng.hpp"
#include "d3g3/torus.hpp"

namespace d3g3 {

using VertexId = std::uint64_t;

// Unordered vertex pair, stored with u < v.
struct Edge {
    VertexId u;
    VertexId v;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// One static graph G_t. Edges are exactly the pairs within distance d; they
// are recomputed from positions after every step, never patched.
struct GraphSnapshot {
    std::uint64_t t = 0;
    std::vector<VertexId> ids;       // parallel to pos, arbitrary order
    std::vector<TorusPoint> pos;
    std::vector<Edge> edges;         // canonical: u < v, sorted ascending

    std::size_t order() const { return ids.size(); }
    bool is_null() const { return ids.empty(); }
};

struct GeneratorConfig {
    double d = 0.1;
    DegreeSet ss = DegreeSet::naturals();
    DegreeSet sc = DegreeSet::naturals();
    std::size_t seed_order = 1;
    std::uint64_t rng_seed = 0;

    void validate() const;
};

// Edge-set construction. The all-pairs scan is the correctness oracle; the
// uniform-grid index (cell width >= d) is used for large graphs. Both return
// the same canonical edge list.
std::vector<Edge> edges_all_pairs(const std::vector<VertexId>& ids,
                                  const std::vector<TorusPoint>& pos, double d);
std::vector<Edge> edges_grid(const std::vector<VertexId>& ids,
                             const std::vector<TorusPoint>& pos, double d);
std::vector<Edge> compute_edges(const std::vector<VertexId>& ids,
                                const std::vector<TorusPoint>& pos, double d);

// Degree of each vertex (position-parallel), neighbors within distance <= d,
// self excluded.
std::vector<std::size_t> degrees(const GraphSnapshot& g);

// Same degrees computed straight from positions, skipping the id lookups and
// the edge list entirely; this is the stepping hot path.
std::vector<std::size_t> degree_counts(const std::vector<TorusPoint>& pos, double d);

GraphSnapshot random_geometric_graph(std::size_t n, double d, Rng& rng);

// Test helper: snapshot at t=0 from explicit positions, ids 0..n-1.
GraphSnapshot snapshot_from_positions(std::vector<TorusPoint> pos, double d);

// One simultaneous application of the conservation/creation rules. Degrees
// are read once from g; fresh vertices draw ids from next_id and consume the
// rng in ascending creator-id order. With need_edges = false the returned
// snapshot carries an empty edge list (orders, ids and positions are
// unaffected; degree bookkeeping works from positions).
GraphSnapshot step(const GraphSnapshot& g, const GeneratorConfig& cfg, Rng& rng,
                   VertexId& next_id, bool need_edges = true);

// True iff every vertex is conserved and none creates: all future snapshots
// equal g with certainty.
bool is_frozen(const GraphSnapshot& g, const GeneratorConfig& cfg);

enum class StopReason { budget, null, frozen };
std::string to_string(StopReason r);

struct Trajectory {
    std::vector<GraphSnapshot> snapshots;
    StopReason reason = StopReason::budget;
    std::uint64_t stop_t() const { return snapshots.empty() ? 0 : snapshots.back().t; }
};

Trajectory run(const GeneratorConfig& cfg, std::uint64_t max_steps);

// Streaming variant for long runs: holds only the current snapshot and hands
// each consecutive pair to the visitor. Visitor returns false to stop early.
// need_edges = false skips edge materialization (see step()).
template <typename Visitor>
StopReason run_visit(const GeneratorConfig& cfg, std::uint64_t max_steps, Visitor&& visit,
                     bool need_edges = true) {
    cfg.validate();
    Rng rng(cfg.rng_seed);
    GraphSnapshot g = random_geometric_graph(cfg.seed_order, cfg.d, rng);
    if (!need_edges) g.edges.clear();
    VertexId next_id = static_cast<VertexId>(cfg.seed_order);
    for (std::uint64_t i = 0; i < max_steps; ++i) {
        if (g.is_null()) return StopReason::null;
        if (is_frozen(g, cfg)) return StopReason::frozen;
        GraphSnapshot next = step(g, cfg, rng, next_id, need_edges);
        if (!visit(g, next)) return StopReason::budget;
        g = std::move(next);
    }
    if (g.is_null()) return StopReason::null;
    if (is_frozen(g, cfg)) return StopReason::frozen;
    return StopReason::budget;
}

// Per-vertex labels between consecutive snapshots.
struct NodeTaxonomy {
    std::vector<VertexId> conserved;   // in both V_t and V_{t+1}
    std::vector<VertexId> removed;     // in V_t only
    std::vector<VertexId> creators;    // deg in S_C at time t
    std::vector<VertexId> created;     // in V_{t+1} only
    std::vector<VertexId> duplicated;  // conserved and creator
};

NodeTaxonomy node_taxonomy(const GraphSnapshot& g_t, const GraphSnapshot& g_t1,
                           const GeneratorConfig& cfg);

}  // namespace d3g3
