#include "d3g3/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace d3g3 {

void GeneratorConfig::validate() const {
    if (!(d > 0.0) || d >= kMaxThreshold)
        throw std::invalid_argument("GeneratorConfig: requires 0 < d < sqrt(2)/2");
    if (seed_order < 1)
        throw std::invalid_argument("GeneratorConfig: seed graph must be non-null (n0 >= 1)");
}

std::vector<Edge> edges_all_pairs(const std::vector<VertexId>& ids,
                                  const std::vector<TorusPoint>& pos, double d) {
    std::vector<Edge> edges;
    const std::size_t n = ids.size();
    const double dd = d * d;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (toroidal_distance_sq(pos[i], pos[j]) <= dd)
                edges.push_back({std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> edges_grid(const std::vector<VertexId>& ids,
                             const std::vector<TorusPoint>& pos, double d) {
    const std::size_t n = ids.size();
    const int cells = static_cast<int>(1.0 / d);
    if (cells < 3) return edges_all_pairs(ids, pos, d);  // wrap would alias cells

    const double cell_w = 1.0 / cells;
    const double dd = d * d;
    auto cell_of = [&](const TorusPoint& p) {
        int cx = std::min(cells - 1, static_cast<int>(p.x / cell_w));
        int cy = std::min(cells - 1, static_cast<int>(p.y / cell_w));
        return cy * cells + cx;
    };

    // bucket vertices by cell (counting sort)
    std::vector<int> cell(n);
    std::vector<std::size_t> count(static_cast<std::size_t>(cells) * cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        cell[i] = cell_of(pos[i]);
        ++count[cell[i] + 1];
    }
    std::partial_sum(count.begin(), count.end(), count.begin());
    std::vector<std::size_t> bucket(n);
    {
        std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
        for (std::size_t i = 0; i < n; ++i) bucket[cursor[cell[i]]++] = i;
    }

    std::vector<Edge> edges;
    auto try_pair = [&](std::size_t i, std::size_t j) {
        if (toroidal_distance_sq(pos[i], pos[j]) <= dd)
            edges.push_back({std::min(ids[i], ids[j]), std::max(ids[i], ids[j])});
    };
    // each unordered cell pair is visited exactly once: a cell against itself
    // and against the four half-neighborhood offsets (wrap-safe for cells >= 3)
    constexpr int offsets[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    for (int cy = 0; cy < cells; ++cy) {
        for (int cx = 0; cx < cells; ++cx) {
            const int c = cy * cells + cx;
            const std::size_t lo = count[c], hi = count[c + 1];
            for (std::size_t s = lo; s < hi; ++s)
                for (std::size_t t = s + 1; t < hi; ++t) try_pair(bucket[s], bucket[t]);
            for (const auto& off : offsets) {
                const int nx = (cx + off[0] + cells) % cells;
                const int ny = (cy + off[1]) % cells;
                const int nc = ny * cells + nx;
                for (std::size_t s = lo; s < hi; ++s)
                    for (std::size_t t = count[nc]; t < count[nc + 1]; ++t)
                        try_pair(bucket[s], bucket[t]);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

std::vector<Edge> compute_edges(const std::vector<VertexId>& ids,
                                const std::vector<TorusPoint>& pos, double d) {
    return ids.size() > 256 ? edges_grid(ids, pos, d) : edges_all_pairs(ids, pos, d);
}

std::vector<std::size_t> degrees(const GraphSnapshot& g) {
    std::vector<std::size_t> deg(g.ids.size(), 0);
    if (g.ids.empty()) return deg;
    // generated snapshots keep ids ascending; binary search beats hashing on
    // the hot path, with a map fallback for hand-built snapshots
    if (std::is_sorted(g.ids.begin(), g.ids.end())) {
        auto index_of = [&](VertexId id) {
            return std::size_t(std::lower_bound(g.ids.begin(), g.ids.end(), id) - g.ids.begin());
        };
        for (const Edge& e : g.edges) {
            ++deg[index_of(e.u)];
            ++deg[index_of(e.v)];
        }
        return deg;
    }
    std::unordered_map<VertexId, std::size_t> index;
    index.reserve(g.ids.size());
    for (std::size_t i = 0; i < g.ids.size(); ++i) index.emplace(g.ids[i], i);
    for (const Edge& e : g.edges) {
        ++deg[index.at(e.u)];
        ++deg[index.at(e.v)];
    }
    return deg;
}

std::vector<std::size_t> degree_counts(const std::vector<TorusPoint>& pos, double d) {
    const std::size_t n = pos.size();
    std::vector<std::size_t> deg(n, 0);
    const double dd = d * d;
    const int cells = static_cast<int>(1.0 / d);
    if (cells < 3 || n <= 256) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (toroidal_distance_sq(pos[i], pos[j]) <= dd) {
                    ++deg[i];
                    ++deg[j];
                }
        return deg;
    }

    const double cell_w = 1.0 / cells;
    std::vector<int> cell(n);
    std::vector<std::size_t> count(static_cast<std::size_t>(cells) * cells + 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int cx = std::min(cells - 1, static_cast<int>(pos[i].x / cell_w));
        int cy = std::min(cells - 1, static_cast<int>(pos[i].y / cell_w));
        cell[i] = cy * cells + cx;
        ++count[cell[i] + 1];
    }
    std::partial_sum(count.begin(), count.end(), count.begin());
    std::vector<std::size_t> bucket(n);
    {
        std::vector<std::size_t> cursor(count.begin(), count.end() - 1);
        for (std::size_t i = 0; i < n; ++i) bucket[cursor[cell[i]]++] = i;
    }

    constexpr int offsets[4][2] = {{1, 0}, {-1, 1}, {0, 1}, {1, 1}};
    for (int cy = 0; cy < cells; ++cy) {
        for (int cx = 0; cx < cells; ++cx) {
            const int c = cy * cells + cx;
            const std::size_t lo = count[c], hi = count[c + 1];
            for (std::size_t s = lo; s < hi; ++s)
                for (std::size_t t = s + 1; t < hi; ++t)
                    if (toroidal_distance_sq(pos[bucket[s]], pos[bucket[t]]) <= dd) {
                        ++deg[bucket[s]];
                        ++deg[bucket[t]];
                    }
            for (const auto& off : offsets) {
                const int nx = (cx + off[0] + cells) % cells;
                const int ny = (cy + off[1]) % cells;
                const int nc = ny * cells + nx;
                for (std::size_t s = lo; s < hi; ++s)
                    for (std::size_t t = count[nc]; t < count[nc + 1]; ++t)
                        if (toroidal_distance_sq(pos[bucket[s]], pos[bucket[t]]) <= dd) {
                            ++deg[bucket[s]];
                            ++deg[bucket[t]];
                        }
            }
        }
    }
    return deg;
}

GraphSnapshot random_geometric_graph(std::size_t n, double d, Rng& rng) {
    GraphSnapshot g;
    g.t = 0;
    g.ids.resize(n);
    g.pos.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        g.ids[i] = static_cast<VertexId>(i);
        g.pos.push_back(TorusPoint::random(rng));
    }
    g.edges = compute_edges(g.ids, g.pos, d);
    return g;
}

GraphSnapshot snapshot_from_positions(std::vector<TorusPoint> pos, double d) {
    GraphSnapshot g;
    g.t = 0;
    g.ids.resize(pos.size());
    for (std::size_t i = 0; i < pos.size(); ++i) g.ids[i] = static_cast<VertexId>(i);
    g.pos = std::move(pos);
    g.edges = compute_edges(g.ids, g.pos, d);
    return g;
}

GraphSnapshot step(const GraphSnapshot& g, const GeneratorConfig& cfg, Rng& rng,
                   VertexId& next_id, bool need_edges) {
    // read once: simultaneous rules; computed from positions so stepping does
    // not depend on the snapshot carrying an edge list
    const std::vector<std::size_t> deg = degree_counts(g.pos, cfg.d);

    GraphSnapshot next;
    next.t = g.t + 1;

    std::vector<std::size_t> creator_idx;
    for (std::size_t i = 0; i < g.ids.size(); ++i) {
        if (cfg.ss.contains(deg[i])) {
            next.ids.push_back(g.ids[i]);
            next.pos.push_back(g.pos[i]);
        }
        if (cfg.sc.contains(deg[i])) creator_idx.push_back(i);
    }

    // Creation positions consume the stream in ascending creator id order so
    // that replay does not depend on snapshot storage order.
    std::sort(creator_idx.begin(), creator_idx.end(),
              [&](std::size_t a, std::size_t b) { return g.ids[a] < g.ids[b]; });
    for (std::size_t i = 0; i < creator_idx.size(); ++i) {
        next.ids.push_back(next_id++);
        next.pos.push_back(TorusPoint::random(rng));
    }

    if (need_edges) next.edges = compute_edges(next.ids, next.pos, cfg.d);
    return next;
}

bool is_frozen(const GraphSnapshot& g, const GeneratorConfig& cfg) {
    const std::vector<std::size_t> deg = degree_counts(g.pos, cfg.d);
    for (std::size_t i = 0; i < g.ids.size(); ++i)
        if (!cfg.ss.contains(deg[i]) || cfg.sc.contains(deg[i])) return false;
    return true;
}

std::string to_string(StopReason r) {
    switch (r) {
        case StopReason::budget: return "budget";
        case StopReason::null: return "null";
        case StopReason::frozen: return "frozen";
    }
    return "?";
}

Trajectory run(const GeneratorConfig& cfg, std::uint64_t max_steps) {
    Trajectory traj;
    traj.reason = run_visit(cfg, max_steps, [&](const GraphSnapshot& g, const GraphSnapshot& next) {
        if (traj.snapshots.empty()) traj.snapshots.push_back(g);
        traj.snapshots.push_back(next);
        return true;
    });
    if (traj.snapshots.empty()) {
        // stopped before the first transition: reconstruct G_0
        Rng rng(cfg.rng_seed);
        traj.snapshots.push_back(random_geometric_graph(cfg.seed_order, cfg.d, rng));
    }
    return traj;
}

NodeTaxonomy node_taxonomy(const GraphSnapshot& g_t, const GraphSnapshot& g_t1,
                           const GeneratorConfig& cfg) {
    if (g_t1.t != g_t.t + 1)
        throw std::invalid_argument("node_taxonomy: snapshots are not consecutive");

    std::unordered_set<VertexId> before(g_t.ids.begin(), g_t.ids.end());
    std::unordered_set<VertexId> after(g_t1.ids.begin(), g_t1.ids.end());
    const std::vector<std::size_t> deg = degrees(g_t);

    NodeTaxonomy tax;
    for (std::size_t i = 0; i < g_t.ids.size(); ++i) {
        const VertexId id = g_t.ids[i];
        const bool kept = after.count(id) > 0;
        const bool creator = cfg.sc.contains(deg[i]);
        if (kept) tax.conserved.push_back(id);
        else tax.removed.push_back(id);
        if (creator) tax.creators.push_back(id);
        if (kept && creator) tax.duplicated.push_back(id);
    }
    for (VertexId id : g_t1.ids)
        if (!before.count(id)) tax.created.push_back(id);
    return tax;
}

}  // namespace d3g3
