#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "d3g3/graph.hpp"
#include "d3g3/mean_field.hpp"
#include "d3g3/metrics.hpp"

namespace d3g3::experiments {

// Per-transition statistics of one run, kept light so long trajectories never
// hold more than two snapshots at a time.
struct SegmentRunStats {
    std::vector<std::uint64_t> order;          // n_t for t = 0..T_end
    std::vector<std::uint64_t> conserved;      // s_t per transition
    std::vector<std::uint64_t> created;        // per transition
    std::vector<std::optional<JaccardParts>> vn;  // per transition
    std::vector<std::optional<JaccardParts>> en;  // per transition
    StopReason reason = StopReason::budget;

    std::size_t transitions() const { return conserved.size(); }
};

// Streams a run, optionally capping the order (0 = uncapped; a cap stops the
// run with reason budget) and optionally dumping per-step snapshots as
// (t, vertex_id, x, y) CSV rows.
SegmentRunStats run_stats(const GeneratorConfig& cfg, std::uint64_t max_steps,
                          std::uint64_t order_cap = 0, std::ostream* snapshot_csv = nullptr,
                          bool track_edges = true);

// Mean conserved count of an S = {0} run after burn-in, pooled over
// replicates (replicate r uses seed base_seed + r).
double mean_conserved_isolated(double d, std::uint64_t n0, std::uint64_t steps,
                               std::uint64_t burn_in, unsigned replicates,
                               std::uint64_t base_seed);

struct SimulateSpec {
    GeneratorConfig cfg;
    std::uint64_t steps = 3000;
    unsigned replicates = 1;
    std::string snapshots_path;  // optional; replicate 0 only
};

void cmd_simulate(const SimulateSpec& spec, std::ostream& os);

struct IsolatedSpec {
    std::vector<double> d_grid;  // empty = the default grid
    std::uint64_t steps = 3000;
    std::uint64_t burn_in = 200;
    unsigned replicates = 20;
    std::uint64_t seed = 0;
};

// Default d grid: 0.001..0.01 step 0.0005, then 0.01..0.2 step 0.005.
std::vector<double> isolated_default_grid();
void cmd_isolated(const IsolatedSpec& spec, std::ostream& os);

struct NervousnessSpec {
    std::vector<std::uint64_t> m_grid;
    std::vector<std::uint64_t> M_grid;
    double d = 0.05;
    std::uint64_t steps = 3000;
    unsigned replicates = 20;
    std::uint64_t seed = 0;
    std::optional<std::uint64_t> n0;  // default: last fixed point of f per cell
};

void cmd_nervousness_sweep(const NervousnessSpec& spec, std::ostream& os);

struct AnalyzeSpec {
    SegmentParams params;
    std::optional<std::uint64_t> search_cap;
    std::size_t curve_points = 2000;
};

// JSON report to `report`, sampled (n, f(n)) curve to `curve` when non-null.
void cmd_analyze(const AnalyzeSpec& spec, std::ostream& report, std::ostream* curve);

struct RedistributedSpec {
    SegmentParams params;
    std::uint64_t n0 = 0;  // 0 = argmax of f
    std::uint64_t steps = 3000;
    unsigned replicates = 20;
    std::uint64_t seed = 0;
};

void cmd_redistributed(const RedistributedSpec& spec, std::ostream& os);

}  // namespace d3g3::experiments
