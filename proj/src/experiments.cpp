#include "d3g3/experiments.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>

#include <json.hpp>

#include "d3g3/redistributed.hpp"
#include "d3g3/version.hpp"

namespace d3g3::experiments {

namespace {

void write_provenance(std::ostream& os, const std::string& command,
                      const std::vector<std::pair<std::string, std::string>>& fields) {
    os << "# d3g3 " << kVersion << "\n";
    os << "# command: " << command << "\n";
    for (const auto& [key, value] : fields) os << "# " << key << "=" << value << "\n";
}

void write_snapshot_rows(std::ostream& os, const GraphSnapshot& g) {
    for (std::size_t i = 0; i < g.ids.size(); ++i)
        os << g.t << ',' << g.ids[i] << ',' << std::setprecision(17) << g.pos[i].x << ','
           << g.pos[i].y << "\n";
}

std::uint64_t conserved_of(const JaccardParts& parts) {
    return parts.uni - parts.sym_diff;  // |intersection|
}

}  // namespace

SegmentRunStats run_stats(const GeneratorConfig& cfg, std::uint64_t max_steps,
                          std::uint64_t order_cap, std::ostream* snapshot_csv,
                          bool track_edges) {
    SegmentRunStats stats;
    bool first = true;
    stats.reason = run_visit(cfg, max_steps, [&](const GraphSnapshot& g, const GraphSnapshot& next) {
        if (first) {
            stats.order.push_back(g.order());
            if (snapshot_csv) write_snapshot_rows(*snapshot_csv, g);
            first = false;
        }
        stats.order.push_back(next.order());
        if (snapshot_csv) write_snapshot_rows(*snapshot_csv, next);

        const auto vn = vertex_nervousness_parts(g.ids, next.ids);
        stats.vn.push_back(vn);
        stats.en.push_back(track_edges ? edge_nervousness_parts(g.edges, next.edges)
                                       : std::nullopt);
        const std::uint64_t s_t = vn ? conserved_of(*vn) : 0;
        stats.conserved.push_back(s_t);
        stats.created.push_back(next.order() - s_t);
        return order_cap == 0 || next.order() <= order_cap;
    }, /*need_edges=*/track_edges);
    if (first) {
        // no transition happened (frozen or null at t = 0)
        Rng rng(cfg.rng_seed);
        const auto g0 = random_geometric_graph(cfg.seed_order, cfg.d, rng);
        stats.order.push_back(g0.order());
        if (snapshot_csv) write_snapshot_rows(*snapshot_csv, g0);
    }
    return stats;
}

double mean_conserved_isolated(double d, std::uint64_t n0, std::uint64_t steps,
                               std::uint64_t burn_in, unsigned replicates,
                               std::uint64_t base_seed) {
    GeneratorConfig cfg;
    cfg.d = d;
    cfg.ss = DegreeSet::segment(0, 0);
    cfg.sc = DegreeSet::segment(0, 0);
    cfg.seed_order = n0;

    double total = 0.0;
    std::uint64_t samples = 0;
    for (unsigned r = 0; r < replicates; ++r) {
        cfg.rng_seed = base_seed + r;
        const auto stats = run_stats(cfg, steps, 0, nullptr, /*track_edges=*/false);
        for (std::size_t t = burn_in; t < stats.transitions(); ++t) {
            total += static_cast<double>(stats.conserved[t]);
            ++samples;
        }
    }
    return samples ? total / static_cast<double>(samples) : 0.0;
}

void cmd_simulate(const SimulateSpec& spec, std::ostream& os) {
    spec.cfg.validate();
    write_provenance(os, "simulate",
                     {{"d", std::to_string(spec.cfg.d)},
                      {"ss", spec.cfg.ss.to_string()},
                      {"sc", spec.cfg.sc.to_string()},
                      {"n0", std::to_string(spec.cfg.seed_order)},
                      {"steps", std::to_string(spec.steps)},
                      {"replicates", std::to_string(spec.replicates)},
                      {"seed", std::to_string(spec.cfg.rng_seed)}});
    os << "replicate,t,order,conserved,created,vn,en,verdict\n";

    for (unsigned r = 0; r < spec.replicates; ++r) {
        GeneratorConfig cfg = spec.cfg;
        cfg.rng_seed = spec.cfg.rng_seed + r;

        std::ofstream snap;
        std::ostream* snap_os = nullptr;
        if (r == 0 && !spec.snapshots_path.empty()) {
            snap.open(spec.snapshots_path);
            snap << "t,vertex_id,x,y\n";
            snap_os = &snap;
        }

        const auto stats = run_stats(cfg, spec.steps, 0, snap_os);
        for (std::size_t t = 0; t < stats.order.size(); ++t) {
            os << r << ',' << t << ',' << stats.order[t] << ',';
            const bool has_transition = t < stats.transitions();
            if (has_transition)
                os << stats.conserved[t] << ',' << stats.created[t] << ',';
            else
                os << ",,";
            auto ratio_or_blank = [&](const std::optional<JaccardParts>& parts) {
                if (parts) os << parts->ratio();
            };
            if (has_transition) {
                ratio_or_blank(stats.vn[t]);
                os << ',';
                ratio_or_blank(stats.en[t]);
                os << ',';
            } else {
                os << ",,";
            }
            if (t + 1 < stats.order.size()) {
                os << "running";
            } else {
                switch (stats.reason) {
                    case StopReason::null: os << "null"; break;
                    case StopReason::frozen: os << "frozen"; break;
                    case StopReason::budget: os << "survived"; break;
                }
            }
            os << "\n";
        }
    }
}

std::vector<double> isolated_default_grid() {
    std::vector<double> grid;
    for (int i = 0; i <= 18; ++i) grid.push_back(0.001 + 0.0005 * i);  // 0.001..0.01
    for (int i = 1; i <= 38; ++i) grid.push_back(0.01 + 0.005 * i);    // 0.015..0.2
    return grid;
}

void cmd_isolated(const IsolatedSpec& spec, std::ostream& os) {
    const std::vector<double> grid = spec.d_grid.empty() ? isolated_default_grid() : spec.d_grid;
    write_provenance(os, "isolated",
                     {{"steps", std::to_string(spec.steps)},
                      {"burn_in", std::to_string(spec.burn_in)},
                      {"replicates", std::to_string(spec.replicates)},
                      {"seed", std::to_string(spec.seed)},
                      {"d_count", std::to_string(grid.size())}});
    os << "Expected,Survivors\n";
    std::uint64_t seed = spec.seed;
    for (double d : grid) {
        const IsolatedLimit limit = isolated_limit(d);
        const std::uint64_t n0 =
            std::max<std::uint64_t>(2, static_cast<std::uint64_t>(std::llround(limit.equilibrium_order)));
        const double survivors =
            mean_conserved_isolated(d, n0, spec.steps, spec.burn_in, spec.replicates, seed);
        seed += spec.replicates;
        os << std::setprecision(10) << limit.l << ',' << survivors << "\n";
    }
}

void cmd_nervousness_sweep(const NervousnessSpec& spec, std::ostream& os) {
    write_provenance(os, "nervousness-sweep",
                     {{"d", std::to_string(spec.d)},
                      {"steps", std::to_string(spec.steps)},
                      {"replicates", std::to_string(spec.replicates)},
                      {"seed", std::to_string(spec.seed)}});
    os << "mS;MS;Nervousness\n";

    std::uint64_t seed = spec.seed;
    for (std::uint64_t m : spec.m_grid) {
        for (std::uint64_t M : spec.M_grid) {
            if (M < m) continue;
            const SegmentParams params = SegmentParams::make(m, M, spec.d);
            std::uint64_t n0;
            if (spec.n0) {
                n0 = *spec.n0;
            } else {
                // start at the stable fixed point (the last crossing, on the
                // decreasing branch); starting at the argmax overshoots it and
                // collapses the run
                const auto fps = fixed_points(params, default_search_cap(params));
                n0 = std::max<std::uint64_t>(fps.back(), 1);
            }

            GeneratorConfig cfg;
            cfg.d = spec.d;
            cfg.ss = DegreeSet::segment(m, M);
            cfg.sc = DegreeSet::segment(m, M);
            cfg.seed_order = n0;

            double vn_total = 0.0;
            std::uint64_t vn_samples = 0;
            bool all_survived = true;
            for (unsigned r = 0; r < spec.replicates; ++r) {
                cfg.rng_seed = seed++;
                const auto stats = run_stats(cfg, spec.steps, 0, nullptr, /*track_edges=*/false);
                if (stats.reason != StopReason::budget) all_survived = false;
                for (const auto& parts : stats.vn) {
                    if (!parts) continue;
                    vn_total += parts->ratio();
                    ++vn_samples;
                }
            }
            // Means are over realized steps; a cell whose runs die within the
            // budget is reported as a comment, not silently padded.
            if (all_survived && vn_samples > 0) {
                os << m << ';' << M << ';' << std::setprecision(10)
                   << vn_total / static_cast<double>(vn_samples) << "\n";
            } else {
                os << "# cell m=" << m << " M=" << M << " died before the step budget\n";
            }
        }
    }
}

void cmd_analyze(const AnalyzeSpec& spec, std::ostream& report, std::ostream* curve) {
    const RelationshipProfile profile = analyze_relationship(spec.params, spec.search_cap);

    nlohmann::json j;
    j["m"] = profile.params.m;
    j["M"] = profile.params.M;
    j["d"] = profile.params.d;
    j["p"] = profile.params.p;
    j["n_star"] = profile.n_star;
    j["f_max"] = profile.f_max;
    j["fixed_points"] = profile.fixed_points;
    j["regime"] = to_string(profile.regime);
    j["regime_note"] =
        "fixed-point count taxonomy and the m=0 characterisation are conjectures, "
        "verified empirically";
    j["collapse_bound"] = profile.collapse_bound;
    j["search_cap"] = profile.search_cap;
    if (profile.interval) {
        j["sustainable_interval"] = {{"N_m", profile.interval->lo},
                                     {"N_m_prime", profile.interval->hi},
                                     {"interval_stable", profile.interval->interval_stable}};
    } else {
        j["sustainable_interval"] = nullptr;
    }
    report << j.dump(2) << "\n";

    if (curve) {
        write_provenance(*curve, "analyze",
                         {{"m", std::to_string(profile.params.m)},
                          {"M", std::to_string(profile.params.M)},
                          {"d", std::to_string(profile.params.d)}});
        *curve << "n,f\n";
        const std::uint64_t hi = std::max<std::uint64_t>(profile.collapse_bound, 10);
        const std::uint64_t stride = std::max<std::uint64_t>(1, hi / spec.curve_points);
        for (std::uint64_t n = 0; n <= hi; n += stride)
            *curve << n << ',' << std::setprecision(10) << relationship(profile.params, n) << "\n";
    }
}

void cmd_redistributed(const RedistributedSpec& spec, std::ostream& os) {
    const std::uint64_t n0 = spec.n0 ? spec.n0 : argmax_relationship(spec.params);
    write_provenance(os, "redistributed",
                     {{"m", std::to_string(spec.params.m)},
                      {"M", std::to_string(spec.params.M)},
                      {"d", std::to_string(spec.params.d)},
                      {"n0", std::to_string(n0)},
                      {"steps", std::to_string(spec.steps)},
                      {"replicates", std::to_string(spec.replicates)},
                      {"seed", std::to_string(spec.seed)}});
    os << "replicate,t,order\n";
    for (unsigned r = 0; r < spec.replicates; ++r) {
        Rng rng(spec.seed + r);
        const OrderChain chain = redistributed_run(n0, spec.params, spec.steps, rng);
        for (std::size_t t = 0; t < chain.orders.size(); ++t)
            os << r << ',' << t << ',' << chain.orders[t] << "\n";
    }
}

}  // namespace d3g3::experiments
