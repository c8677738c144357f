#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "d3g3/experiments.hpp"
#include "d3g3/version.hpp"

namespace {

constexpr int kExitInvalidParams = 2;

std::unique_ptr<std::ofstream> open_out(const std::string& path) {
    if (path.empty()) return nullptr;
    auto file = std::make_unique<std::ofstream>(path);
    if (!*file) throw CLI::ValidationError("--out", "cannot open output file: " + path);
    return file;
}

std::ostream& out_or_stdout(const std::unique_ptr<std::ofstream>& file) {
    return file ? *file : std::cout;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"D3G3 dynamic-graph laboratory: simulation, nervousness metrics and "
                 "mean-field sustainability analysis"};
    app.set_version_flag("--version", d3g3::kVersion);
    app.require_subcommand(1);

    // shared option storage
    std::string ss_text = "nat", sc_text = "nat", out_path, snapshots_path;
    double d = 0.1;
    std::uint64_t m = 0, M = 0, n0 = 0, steps = 3000, seed = 0, burn_in = 200;
    unsigned replicates = 20;
    bool paper_scale = false;
    std::vector<double> d_list;
    std::vector<std::uint64_t> m_list, M_list;

    auto* simulate = app.add_subcommand("simulate", "Run D3G3 and emit a per-step summary CSV");
    simulate->add_option("--d", d, "distance threshold")->capture_default_str();
    simulate->add_option("--ss", ss_text, "conservation set: empty|nat|{a,b,..}|[m,M]")
        ->capture_default_str();
    simulate->add_option("--sc", sc_text, "creation set, same syntax")->capture_default_str();
    simulate->add_option("--n0", n0, "seed graph order")->default_val(50);
    simulate->add_option("--steps", steps, "step budget")->capture_default_str();
    simulate->add_option("--replicates", replicates, "number of runs")->default_val(1);
    simulate->add_option("--seed", seed, "rng seed (replicate r uses seed+r)");
    simulate->add_option("--out", out_path, "output CSV (default stdout)");
    simulate->add_option("--snapshots", snapshots_path,
                         "dump (t,vertex_id,x,y) CSV for replicate 0");

    auto* isolated = app.add_subcommand(
        "isolated", "S={0} equilibrium: theoretical l(d) vs mean conserved count");
    isolated->add_option("--d", d_list, "explicit d values (default: the full d grid)");
    isolated->add_option("--steps", steps, "step budget")->capture_default_str();
    isolated->add_option("--burn-in", burn_in, "transitions dropped before averaging")
        ->capture_default_str();
    isolated->add_option("--replicates", replicates, "runs per d")->capture_default_str();
    isolated->add_option("--seed", seed, "rng seed");
    isolated->add_option("--out", out_path, "output CSV (default stdout)");
    isolated->add_flag("--paper-scale", paper_scale, "30000-step budget");

    auto* sweep = app.add_subcommand("nervousness-sweep",
                                     "mean vertex nervousness over an (m,M) segment grid");
    sweep->add_option("--d", d, "distance threshold")->default_val(0.05);
    sweep->add_option("--m", m_list, "m grid values")->expected(-1);
    sweep->add_option("--M", M_list, "M grid values")->expected(-1);
    sweep->add_option("--n0", n0, "seed order (default: last fixed point of f per cell)");
    sweep->add_option("--steps", steps, "step budget")->capture_default_str();
    sweep->add_option("--replicates", replicates, "runs per cell")->capture_default_str();
    sweep->add_option("--seed", seed, "rng seed");
    sweep->add_option("--out", out_path, "output CSV (default stdout)");
    sweep->add_flag("--paper-scale", paper_scale, "30000-step budget");

    auto* analyze = app.add_subcommand("analyze",
                                       "mean-field relationship report for a segment");
    analyze->add_option("--m", m, "segment lower bound")->required();
    analyze->add_option("--M", M, "segment upper bound")->required();
    analyze->add_option("--d", d, "distance threshold")->default_val(0.05);
    std::uint64_t cap = 0;
    analyze->add_option("--search-cap", cap, "fixed-point search cap (default: automatic)");
    analyze->add_option("--out", out_path, "f-curve CSV path (report goes to stdout)");

    auto* redistributed = app.add_subcommand(
        "redistributed", "order chains of the redistributed (fresh-RGG) model");
    redistributed->add_option("--m", m, "segment lower bound")->required();
    redistributed->add_option("--M", M, "segment upper bound")->required();
    redistributed->add_option("--d", d, "distance threshold")->default_val(0.05);
    redistributed->add_option("--n0", n0, "initial order (default: argmax of f)");
    redistributed->add_option("--steps", steps, "step budget")->capture_default_str();
    redistributed->add_option("--replicates", replicates, "number of chains")
        ->capture_default_str();
    redistributed->add_option("--seed", seed, "rng seed (replicate r uses seed+r)");
    redistributed->add_option("--out", out_path, "output CSV (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalidParams;
    }

    try {
        using namespace d3g3;
        using namespace d3g3::experiments;
        const auto out_file = open_out(out_path);

        if (*simulate) {
            SimulateSpec spec;
            spec.cfg.d = d;
            spec.cfg.ss = DegreeSet::parse(ss_text);
            spec.cfg.sc = DegreeSet::parse(sc_text);
            spec.cfg.seed_order = n0;
            spec.cfg.rng_seed = seed;
            spec.steps = steps;
            spec.replicates = replicates;
            spec.snapshots_path = snapshots_path;
            cmd_simulate(spec, out_or_stdout(out_file));
        } else if (*isolated) {
            IsolatedSpec spec;
            spec.d_grid = d_list;
            spec.steps = paper_scale ? 30000 : steps;
            spec.burn_in = burn_in;
            spec.replicates = replicates;
            spec.seed = seed;
            cmd_isolated(spec, out_or_stdout(out_file));
        } else if (*sweep) {
            NervousnessSpec spec;
            spec.d = d;
            spec.m_grid = m_list.empty()
                ? std::vector<std::uint64_t>{20, 25, 30, 35, 40, 45, 50, 55, 60, 65}
                : m_list;
            spec.M_grid = M_list.empty()
                ? std::vector<std::uint64_t>{25, 40, 55, 70, 85, 100, 115, 130, 145}
                : M_list;
            spec.steps = paper_scale ? 30000 : steps;
            spec.replicates = replicates;
            spec.seed = seed;
            if (sweep->count("--n0")) spec.n0 = n0;
            cmd_nervousness_sweep(spec, out_or_stdout(out_file));
        } else if (*analyze) {
            AnalyzeSpec spec;
            spec.params = SegmentParams::make(m, M, d);
            if (cap) spec.search_cap = cap;
            std::ostream* curve = out_file ? out_file.get() : nullptr;
            cmd_analyze(spec, std::cout, curve);
        } else if (*redistributed) {
            RedistributedSpec spec;
            spec.params = SegmentParams::make(m, M, d);
            spec.n0 = n0;
            spec.steps = steps;
            spec.replicates = replicates;
            spec.seed = seed;
            cmd_redistributed(spec, out_or_stdout(out_file));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidParams;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
