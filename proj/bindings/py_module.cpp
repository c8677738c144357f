#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "d3g3/experiments.hpp"
#include "d3g3/graph.hpp"
#include "d3g3/mean_field.hpp"
#include "d3g3/metrics.hpp"
#include "d3g3/redistributed.hpp"
#include "d3g3/torus.hpp"
#include "d3g3/version.hpp"

namespace py = pybind11;
using namespace d3g3;

namespace {

GeneratorConfig make_config(double d, const std::string& ss, const std::string& sc,
                            std::size_t n0, std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.d = d;
    cfg.ss = DegreeSet::parse(ss);
    cfg.sc = DegreeSet::parse(sc);
    cfg.seed_order = n0;
    cfg.rng_seed = seed;
    cfg.validate();
    return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "degree-driven dynamic geometric graphs: simulation and mean-field analysis";
    m.attr("__version__") = kVersion;

    // geometry
    py::class_<TorusPoint>(m, "TorusPoint")
        .def(py::init<double, double>(), py::arg("x"), py::arg("y"))
        .def_readonly("x", &TorusPoint::x)
        .def_readonly("y", &TorusPoint::y)
        .def("__repr__", [](const TorusPoint& p) {
            std::ostringstream os;
            os << "TorusPoint(" << p.x << ", " << p.y << ")";
            return os.str();
        });
    m.def("toroidal_distance", &toroidal_distance, py::arg("a"), py::arg("b"));
    m.def("connection_probability", &connection_probability, py::arg("d"),
          "area pi d^2 of a radius-d disk on the unit torus; requires 0 < d <= 1/2");

    // degree rules
    py::class_<DegreeSet>(m, "DegreeSet")
        .def_static("parse", &DegreeSet::parse, py::arg("text"),
                    "accepts 'empty', 'nat', '{a,b,..}' or '[m,M]'")
        .def("contains", &DegreeSet::contains, py::arg("degree"))
        .def("__contains__", &DegreeSet::contains)
        .def("__eq__", [](const DegreeSet& a, const DegreeSet& b) { return a == b; })
        .def("__repr__", [](const DegreeSet& s) { return "DegreeSet('" + s.to_string() + "')"; })
        .def("__str__", &DegreeSet::to_string);
    m.def("classify", [](const std::string& ss, const std::string& sc) {
        return to_string(classify(DegreeSet::parse(ss), DegreeSet::parse(sc)));
    });
    m.def("predicted_order_monotonicity", [](const std::string& ss, const std::string& sc) {
        return to_string(
            predicted_order_monotonicity(DegreeSet::parse(ss), DegreeSet::parse(sc)));
    });

    // simulation
    py::class_<GraphSnapshot>(m, "GraphSnapshot")
        .def_readonly("t", &GraphSnapshot::t)
        .def_property_readonly("order", [](const GraphSnapshot& g) { return g.order(); })
        .def_readonly("ids", &GraphSnapshot::ids)
        .def_property_readonly("positions",
                               [](const GraphSnapshot& g) {
                                   std::vector<std::pair<double, double>> out;
                                   out.reserve(g.pos.size());
                                   for (const auto& p : g.pos) out.emplace_back(p.x, p.y);
                                   return out;
                               })
        .def_property_readonly("edges", [](const GraphSnapshot& g) {
            std::vector<std::pair<VertexId, VertexId>> out;
            out.reserve(g.edges.size());
            for (const auto& e : g.edges) out.emplace_back(e.u, e.v);
            return out;
        });

    m.def(
        "run",
        [](double d, const std::string& ss, const std::string& sc, std::size_t n0,
           std::uint64_t seed, std::uint64_t max_steps) {
            const auto traj = run(make_config(d, ss, sc, n0, seed), max_steps);
            py::dict out;
            out["stop_reason"] = to_string(traj.reason);
            out["stop_t"] = traj.stop_t();
            out["snapshots"] = traj.snapshots;
            return out;
        },
        py::arg("d"), py::arg("ss"), py::arg("sc"), py::arg("n0"), py::arg("seed"),
        py::arg("max_steps"),
        "full trajectory; every snapshot is kept, so prefer run_summary for long runs");

    m.def(
        "run_summary",
        [](double d, const std::string& ss, const std::string& sc, std::size_t n0,
           std::uint64_t seed, std::uint64_t max_steps, std::uint64_t order_cap,
           bool track_edges) {
            const auto stats = experiments::run_stats(make_config(d, ss, sc, n0, seed),
                                                      max_steps, order_cap, nullptr, track_edges);
            auto ratios = [](const std::vector<std::optional<JaccardParts>>& parts) {
                std::vector<std::optional<double>> out;
                out.reserve(parts.size());
                for (const auto& p : parts)
                    out.push_back(p ? std::optional<double>(p->ratio()) : std::nullopt);
                return out;
            };
            py::dict out;
            out["order"] = stats.order;
            out["conserved"] = stats.conserved;
            out["created"] = stats.created;
            out["vn"] = ratios(stats.vn);
            out["en"] = ratios(stats.en);
            out["stop_reason"] = to_string(stats.reason);
            return out;
        },
        py::arg("d"), py::arg("ss"), py::arg("sc"), py::arg("n0"), py::arg("seed"),
        py::arg("max_steps"), py::arg("order_cap") = 0, py::arg("track_edges") = true,
        "streamed per-step statistics without retaining snapshots");

    // nervousness
    m.def(
        "vertex_nervousness",
        [](const std::vector<VertexId>& a, const std::vector<VertexId>& b) {
            return vertex_nervousness(a, b);
        },
        py::arg("v_t"), py::arg("v_t1"), "Jaccard distance of id sets; None when both are empty");
    m.def(
        "edge_nervousness",
        [](const std::vector<std::pair<VertexId, VertexId>>& a,
           const std::vector<std::pair<VertexId, VertexId>>& b) {
            auto to_edges = [](const std::vector<std::pair<VertexId, VertexId>>& pairs) {
                std::vector<Edge> edges;
                edges.reserve(pairs.size());
                for (const auto& [u, v] : pairs)
                    edges.push_back(u < v ? Edge{u, v} : Edge{v, u});
                return edges;
            };
            return edge_nervousness(to_edges(a), to_edges(b));
        },
        py::arg("e_t"), py::arg("e_t1"));

    // mean field
    py::class_<SegmentParams>(m, "SegmentParams")
        .def(py::init(&SegmentParams::make), py::arg("m"), py::arg("M"), py::arg("d"))
        .def_readonly("m", &SegmentParams::m)
        .def_readonly("M", &SegmentParams::M)
        .def_readonly("d", &SegmentParams::d)
        .def_readonly("p", &SegmentParams::p);
    m.def("survival_probability", &survival_probability, py::arg("params"), py::arg("n"));
    m.def("relationship", &relationship, py::arg("params"), py::arg("n"),
          "expected next order f(n) = 2 n P(deg in [m, M])");
    m.def("relationship_delta", &relationship_delta, py::arg("params"), py::arg("n"));
    m.def("isolated_limit", [](double d) {
        const auto lim = isolated_limit(d);
        return py::make_tuple(lim.l, lim.equilibrium_order);
    });
    m.def("isolated_order_bound", &isolated_order_bound, py::arg("d"));
    m.def(
        "growth_probability",
        [](const std::string& ss, const std::string& sc, double d, std::uint64_t n) {
            return growth_probability(DegreeSet::parse(ss), DegreeSet::parse(sc), d, n);
        },
        py::arg("ss"), py::arg("sc"), py::arg("d"), py::arg("n"));
    m.def(
        "analyze_relationship",
        [](const SegmentParams& params, std::optional<std::uint64_t> search_cap) {
            const auto profile = analyze_relationship(params, search_cap);
            py::dict out;
            out["n_star"] = profile.n_star;
            out["f_max"] = profile.f_max;
            out["fixed_points"] = profile.fixed_points;
            out["regime"] = to_string(profile.regime);
            out["collapse_bound"] = profile.collapse_bound;
            out["search_cap"] = profile.search_cap;
            if (profile.interval) {
                py::dict interval;
                interval["N_m"] = profile.interval->lo;
                interval["N_m_prime"] = profile.interval->hi;
                interval["interval_stable"] = profile.interval->interval_stable;
                out["sustainable_interval"] = interval;
            } else {
                out["sustainable_interval"] = py::none();
            }
            return out;
        },
        py::arg("params"), py::arg("search_cap") = py::none());

    // redistributed model
    m.def(
        "redistributed_run",
        [](std::uint64_t n0, const SegmentParams& params, std::uint64_t steps,
           std::uint64_t seed) {
            Rng rng(seed);
            return redistributed_run(n0, params, steps, rng).orders;
        },
        py::arg("n0"), py::arg("params"), py::arg("steps"), py::arg("seed"),
        "order chain n_0, n_1, ... of the fresh-RGG relaxation; stops at absorption");
}
