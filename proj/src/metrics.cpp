#include "d3g3/metrics.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace d3g3 {

namespace {

template <typename T>
std::optional<JaccardParts> jaccard_parts(std::span<const T> a, std::span<const T> b) {
    if (a.empty() && b.empty()) return std::nullopt;
    std::vector<T> sa(a.begin(), a.end());
    std::vector<T> sb(b.begin(), b.end());
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());

    std::uint64_t inter = 0;
    auto ia = sa.begin();
    auto ib = sb.begin();
    while (ia != sa.end() && ib != sb.end()) {
        if (*ia < *ib) ++ia;
        else if (*ib < *ia) ++ib;
        else { ++inter; ++ia; ++ib; }
    }
    JaccardParts parts;
    parts.uni = sa.size() + sb.size() - inter;
    parts.sym_diff = parts.uni - inter;
    return parts;
}

}  // namespace

std::optional<JaccardParts> vertex_nervousness_parts(std::span<const VertexId> v_t,
                                                     std::span<const VertexId> v_t1) {
    return jaccard_parts(v_t, v_t1);
}

std::optional<double> vertex_nervousness(std::span<const VertexId> v_t,
                                         std::span<const VertexId> v_t1) {
    const auto parts = vertex_nervousness_parts(v_t, v_t1);
    if (!parts) return std::nullopt;
    return parts->ratio();
}

std::optional<JaccardParts> edge_nervousness_parts(std::span<const Edge> e_t,
                                                   std::span<const Edge> e_t1) {
    return jaccard_parts(e_t, e_t1);
}

std::optional<double> edge_nervousness(std::span<const Edge> e_t, std::span<const Edge> e_t1) {
    const auto parts = edge_nervousness_parts(e_t, e_t1);
    if (!parts) return std::nullopt;
    return parts->ratio();
}

GraphNervousness graph_nervousness(const GraphSnapshot& g_t, const GraphSnapshot& g_t1) {
    return {vertex_nervousness(g_t.ids, g_t1.ids), edge_nervousness(g_t.edges, g_t1.edges)};
}

SustainabilityVerdict sustainability_verdict(const Trajectory& traj) {
    SustainabilityVerdict v;
    switch (traj.reason) {
        case StopReason::null:
            v.kind = SustainabilityVerdict::Kind::became_null;
            v.t = traj.stop_t();
            break;
        case StopReason::frozen:
            v.kind = SustainabilityVerdict::Kind::froze;
            v.t = traj.stop_t();
            break;
        case StopReason::budget:
            v.kind = SustainabilityVerdict::Kind::survived_budget;
            v.t = traj.stop_t();
            break;
    }
    return v;
}

std::string to_string(SustainabilityVerdict::Kind k) {
    switch (k) {
        case SustainabilityVerdict::Kind::became_null: return "null";
        case SustainabilityVerdict::Kind::froze: return "frozen";
        case SustainabilityVerdict::Kind::survived_budget: return "survived";
    }
    return "?";
}

double segment_nervousness_check(std::uint64_t n_t, std::uint64_t s_t) {
    if (n_t == 0)
        throw std::invalid_argument("segment_nervousness_check: requires n_t > 0");
    return static_cast<double>(n_t) / static_cast<double>(n_t + s_t);
}

}  // namespace d3g3
