#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "d3g3/graph.hpp"

namespace d3g3 {

// Exact Jaccard-distance numerator/denominator, so identities can be checked
// by integer cross-multiplication.
struct JaccardParts {
    std::uint64_t sym_diff = 0;  // |A triangle B|
    std::uint64_t uni = 0;       // |A union B|

    double ratio() const { return static_cast<double>(sym_diff) / static_cast<double>(uni); }
};

// nullopt when both sets are empty (the 0/0 case; distinct from 0, which
// would falsely read as "static").
std::optional<JaccardParts> vertex_nervousness_parts(std::span<const VertexId> v_t,
                                                     std::span<const VertexId> v_t1);
std::optional<double> vertex_nervousness(std::span<const VertexId> v_t,
                                         std::span<const VertexId> v_t1);

std::optional<JaccardParts> edge_nervousness_parts(std::span<const Edge> e_t,
                                                   std::span<const Edge> e_t1);
std::optional<double> edge_nervousness(std::span<const Edge> e_t, std::span<const Edge> e_t1);

struct GraphNervousness {
    std::optional<double> vn;
    std::optional<double> en;
};

GraphNervousness graph_nervousness(const GraphSnapshot& g_t, const GraphSnapshot& g_t1);

struct SustainabilityVerdict {
    enum class Kind { became_null, froze, survived_budget };
    Kind kind = Kind::survived_budget;
    std::uint64_t t = 0;  // step of the observed failure, when any
};

SustainabilityVerdict sustainability_verdict(const Trajectory& traj);
std::string to_string(SustainabilityVerdict::Kind k);

// VN_t in the equal-segments regime, from order and conserved count alone.
double segment_nervousness_check(std::uint64_t n_t, std::uint64_t s_t);

}  // namespace d3g3
