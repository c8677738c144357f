#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace d3g3 {

// A possibly infinite set of non-negative integers used for the conservation
// and creation rules. The explicit variants keep classification decidable.
class DegreeSet {
public:
    enum class Kind { Empty, AllNaturals, Finite, Segment };

    static DegreeSet empty() { return DegreeSet(Kind::Empty); }
    static DegreeSet naturals() { return DegreeSet(Kind::AllNaturals); }
    // Finite explicit set; must be non-empty, duplicates are dropped.
    static DegreeSet finite(std::vector<std::uint64_t> values);
    // Closed interval [m, M] with m <= M.
    static DegreeSet segment(std::uint64_t m, std::uint64_t M);

    // Textual syntax: "empty", "nat", "{0,3,7}", "[m,M]" (case-insensitive).
    static DegreeSet parse(const std::string& text);

    Kind kind() const { return kind_; }
    bool is_empty() const { return kind_ == Kind::Empty; }
    bool is_naturals() const { return kind_ == Kind::AllNaturals; }
    // A segment: a non-empty interval of consecutive
    // integers (the Finite variant qualifies when its values are contiguous).
    bool is_segment_shaped() const;

    bool contains(std::uint64_t k) const;

    // Sorted values; only valid for Empty/Finite/Segment variants.
    std::vector<std::uint64_t> values() const;
    std::optional<std::uint64_t> min() const;
    std::optional<std::uint64_t> max() const;

    std::string to_string() const;

    friend bool operator==(const DegreeSet& a, const DegreeSet& b);

private:
    explicit DegreeSet(Kind k) : kind_(k) {}

    Kind kind_;
    // Finite: sorted unique values. Segment: {m, M}.
    std::vector<std::uint64_t> data_;
};

bool intersection_is_empty(const DegreeSet& a, const DegreeSet& b);
bool union_is_naturals(const DegreeSet& a, const DegreeSet& b);
// Explicit intersection; nullopt when the result is infinite.
std::optional<std::vector<std::uint64_t>> finite_intersection(const DegreeSet& a,
                                                              const DegreeSet& b);

// Taxonomy cell for a (S_S, S_C) pair. The first nine labels are the limit
// cases (at least one set empty or all of N); the rest subdivide the general
// case.
enum class RegimeLabel {
    // limit cases, S_S major / S_C minor
    all_all,          // exponential doubling, sustainable
    all_finite,       // asymptotically non sustainable
    all_empty,        // static, non sustainable
    finite_all,       // sustainable
    finite_empty,     // non sustainable
    empty_all,        // full renewal, sustainable
    empty_finite,     // depends on the parameters
    empty_empty,      // null at t=1
    finite_finite,    // general case, refined below (never returned directly)
    // general-case subdivisions
    general_equal_segments,
    general_disjoint,
    general_covering,
    general_partition,
    general_uncovered,
};

RegimeLabel classify(const DegreeSet& ss, const DegreeSet& sc);
std::string to_string(RegimeLabel label);

enum class OrderMonotonicity { non_increasing, non_decreasing, constant, unknown };

OrderMonotonicity predicted_order_monotonicity(const DegreeSet& ss, const DegreeSet& sc);
std::string to_string(OrderMonotonicity m);

}  // namespace d3g3
