#include <doctest.h>

#include <stdexcept>

#include "d3g3/degree_set.hpp"
#include "d3g3/rng.hpp"

using namespace d3g3;

namespace {

DegreeSet random_set(Rng& rng) {
    switch (rng.next_u64() % 4) {
        case 0: return DegreeSet::empty();
        case 1: return DegreeSet::naturals();
        case 2: {
            const std::size_t count = 1 + rng.next_u64() % 6;
            std::vector<std::uint64_t> vals;
            for (std::size_t i = 0; i < count; ++i) vals.push_back(rng.next_u64() % 12);
            return DegreeSet::finite(vals);
        }
        default: {
            const std::uint64_t m = rng.next_u64() % 10;
            return DegreeSet::segment(m, m + rng.next_u64() % 6);
        }
    }
}

}  // namespace

TEST_CASE("membership per variant") {
    CHECK_FALSE(DegreeSet::empty().contains(5));
    CHECK(DegreeSet::naturals().contains(0));
    CHECK(DegreeSet::naturals().contains(1000000));
    const auto seg = DegreeSet::segment(2, 4);
    CHECK(seg.contains(2));
    CHECK(seg.contains(4));
    CHECK_FALSE(seg.contains(5));
    CHECK_FALSE(seg.contains(1));
    const auto fin = DegreeSet::finite({0, 3, 7});
    CHECK(fin.contains(3));
    CHECK_FALSE(fin.contains(4));
}

TEST_CASE("construction invariants") {
    CHECK_THROWS_AS(DegreeSet::finite({}), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSet::segment(4, 2), std::invalid_argument);
    // duplicates dropped, values sorted
    const auto s = DegreeSet::finite({7, 3, 3, 0});
    CHECK(s.values() == std::vector<std::uint64_t>{0, 3, 7});
    CHECK(s.min() == 0);
    CHECK(s.max() == 7);
}

TEST_CASE("text syntax round trip") {
    CHECK(DegreeSet::parse("empty") == DegreeSet::empty());
    CHECK(DegreeSet::parse("NAT") == DegreeSet::naturals());
    CHECK(DegreeSet::parse("{0, 3, 7}") == DegreeSet::finite({0, 3, 7}));
    CHECK(DegreeSet::parse("[2,4]") == DegreeSet::segment(2, 4));
    CHECK(DegreeSet::parse(" [ 2 , 4 ] ") == DegreeSet::segment(2, 4));
    CHECK_THROWS_AS(DegreeSet::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSet::parse("[3]"), std::invalid_argument);
    CHECK_THROWS_AS(DegreeSet::parse("{1,-2}"), std::invalid_argument);
}

TEST_CASE("a contiguous finite set is a segment") {
    CHECK(DegreeSet::finite({2, 3, 4}).is_segment_shaped());
    CHECK_FALSE(DegreeSet::finite({2, 4}).is_segment_shaped());
    CHECK(DegreeSet::segment(0, 0).is_segment_shaped());
    CHECK(DegreeSet::finite({2, 3, 4}) == DegreeSet::segment(2, 4));
}

TEST_CASE("limit-case classification") {
    CHECK(classify(DegreeSet::naturals(), DegreeSet::naturals()) == RegimeLabel::all_all);
    CHECK(classify(DegreeSet::naturals(), DegreeSet::empty()) == RegimeLabel::all_empty);
    CHECK(classify(DegreeSet::empty(), DegreeSet::naturals()) == RegimeLabel::empty_all);
    CHECK(classify(DegreeSet::empty(), DegreeSet::empty()) == RegimeLabel::empty_empty);
    CHECK(classify(DegreeSet::naturals(), DegreeSet::finite({1})) == RegimeLabel::all_finite);
    CHECK(classify(DegreeSet::finite({1}), DegreeSet::naturals()) == RegimeLabel::finite_all);
    CHECK(classify(DegreeSet::finite({1}), DegreeSet::empty()) == RegimeLabel::finite_empty);
    CHECK(classify(DegreeSet::empty(), DegreeSet::finite({1})) == RegimeLabel::empty_finite);
}

TEST_CASE("general-case subdivisions") {
    CHECK(classify(DegreeSet::segment(1, 3), DegreeSet::segment(1, 3)) ==
          RegimeLabel::general_equal_segments);
    CHECK(classify(DegreeSet::finite({0, 1}), DegreeSet::finite({2, 3})) ==
          RegimeLabel::general_disjoint);
    CHECK(classify(DegreeSet::finite({0, 2}), DegreeSet::finite({2, 5})) ==
          RegimeLabel::general_uncovered);
}

TEST_CASE("classification is exhaustive and deterministic") {
    Rng rng(7);
    for (int i = 0; i < 500; ++i) {
        const DegreeSet ss = random_set(rng);
        const DegreeSet sc = random_set(rng);
        const RegimeLabel a = classify(ss, sc);
        const RegimeLabel b = classify(ss, sc);
        CHECK(a == b);
        CHECK_FALSE(a == RegimeLabel::finite_finite);  // always refined
        CHECK_FALSE(to_string(a).empty());
    }
}

TEST_CASE("order monotonicity prediction") {
    CHECK(predicted_order_monotonicity(DegreeSet::finite({0, 1}), DegreeSet::finite({2, 3})) ==
          OrderMonotonicity::non_increasing);
    CHECK(predicted_order_monotonicity(DegreeSet::segment(0, 5), DegreeSet::naturals()) ==
          OrderMonotonicity::non_decreasing);
    CHECK(predicted_order_monotonicity(DegreeSet::empty(), DegreeSet::naturals()) ==
          OrderMonotonicity::constant);
    CHECK(predicted_order_monotonicity(DegreeSet::naturals(), DegreeSet::empty()) ==
          OrderMonotonicity::constant);
    CHECK(predicted_order_monotonicity(DegreeSet::segment(0, 2), DegreeSet::segment(2, 4)) ==
          OrderMonotonicity::unknown);
}

TEST_CASE("finite intersection extraction") {
    const auto dup = finite_intersection(DegreeSet::segment(0, 4), DegreeSet::segment(2, 8));
    REQUIRE(dup.has_value());
    CHECK(*dup == std::vector<std::uint64_t>{2, 3, 4});
    CHECK(finite_intersection(DegreeSet::naturals(), DegreeSet::naturals()) == std::nullopt);
    CHECK(finite_intersection(DegreeSet::empty(), DegreeSet::naturals())->empty());
    const auto with_all = finite_intersection(DegreeSet::naturals(), DegreeSet::finite({1, 5}));
    REQUIRE(with_all.has_value());
    CHECK(*with_all == std::vector<std::uint64_t>{1, 5});
}
