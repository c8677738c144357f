#include "d3g3/degree_set.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace d3g3 {

DegreeSet DegreeSet::finite(std::vector<std::uint64_t> values) {
    if (values.empty())
        throw std::invalid_argument("DegreeSet::finite: use DegreeSet::empty() for the empty set");
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    DegreeSet s(Kind::Finite);
    s.data_ = std::move(values);
    return s;
}

DegreeSet DegreeSet::segment(std::uint64_t m, std::uint64_t M) {
    if (m > M) throw std::invalid_argument("DegreeSet::segment: requires m <= M");
    DegreeSet s(Kind::Segment);
    s.data_ = {m, M};
    return s;
}

bool DegreeSet::is_segment_shaped() const {
    switch (kind_) {
        case Kind::Segment: return true;
        case Kind::Finite:
            return data_.back() - data_.front() + 1 == data_.size();
        default: return false;
    }
}

bool DegreeSet::contains(std::uint64_t k) const {
    switch (kind_) {
        case Kind::Empty: return false;
        case Kind::AllNaturals: return true;
        case Kind::Segment: return k >= data_[0] && k <= data_[1];
        case Kind::Finite:
            return std::binary_search(data_.begin(), data_.end(), k);
    }
    return false;
}

std::vector<std::uint64_t> DegreeSet::values() const {
    switch (kind_) {
        case Kind::Empty: return {};
        case Kind::Finite: return data_;
        case Kind::Segment: {
            std::vector<std::uint64_t> out;
            out.reserve(data_[1] - data_[0] + 1);
            for (std::uint64_t k = data_[0]; k <= data_[1]; ++k) out.push_back(k);
            return out;
        }
        case Kind::AllNaturals:
            throw std::logic_error("DegreeSet::values: set is infinite");
    }
    return {};
}

std::optional<std::uint64_t> DegreeSet::min() const {
    switch (kind_) {
        case Kind::Empty: return std::nullopt;
        case Kind::AllNaturals: return 0;
        default: return data_.front();
    }
}

std::optional<std::uint64_t> DegreeSet::max() const {
    switch (kind_) {
        case Kind::Empty:
        case Kind::AllNaturals: return std::nullopt;
        case Kind::Segment: return data_[1];
        case Kind::Finite: return data_.back();
    }
    return std::nullopt;
}

std::string DegreeSet::to_string() const {
    switch (kind_) {
        case Kind::Empty: return "empty";
        case Kind::AllNaturals: return "nat";
        case Kind::Segment: {
            std::ostringstream os;
            os << '[' << data_[0] << ',' << data_[1] << ']';
            return os.str();
        }
        case Kind::Finite: {
            std::ostringstream os;
            os << '{';
            for (std::size_t i = 0; i < data_.size(); ++i) {
                if (i) os << ',';
                os << data_[i];
            }
            os << '}';
            return os.str();
        }
    }
    return {};
}

bool operator==(const DegreeSet& a, const DegreeSet& b) {
    if (a.kind_ == b.kind_) return a.data_ == b.data_;
    // A contiguous Finite set and the matching Segment denote the same set.
    if (a.is_segment_shaped() && b.is_segment_shaped() &&
        a.kind_ != DegreeSet::Kind::Empty && b.kind_ != DegreeSet::Kind::Empty &&
        a.kind_ != DegreeSet::Kind::AllNaturals && b.kind_ != DegreeSet::Kind::AllNaturals)
        return a.min() == b.min() && a.max() == b.max();
    return false;
}

namespace {

std::string lowered(const std::string& text) {
    std::string out;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    return out;
}

std::uint64_t parse_u64(const std::string& token) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("DegreeSet::parse: bad integer '" + token + "'");
    return std::stoull(token);
}

std::vector<std::uint64_t> split_ints(const std::string& body) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, ',')) out.push_back(parse_u64(token));
    return out;
}

}  // namespace

DegreeSet DegreeSet::parse(const std::string& text) {
    const std::string s = lowered(text);
    if (s == "empty") return DegreeSet::empty();
    if (s == "nat" || s == "n") return DegreeSet::naturals();
    if (s.size() >= 2 && s.front() == '{' && s.back() == '}') {
        const std::string body = s.substr(1, s.size() - 2);
        if (body.empty()) return DegreeSet::empty();
        return DegreeSet::finite(split_ints(body));
    }
    if (s.size() >= 2 && s.front() == '[' && s.back() == ']') {
        const auto parts = split_ints(s.substr(1, s.size() - 2));
        if (parts.size() != 2)
            throw std::invalid_argument("DegreeSet::parse: segment needs two bounds: " + text);
        return DegreeSet::segment(parts[0], parts[1]);
    }
    throw std::invalid_argument("DegreeSet::parse: unrecognized set syntax: " + text);
}

bool intersection_is_empty(const DegreeSet& a, const DegreeSet& b) {
    if (a.is_empty() || b.is_empty()) return true;
    if (a.is_naturals() || b.is_naturals()) return false;  // other side non-empty
    for (std::uint64_t k : a.values())
        if (b.contains(k)) return false;
    return true;
}

bool union_is_naturals(const DegreeSet& a, const DegreeSet& b) {
    // Every non-AllNaturals variant is bounded, so the union covers N iff one
    // side is N already.
    return a.is_naturals() || b.is_naturals();
}

std::optional<std::vector<std::uint64_t>> finite_intersection(const DegreeSet& a,
                                                              const DegreeSet& b) {
    if (a.is_empty() || b.is_empty()) return std::vector<std::uint64_t>{};
    if (a.is_naturals() && b.is_naturals()) return std::nullopt;
    const DegreeSet& bounded = a.is_naturals() ? b : a;
    const DegreeSet& other = a.is_naturals() ? a : b;
    std::vector<std::uint64_t> out;
    for (std::uint64_t k : bounded.values())
        if (other.contains(k)) out.push_back(k);
    return out;
}

RegimeLabel classify(const DegreeSet& ss, const DegreeSet& sc) {
    const bool ss_all = ss.is_naturals(), sc_all = sc.is_naturals();
    const bool ss_empty = ss.is_empty(), sc_empty = sc.is_empty();
    if (ss_all && sc_all) return RegimeLabel::all_all;
    if (ss_all && sc_empty) return RegimeLabel::all_empty;
    if (ss_all) return RegimeLabel::all_finite;
    if (ss_empty && sc_all) return RegimeLabel::empty_all;
    if (ss_empty && sc_empty) return RegimeLabel::empty_empty;
    if (ss_empty) return RegimeLabel::empty_finite;
    if (sc_all) return RegimeLabel::finite_all;
    if (sc_empty) return RegimeLabel::finite_empty;

    // General case: both sets non-empty, neither is N.
    if (ss == sc && ss.is_segment_shaped()) return RegimeLabel::general_equal_segments;
    const bool disjoint = intersection_is_empty(ss, sc);
    const bool covering = union_is_naturals(ss, sc);
    if (disjoint && covering) return RegimeLabel::general_partition;
    if (disjoint) return RegimeLabel::general_disjoint;
    if (covering) return RegimeLabel::general_covering;
    return RegimeLabel::general_uncovered;
}

std::string to_string(RegimeLabel label) {
    switch (label) {
        case RegimeLabel::all_all: return "all/all: sustainable, n_t = 2^t n0";
        case RegimeLabel::all_finite: return "all/finite: asymptotically non sustainable";
        case RegimeLabel::all_empty: return "all/empty: static, non sustainable";
        case RegimeLabel::finite_all: return "finite/all: sustainable";
        case RegimeLabel::finite_empty: return "finite/empty: non sustainable";
        case RegimeLabel::empty_all: return "empty/all: full renewal, sustainable";
        case RegimeLabel::empty_finite: return "empty/finite: depends on the parameters";
        case RegimeLabel::empty_empty: return "empty/empty: null at t=1";
        case RegimeLabel::finite_finite: return "general";
        case RegimeLabel::general_equal_segments: return "general: equal segments";
        case RegimeLabel::general_disjoint: return "general: disjoint sets";
        case RegimeLabel::general_covering: return "general: covering sets";
        case RegimeLabel::general_partition: return "general: partition";
        case RegimeLabel::general_uncovered: return "general: uncovered (no analytical result)";
    }
    return "?";
}

OrderMonotonicity predicted_order_monotonicity(const DegreeSet& ss, const DegreeSet& sc) {
    const bool disjoint = intersection_is_empty(ss, sc);
    const bool covering = union_is_naturals(ss, sc);
    if (disjoint && covering) return OrderMonotonicity::constant;
    if (disjoint) return OrderMonotonicity::non_increasing;
    if (covering) return OrderMonotonicity::non_decreasing;
    return OrderMonotonicity::unknown;
}

std::string to_string(OrderMonotonicity m) {
    switch (m) {
        case OrderMonotonicity::non_increasing: return "non-increasing";
        case OrderMonotonicity::non_decreasing: return "non-decreasing";
        case OrderMonotonicity::constant: return "constant";
        case OrderMonotonicity::unknown: return "unknown";
    }
    return "?";
}

}  // namespace d3g3
