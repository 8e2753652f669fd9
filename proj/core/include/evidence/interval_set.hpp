#pragma once

#include <cstddef>
#include <vector>

namespace evidence {

/// Half-open interval [lo, hi).
struct Interval {
    double lo;
    double hi;
    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Sorted, pairwise-disjoint union of half-open intervals.
///
/// add() merges touching or overlapping pieces, so a run of adjacent grid
/// cells collapses into one interval.
class IntervalSet {
public:
    IntervalSet() = default;

    void add(double lo, double hi);

    bool empty() const noexcept { return parts_.empty(); }
    std::size_t size() const noexcept { return parts_.size(); }
    const Interval& operator[](std::size_t i) const { return parts_[i]; }
    const std::vector<Interval>& parts() const noexcept { return parts_; }
    auto begin() const noexcept { return parts_.begin(); }
    auto end() const noexcept { return parts_.end(); }

    bool contains(double x) const noexcept;
    bool subset_of(const IntervalSet& other) const noexcept;
    double total_length() const noexcept;

    friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

private:
    std::vector<Interval> parts_;
};

}  // namespace evidence
