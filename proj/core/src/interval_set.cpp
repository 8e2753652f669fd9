#include "evidence/interval_set.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace evidence {

void IntervalSet::add(double lo, double hi) {
    if (std::isnan(lo) || std::isnan(hi) || !(lo < hi)) {
        throw std::domain_error("IntervalSet::add: need lo < hi");
    }
    auto it = std::lower_bound(parts_.begin(), parts_.end(), lo,
                               [](const Interval& iv, double v) { return iv.hi < v; });
    // `it` is the first piece that ends at or after lo; absorb everything
    // that starts at or before hi.
    auto last = it;
    while (last != parts_.end() && last->lo <= hi) {
        lo = std::min(lo, last->lo);
        hi = std::max(hi, last->hi);
        ++last;
    }
    it = parts_.erase(it, last);
    parts_.insert(it, Interval{lo, hi});
}

bool IntervalSet::contains(double x) const noexcept {
    auto it = std::upper_bound(parts_.begin(), parts_.end(), x,
                               [](double v, const Interval& iv) { return v < iv.lo; });
    if (it == parts_.begin()) return false;
    --it;
    return x >= it->lo && x < it->hi;
}

bool IntervalSet::subset_of(const IntervalSet& other) const noexcept {
    for (const auto& iv : parts_) {
        auto it = std::upper_bound(other.parts_.begin(), other.parts_.end(), iv.lo,
                                   [](double v, const Interval& o) { return v < o.lo; });
        if (it == other.parts_.begin()) return false;
        --it;
        if (iv.lo < it->lo || iv.hi > it->hi) return false;
    }
    return true;
}

double IntervalSet::total_length() const noexcept {
    double sum = 0.0;
    for (const auto& iv : parts_) sum += iv.hi - iv.lo;
    return sum;
}

}  // namespace evidence
