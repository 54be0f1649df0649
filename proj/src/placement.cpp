#include "ppg/placement.hpp"

#include <algorithm>

#include "ppg/errors.hpp"

namespace ppg {

bool Placement::operator<(const Placement& o) const {
    return std::lexicographical_compare(coords.begin(), coords.end(),
                                        o.coords.begin(), o.coords.end());
}

bool all_distinct(const std::vector<Rational>& coords) {
    std::vector<Rational> sorted = coords;
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

Placement canonicalize(const std::vector<Rational>& raw) {
    if (raw.empty()) {
        return Placement{};
    }
    if (!all_distinct(raw)) {
        throw DuplicateCoordinateError("two points share a coordinate");
    }
    Rational lo = raw[0], hi = raw[0];
    for (const auto& x : raw) {
        if (x < lo) lo = x;
        if (x > hi) hi = x;
    }
    std::vector<Rational> shifted(raw.size()), reflected(raw.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        shifted[i] = raw[i] - lo;
        reflected[i] = hi - raw[i];
    }
    bool keep_shifted = !std::lexicographical_compare(reflected.begin(), reflected.end(),
                                                      shifted.begin(), shifted.end());
    return Placement{keep_shifted ? std::move(shifted) : std::move(reflected)};
}

bool same_up_to_motion(const Placement& a, const Placement& b) {
    if (a.coords.size() != b.coords.size()) {
        return false;
    }
    return canonicalize(a) == canonicalize(b);
}

}  // namespace ppg
