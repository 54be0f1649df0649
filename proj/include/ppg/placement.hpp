#pragma once

#include <vector>

#include "ppg/graph.hpp"
#include "ppg/rational.hpp"

namespace ppg {

// An assignment of line coordinates to points 0..n-1.
struct Placement {
    std::vector<Rational> coords;

    bool operator==(const Placement& o) const { return coords == o.coords; }
    bool operator!=(const Placement& o) const { return !(*this == o); }
    bool operator<(const Placement& o) const;
};

// The canonical representative of a placement's translation/reflection class:
// the minimum coordinate is 0, and between the translated placement and its
// reflection the lexicographically smaller coordinate vector (by point id)
// is kept. Throws DuplicateCoordinateError if two coordinates coincide.
Placement canonicalize(const std::vector<Rational>& raw);

inline Placement canonicalize(const Placement& p) { return canonicalize(p.coords); }

// True when the two placements are equal up to translation and reflection.
bool same_up_to_motion(const Placement& a, const Placement& b);

bool all_distinct(const std::vector<Rational>& coords);

}  // namespace ppg
