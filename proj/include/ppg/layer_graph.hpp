#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ppg/graph.hpp"
#include "ppg/placement.hpp"

namespace ppg {

enum class Axis { Horizontal, Vertical };

// An axis-parallel 2-D drawing of a ppg: each edge runs along its assigned
// axis with extent equal to its length, both axes occur, and the two
// fold-down maps x+y and x-y give distinct-coordinate placements that are
// not related by translation/reflection. Such a drawing is exactly a
// two-placement witness, so its existence certifies the graph is not
// line rigid.
struct LayerDrawing {
    std::vector<Axis> directions;                       // per edge index
    std::vector<std::pair<Rational, Rational>> coords;  // (x, y) per point

    Placement fold_sum() const;
    Placement fold_diff() const;
};

// Enumerates direction assignments and per-edge orientations, keeping
// drawings that satisfy all four layer properties; returns up to `limit`
// witnesses (0 = no limit). Requires a connected graph within the cap.
std::vector<LayerDrawing> enumerate_layer_drawings(const Ppg& g, std::size_t limit,
                                                   int cap = -1);

struct EquivalenceReport {
    bool rigid = false;
    bool has_drawing = false;
    bool consistent = false;  // rigid XOR has_drawing
};

// Runs both decision procedures on one graph and reports whether they agree.
EquivalenceReport check_rigidity_drawing_equivalence(const Ppg& g, int cap = -1);

}  // namespace ppg
