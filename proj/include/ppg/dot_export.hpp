#pragma once

#include <optional>
#include <string>

#include "ppg/graph.hpp"
#include "ppg/layer_graph.hpp"
#include "ppg/placement.hpp"

namespace ppg {

// Deterministic DOT text: round-1 edges solid, round-2 dashed, lengths as
// labels. When a placement is supplied, nodes carry pinned positions.
std::string export_dot(const Ppg& g, const std::optional<Placement>& placement = {});

// One layer drawing as DOT; edges carry their axis and nodes their 2-D
// grid position.
std::string export_drawing_dot(const Ppg& g, const LayerDrawing& drawing);

}  // namespace ppg
