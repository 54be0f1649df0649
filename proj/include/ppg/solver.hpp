#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "ppg/graph.hpp"
#include "ppg/placement.hpp"

namespace ppg {

using PinMap = std::map<PointId, Rational>;

// Brute-force point cap; the PPG_BRUTE_CAP env var overrides the default 24.
int brute_force_cap();

struct PlacementSet {
    std::vector<Placement> placements;  // sorted, deduplicated
    bool truncated = false;             // stopped at the result limit

    std::size_t size() const { return placements.size(); }
    bool empty() const { return placements.empty(); }
};

struct SolveOptions {
    int cap = -1;           // -1 uses brute_force_cap()
    std::size_t limit = 0;  // 0 = unlimited; otherwise stop once this many distinct results exist
    int root = -1;          // spanning-tree root override; -1 picks lowest id
};

// Every line placement with pairwise-distinct coordinates satisfying each
// edge length exactly, found by enumerating sign choices along a spanning
// tree and filtering on the remaining edges. Results are canonical
// (translation/reflection representatives) when no pins are given, literal
// otherwise. Throws UnderdeterminedGraphError when some point lies in a
// component with no pin (or the graph is disconnected and unpinned), and
// InstanceTooLargeError past the cap.
PlacementSet solve_all_placements(const Ppg& g, const PinMap& pinned = {},
                                  const SolveOptions& opt = {});

// True iff exactly one placement class exists.
bool is_line_rigid(const Ppg& g, int cap = -1);

}  // namespace ppg
