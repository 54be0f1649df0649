#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ppg/graph.hpp"

namespace ppg {

// Connected graphs on 1..max_n vertices, one representative per isomorphism
// class, as edge skeletons (unit lengths, round 1). max_n <= 7.
std::vector<Ppg> connected_graph_atlas(int max_n);

struct AtlasResult {
    long graphs_checked = 0;
    long samples_per_graph = 0;
    long inconsistencies = 0;
    std::vector<std::string> failures;  // one line per disagreeing case
};

// Sweeps every atlas graph with realizable random lengths (sampled by
// placing points first and reading lengths off) and cross-checks the
// rigidity decision against layer-drawing existence.
AtlasResult run_atlas(int max_n, int samples_per_graph, std::uint64_t seed);

}  // namespace ppg
