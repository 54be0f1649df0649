#pragma once

#include <array>
#include <string>
#include <vector>

#include "ppg/graph.hpp"
#include "ppg/rational.hpp"

namespace ppg {

// A node is heavy when its degree is at least 3.
constexpr int kHeavyDegree = 3;

// A maximal chain of degree-2 nodes between two non-degree-2 anchors. A
// length-0 entry is a bare edge whose endpoints are both anchors. Components
// that are pure cycles of degree-2 nodes are reported with is_cycle set and
// no anchors.
struct Degree2Path {
    std::vector<PointId> nodes;       // the degree-2 interior, in path order
    PointId anchor_front = -1;
    PointId anchor_back = -1;
    int anchor_front_degree = 0;
    int anchor_back_degree = 0;
    bool is_cycle = false;
    std::vector<int> edge_rounds;     // per edge along the path, anchors included

    int length() const { return static_cast<int>(nodes.size()); }
};

// All maximal degree-2 paths of the chosen round view (1 = first-round
// graph, 2 = full graph), plus bare anchor-anchor edges as length-0 paths.
std::vector<Degree2Path> extract_degree2_paths(const Ppg& g, int round_view);

struct PathBoundReport {
    bool ok = false;
    int max_length = 0;
    std::vector<Degree2Path> offending;
};

// The two-round survival bound: every maximal degree-2 path of the final
// graph has at most 3 nodes, and any such path containing a second-round
// edge has at most 2 consecutive first-round edges.
PathBoundReport check_degree2_path_bound(const Ppg& g2);

// One adversarial length recipe on the 6-cycle p0..p5 with exactly two
// consistent placements. rounds[i] / lengths[i] describe edge (p_i, p_{i+1
// mod 6}); the five path edges p0p1..p4p5 realize the stated round pattern
// around a degree-2 path of four nodes.
struct AttackPattern {
    std::array<int, 5> path_rounds;   // rounds of p0p1, p1p2, p2p3, p3p4, p4p5
    std::array<int, 6> cycle_rounds;  // rounds including the closing edge p5p0
    std::array<Rational, 6> lengths;  // p0p1, p1p2, p2p3, p3p4, p4p5, p5p0
    std::string note;

    Ppg cycle_graph() const;  // the 6-cycle instance
};

// The five round patterns a surviving 4-node degree-2 path could have, each
// with a concrete two-placement recipe.
std::vector<AttackPattern> attack_table();

struct DensityGroup {
    std::string kind;              // "anchored-path", "heavy", "other"
    std::vector<PointId> members;  // nodes contributing (possibly fractional) mass
    Rational node_mass;
    Rational edge_mass;

    Rational density() const;
};

struct DensityReport {
    long node_count = 0;
    long edge_count = 0;
    Rational density;  // |E| / |V|
    std::vector<DensityGroup> groups;
};

// Exact edge/node density plus a per-neighborhood breakdown with half-edge
// accounting: an edge bridging two groups contributes 1/2 to each, and the
// group masses always sum back to |E| and |V| exactly.
DensityReport density(const Ppg& g);

// Worked neighborhood averages. For a first-round anchored degree-2 path of
// k nodes: (1/k)(2*(1/2) + (k-1) + floor((k+1)/3)*(1/2)).
Rational anchored_path_group_density(int k);
// For a heavy node with three attached degree-2 paths totaling m nodes:
// (m+3)/(m+2) = 1 + 1/(m+2).
Rational heavy_group_density(int m);

}  // namespace ppg
