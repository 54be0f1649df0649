#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "ppg/conditions.hpp"
#include "ppg/graph.hpp"
#include "ppg/oracle.hpp"
#include "ppg/placement.hpp"

namespace ppg {

// Point layout of the full two-round construction on n = 245b + 4419 points:
// a 35-point core fixed in round one by six jewel gadgets on a shared strut
// plus three strut triangles, 3b + 124 leaves per core point, and 35b + 11
// four-point link groups (three arm points around a hub).
struct RoundOnePlan {
    long b = 0;
    long n = 0;                 // 245b + 4419
    long leaves_per_point = 0;  // 3b + 124
    long link_groups = 0;       // 35b + 11

    static constexpr int kCorePoints = 35;
    static constexpr int kCoreEdges = 55;

    PointId core_point(int i) const { return i; }
    PointId leaf_point(int core, long leaf) const;
    PointId link_point(long group, int slot) const;  // slots 0..2 arms, 3 hub

    // Deterministic batch: core edges, then leaf edges hub-major, then the
    // three arm-hub edges per link group.
    std::vector<std::pair<PointId, PointId>> round1_pairs() const;

    long round1_query_count() const { return 210 * b + 4428; }
    long round2_query_count() const { return 105 * b + 2187; }
    long total_query_count() const { return 315 * b + 6615; }
};

RoundOnePlan build_round1_plan(long b);

// The 55 core edges over local points 0..34. Points 0 and 1 are the strut;
// jewel j owns points 2+5j .. 6+5j; 32..34 are the triangle points. Each
// jewel hangs a triangle point and two four-cycles off the strut, which the
// brute-force check certifies rigid for the answered lengths.
const std::vector<std::pair<int, int>>& core_topology();
Ppg make_core_graph();  // unit lengths, round 1

// Recovers the 35 core coordinates exactly from the answered lengths
// (aligned with core_topology()), strut pinned at 0. Throws
// CoreNotRigidError when any gadget admits zero or several layouts.
std::vector<Rational> solve_core(const std::vector<Rational>& core_lengths);

// Components attached per core point, with the running spread check.
struct ValenceState {
    std::vector<int> valence;
    int max_spread_seen = 0;

    explicit ValenceState(int points) : valence(points, 0) {}
    void attach(int p1, int p2, int p3);
    int spread() const;
    std::vector<std::vector<int>> buckets() const;  // index d -> points of valence d
};

struct Triplet {
    int p1 = -1;
    int p2 = -1;
    int p3 = -1;
};

// Lowest-valence-first selection subject to the three gap avoidance lists,
// ties broken by lowest point id.
Triplet select_triplet(const ValenceState& valence, const std::vector<Rational>& core_coords,
                       const Rational& r1s, const Rational& r2s, const Rational& r3s);

// Lowest-id unused leaf at a hub whose answered length avoids every expanded
// value of the given avoidance list (serial 4, 5 or 6); `partial` must carry
// the lengths those lists reference.
long select_leaf_edge(int serial, const std::vector<Rational>& leaf_lengths,
                      const std::vector<char>& leaf_used, const ThreePathLengths& partial);

// 10-point component graph (local ids p1 p2 p3 q1 q2 q3 r1 r2 r3 s) with the
// three fixed gaps included as round-1 edges.
Ppg make_component_graph(const ThreePathLengths& lengths);

// Exact coordinate of the point at distance la from a and lb from b (a != b);
// throws VerificationError unless exactly one position works.
Rational solve_two_anchor(const Rational& a, const Rational& la, const Rational& b,
                          const Rational& lb);

// The unique placement of a bridged leaf pair: |qa-xa|=la, |qb-xb|=lb,
// |qa-qb|=bridge, all four points distinct.
std::pair<Rational, Rational> solve_bridged_pair(const Rational& xa, const Rational& la,
                                                 const Rational& xb, const Rational& lb,
                                                 const Rational& bridge);

// Cross-hub pairing of leftover leaves: repeatedly matches the two fullest
// hubs, skipping partners whose length ties the four-cycle condition and
// swapping with an earlier pair when every remaining partner is tied.
struct LeafPairing {
    // hub_a, leaf_a, hub_b, leaf_b
    std::vector<std::array<long, 4>> pairs;
    // whatever could not be paired across hubs (normally at most one entry)
    std::vector<std::array<long, 2>> leftovers;
};
LeafPairing pair_leftover_leaves(const std::vector<std::vector<long>>& unused_by_hub,
                                 const std::vector<std::vector<Rational>>& leaf_lengths);

struct AlgorithmReport {
    std::string algorithm;
    long n = 0;
    long b = 0;
    long round1_queries = 0;
    long round2_queries = 0;
    long total_queries = 0;
    long expected_round1 = 0;
    long expected_round2 = 0;
    long expected_total = 0;
    long component_count = 0;
    long padding_points = 0;
    long padding_queries = 0;
    int max_valence_spread = 0;
    std::vector<int> final_valences;
    bool verified = false;
    Placement placement;
};

std::string report_to_json(const AlgorithmReport& report);

// The full two-round run: plan, query, schedule, assemble, and recover every
// coordinate exactly. Points beyond the plan size (oracle.point_count() may
// exceed 245b + 4419) are padded with two-anchor queries in round two and
// reported separately. With `verify` set the recovered placement is compared
// against the oracle's hidden positions up to translation/reflection.
AlgorithmReport run_two_round(Oracle& oracle, long b, bool verify = true);

// One-round baseline: an edge plus two distances per remaining point, 2n-3
// queries total.
AlgorithmReport run_triangle_baseline(Oracle& oracle, long n, bool verify = true);

// Two-round baseline via bridged four-cycles on two hubs, about 3n/2 queries.
AlgorithmReport run_quadrilateral_baseline(Oracle& oracle, long n, bool verify = true);

}  // namespace ppg
