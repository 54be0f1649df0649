#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ppg/rational.hpp"

namespace ppg {

// Dense point index in [0, n).
using PointId = int;

struct QueryEdge {
    PointId a = 0;  // normalized so a < b
    PointId b = 0;
    int round = 1;  // 1 or 2
    Rational length;
};

enum class NodeRole { Core, Leaf, LinkArm, LinkHub };

// Point placement graph: n points on a line, each edge carrying the queried
// distance between its endpoints and the round the query was issued in.
class Ppg {
public:
    Ppg() = default;
    explicit Ppg(int n) : n_(n) {}

    int n() const { return n_; }
    void set_n(int n);

    const std::vector<QueryEdge>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    // Rejects self-loops, duplicate pairs, non-positive lengths, bad rounds.
    void add_edge(PointId a, PointId b, int round, const Rational& length);

    bool has_edge(PointId a, PointId b) const;
    const QueryEdge* find_edge(PointId a, PointId b) const;

    // round = 1 keeps first-round edges only; round = 2 keeps everything.
    Ppg round_view(int round) const;

    std::vector<int> degrees() const;
    // Per vertex: (neighbor, edge index), sorted by neighbor.
    std::vector<std::vector<std::pair<PointId, int>>> adjacency() const;
    bool connected() const;

    std::map<PointId, NodeRole>& roles() { return roles_; }
    const std::map<PointId, NodeRole>& roles() const { return roles_; }

private:
    int n_ = 0;
    std::vector<QueryEdge> edges_;
    std::map<std::pair<PointId, PointId>, int> index_;
    std::map<PointId, NodeRole> roles_;
};

}  // namespace ppg
