#include "ppg/layer_graph.hpp"

#include <queue>
#include <set>

#include "ppg/errors.hpp"
#include "ppg/solver.hpp"

namespace ppg {

Placement LayerDrawing::fold_sum() const {
    Placement p;
    p.coords.reserve(coords.size());
    for (const auto& [x, y] : coords) {
        p.coords.push_back(x + y);
    }
    return p;
}

Placement LayerDrawing::fold_diff() const {
    Placement p;
    p.coords.reserve(coords.size());
    for (const auto& [x, y] : coords) {
        p.coords.push_back(x - y);
    }
    return p;
}

namespace {

constexpr std::size_t kMaxEnumEdges = 24;

struct DrawState {
    const Ppg* g;
    std::vector<std::vector<std::pair<PointId, int>>> adj;
    std::vector<int> order_vertex;
    std::vector<int> order_parent_edge;  // edge index into g->edges(), -1 for root
    std::vector<Axis> axes;
    std::vector<std::pair<Rational, Rational>> coords;
    std::vector<char> placed;
    std::set<std::pair<Rational, Rational>> occupied;
    std::vector<LayerDrawing>* out;
    std::size_t limit;
};

bool fold_check(const DrawState& st, LayerDrawing& d) {
    Placement a = d.fold_sum();
    Placement b = d.fold_diff();
    if (!all_distinct(a.coords) || !all_distinct(b.coords)) {
        return false;
    }
    return canonicalize(a) != canonicalize(b);
}

bool edge_ok(const DrawState& st, int edge_idx, const std::pair<Rational, Rational>& p,
             const std::pair<Rational, Rational>& q) {
    const Rational& len = st.g->edges()[edge_idx].length;
    if (st.axes[edge_idx] == Axis::Horizontal) {
        return p.second == q.second && abs(p.first - q.first) == len;
    }
    return p.first == q.first && abs(p.second - q.second) == len;
}

// Returns false once the limit is reached.
bool extend(DrawState& st, std::size_t step) {
    if (step == st.order_vertex.size()) {
        LayerDrawing d{st.axes, st.coords};
        if (fold_check(st, d)) {
            st.out->push_back(std::move(d));
            if (st.limit > 0 && st.out->size() >= st.limit) {
                return false;
            }
        }
        return true;
    }
    PointId v = st.order_vertex[step];
    int pedge = st.order_parent_edge[step];

    auto attempt = [&](const std::pair<Rational, Rational>& pos) {
        if (st.occupied.count(pos)) {
            return true;  // coincident vertices can never fold apart
        }
        for (auto [u, idx] : st.adj[v]) {
            if (st.placed[u] && !edge_ok(st, idx, pos, st.coords[u])) {
                return true;
            }
        }
        st.coords[v] = pos;
        st.placed[v] = 1;
        st.occupied.insert(pos);
        bool cont = extend(st, step + 1);
        st.placed[v] = 0;
        st.occupied.erase(pos);
        return cont;
    };

    if (pedge < 0) {
        return attempt({Rational(0), Rational(0)});
    }
    const QueryEdge& e = st.g->edges()[pedge];
    PointId parent = (st.placed[e.a]) ? e.a : e.b;
    const auto& base = st.coords[parent];
    const Rational& len = e.length;
    if (st.axes[pedge] == Axis::Horizontal) {
        if (!attempt({base.first + len, base.second})) return false;
        return attempt({base.first - len, base.second});
    }
    if (!attempt({base.first, base.second + len})) return false;
    return attempt({base.first, base.second - len});
}

}  // namespace

std::vector<LayerDrawing> enumerate_layer_drawings(const Ppg& g, std::size_t limit, int cap) {
    int effective_cap = cap > 0 ? cap : brute_force_cap();
    if (g.n() > effective_cap) {
        throw InstanceTooLargeError("drawing enumeration past the point cap");
    }
    if (g.edge_count() > kMaxEnumEdges) {
        throw InstanceTooLargeError("drawing enumeration past the edge cap");
    }
    if (!g.connected()) {
        throw UnderdeterminedGraphError("drawing enumeration needs a connected graph");
    }

    std::vector<LayerDrawing> out;
    std::size_t m = g.edge_count();
    if (m < 2 || g.n() < 2) {
        return out;  // both directions can never occur
    }

    DrawState st;
    st.g = &g;
    st.adj = g.adjacency();
    st.coords.assign(g.n(), {Rational(0), Rational(0)});
    st.placed.assign(g.n(), 0);
    st.out = &out;
    st.limit = limit;

    // BFS order with parent edges, fixed across masks.
    std::vector<char> seen(g.n(), 0);
    std::queue<PointId> work;
    seen[0] = 1;
    st.order_vertex.push_back(0);
    st.order_parent_edge.push_back(-1);
    work.push(0);
    while (!work.empty()) {
        PointId v = work.front();
        work.pop();
        for (auto [u, idx] : st.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                st.order_vertex.push_back(u);
                st.order_parent_edge.push_back(idx);
                work.push(u);
            }
        }
    }

    const std::size_t all_vertical = (std::size_t{1} << m) - 1;
    for (std::size_t mask = 0; mask <= all_vertical; ++mask) {
        if (mask == 0 || mask == all_vertical) {
            continue;  // every edge along one axis
        }
        st.axes.assign(m, Axis::Horizontal);
        for (std::size_t i = 0; i < m; ++i) {
            if (mask & (std::size_t{1} << i)) {
                st.axes[i] = Axis::Vertical;
            }
        }
        if (!extend(st, 0)) {
            break;
        }
    }
    return out;
}

EquivalenceReport check_rigidity_drawing_equivalence(const Ppg& g, int cap) {
    EquivalenceReport rep;
    rep.rigid = is_line_rigid(g, cap);
    rep.has_drawing = !enumerate_layer_drawings(g, 1, cap).empty();
    rep.consistent = rep.rigid != rep.has_drawing;
    return rep;
}

}  // namespace ppg
