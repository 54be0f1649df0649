#include "ppg/solver.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <set>

#include "ppg/errors.hpp"

namespace ppg {

int brute_force_cap() {
    if (const char* env = std::getenv("PPG_BRUTE_CAP")) {
        int v = std::atoi(env);
        if (v > 0) {
            return v;
        }
    }
    return 24;
}

namespace {

struct VisitStep {
    PointId vertex;
    int parent = -1;        // -1 for sources
    Rational parent_len;    // tree edge length when parent >= 0
};

struct SearchState {
    const Ppg* g;
    std::vector<std::vector<std::pair<PointId, int>>> adj;
    std::vector<VisitStep> order;
    const PinMap* pins;
    bool canonical;          // canonicalize results (no pins given)
    std::size_t limit;
    std::vector<Rational> coords;
    std::vector<char> placed;
    std::set<Rational> occupied;
    std::set<Placement> results;
    bool truncated = false;
};

bool try_place(SearchState& st, std::size_t step);

bool place_and_recurse(SearchState& st, std::size_t step, const Rational& value) {
    PointId v = st.order[step].vertex;
    if (auto it = st.pins->find(v); it != st.pins->end() && it->second != value) {
        return true;  // prune, keep searching
    }
    if (st.occupied.count(value)) {
        return true;  // coordinate collision, prune
    }
    // every edge to an already-placed vertex must hold exactly
    for (auto [u, idx] : st.adj[v]) {
        if (st.placed[u] && abs(st.coords[u] - value) != st.g->edges()[idx].length) {
            return true;
        }
    }
    st.coords[v] = value;
    st.placed[v] = 1;
    st.occupied.insert(value);
    bool keep_going = try_place(st, step + 1);
    st.placed[v] = 0;
    st.occupied.erase(value);
    return keep_going;
}

// Returns false once the result limit is hit.
bool try_place(SearchState& st, std::size_t step) {
    if (step == st.order.size()) {
        Placement p{st.coords};
        st.results.insert(st.canonical ? canonicalize(p) : p);
        if (st.limit > 0 && st.results.size() >= st.limit) {
            st.truncated = true;
            return false;
        }
        return true;
    }
    const VisitStep& vs = st.order[step];
    if (vs.parent < 0) {
        Rational value = st.pins->count(vs.vertex) ? st.pins->at(vs.vertex) : Rational(0);
        return place_and_recurse(st, step, value);
    }
    const Rational& base = st.coords[vs.parent];
    if (!place_and_recurse(st, step, base + vs.parent_len)) {
        return false;
    }
    return place_and_recurse(st, step, base - vs.parent_len);
}

}  // namespace

PlacementSet solve_all_placements(const Ppg& g, const PinMap& pinned, const SolveOptions& opt) {
    int cap = opt.cap > 0 ? opt.cap : brute_force_cap();
    int n = g.n();
    if (n > cap) {
        throw InstanceTooLargeError("instance has " + std::to_string(n) +
                                    " points, brute-force cap is " + std::to_string(cap));
    }
    if (n == 0) {
        return PlacementSet{{Placement{}}, false};
    }
    for (const auto& [pid, coord] : pinned) {
        if (pid < 0 || pid >= n) {
            throw UnknownPointError("pinned point out of range");
        }
    }

    SearchState st;
    st.g = &g;
    st.adj = g.adjacency();
    st.pins = &pinned;
    st.canonical = pinned.empty();
    st.limit = opt.limit;
    st.coords.assign(n, Rational(0));
    st.placed.assign(n, 0);

    // Multi-source BFS: sources are the pinned vertices, or the root when
    // nothing is pinned. Every vertex must be reachable from a source.
    std::vector<char> seen(n, 0);
    std::queue<PointId> work;
    auto push_source = [&](PointId v) {
        if (!seen[v]) {
            seen[v] = 1;
            st.order.push_back(VisitStep{v, -1, Rational(0)});
            work.push(v);
        }
    };
    if (pinned.empty()) {
        PointId root = (opt.root >= 0 && opt.root < n) ? opt.root : 0;
        push_source(root);
    } else {
        for (const auto& [pid, coord] : pinned) {
            push_source(pid);
        }
    }
    while (!work.empty()) {
        PointId v = work.front();
        work.pop();
        for (auto [u, idx] : st.adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                st.order.push_back(VisitStep{u, v, g.edges()[idx].length});
                work.push(u);
            }
        }
    }
    if (static_cast<int>(st.order.size()) != n) {
        throw UnderdeterminedGraphError(
            "graph has points unreachable from any pinned point");
    }

    try_place(st, 0);

    PlacementSet out;
    out.placements.assign(st.results.begin(), st.results.end());
    out.truncated = st.truncated;
    return out;
}

bool is_line_rigid(const Ppg& g, int cap) {
    SolveOptions opt;
    opt.cap = cap;
    opt.limit = 2;
    return solve_all_placements(g, {}, opt).size() == 1;
}

}  // namespace ppg
