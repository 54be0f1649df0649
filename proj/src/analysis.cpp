#include "ppg/analysis.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "ppg/errors.hpp"

namespace ppg {

namespace {

struct Walk {
    std::vector<PointId> nodes;  // degree-2 nodes passed, in order
    std::vector<int> edge_rounds;
    PointId terminal = -1;       // anchor reached, or the start for a cycle
    bool cycle = false;
};

Walk walk_chain(const Ppg& view, const std::vector<int>& deg,
                const std::vector<std::vector<std::pair<PointId, int>>>& adj,
                PointId start, PointId first) {
    Walk w;
    PointId prev = start;
    PointId cur = first;
    {
        const QueryEdge* e = view.find_edge(start, first);
        w.edge_rounds.push_back(e->round);
    }
    while (deg[cur] == 2 && cur != start) {
        w.nodes.push_back(cur);
        PointId next = adj[cur][0].first == prev ? adj[cur][1].first : adj[cur][0].first;
        w.edge_rounds.push_back(view.find_edge(cur, next)->round);
        prev = cur;
        cur = next;
    }
    w.terminal = cur;
    w.cycle = (cur == start);
    return w;
}

}  // namespace

std::vector<Degree2Path> extract_degree2_paths(const Ppg& g, int round_view) {
    Ppg view = g.round_view(round_view);
    auto deg = view.degrees();
    auto adj = view.adjacency();
    std::vector<char> used(view.n(), 0);
    std::vector<Degree2Path> out;

    for (PointId v = 0; v < view.n(); ++v) {
        if (deg[v] != 2 || used[v]) {
            continue;
        }
        Walk fwd = walk_chain(view, deg, adj, v, adj[v][1].first);
        Degree2Path path;
        if (fwd.cycle) {
            path.is_cycle = true;
            path.nodes.push_back(v);
            path.nodes.insert(path.nodes.end(), fwd.nodes.begin(), fwd.nodes.end());
            path.edge_rounds = fwd.edge_rounds;
        } else {
            Walk back = walk_chain(view, deg, adj, v, adj[v][0].first);
            path.nodes.assign(back.nodes.rbegin(), back.nodes.rend());
            path.nodes.push_back(v);
            path.nodes.insert(path.nodes.end(), fwd.nodes.begin(), fwd.nodes.end());
            path.edge_rounds.assign(back.edge_rounds.rbegin(), back.edge_rounds.rend());
            path.edge_rounds.insert(path.edge_rounds.end(), fwd.edge_rounds.begin(),
                                    fwd.edge_rounds.end());
            path.anchor_front = back.terminal;
            path.anchor_back = fwd.terminal;
            path.anchor_front_degree = deg[back.terminal];
            path.anchor_back_degree = deg[fwd.terminal];
        }
        for (PointId u : path.nodes) {
            used[u] = 1;
        }
        out.push_back(std::move(path));
    }

    // bare edges between two anchors count as length-0 paths
    for (const auto& e : view.edges()) {
        if (deg[e.a] != 2 && deg[e.b] != 2) {
            Degree2Path path;
            path.anchor_front = e.a;
            path.anchor_back = e.b;
            path.anchor_front_degree = deg[e.a];
            path.anchor_back_degree = deg[e.b];
            path.edge_rounds = {e.round};
            out.push_back(std::move(path));
        }
    }
    return out;
}

PathBoundReport check_degree2_path_bound(const Ppg& g2) {
    PathBoundReport rep;
    rep.ok = true;
    for (auto& path : extract_degree2_paths(g2, 2)) {
        if (path.is_cycle) {
            continue;  // pure cycles are a different defect, reported elsewhere
        }
        rep.max_length = std::max(rep.max_length, path.length());
        bool bad = path.length() > 3;
        bool has_round2 = std::any_of(path.edge_rounds.begin(), path.edge_rounds.end(),
                                      [](int r) { return r == 2; });
        if (has_round2) {
            int run = 0;
            for (int r : path.edge_rounds) {
                run = (r == 1) ? run + 1 : 0;
                if (run > 2) {
                    bad = true;
                    break;
                }
            }
        }
        if (bad) {
            rep.ok = false;
            rep.offending.push_back(std::move(path));
        }
    }
    return rep;
}

Ppg AttackPattern::cycle_graph() const {
    Ppg g(6);
    for (int i = 0; i < 6; ++i) {
        g.add_edge(i, (i + 1) % 6, cycle_rounds[i], lengths[i]);
    }
    return g;
}

std::vector<AttackPattern> attack_table() {
    std::vector<AttackPattern> out;
    auto add = [&out](std::array<int, 5> path_rounds, std::array<Rational, 6> lengths,
                      std::string note) {
        AttackPattern p;
        p.path_rounds = path_rounds;
        p.cycle_rounds = {path_rounds[0], path_rounds[1], path_rounds[2],
                          path_rounds[3], path_rounds[4], 1};
        p.lengths = std::move(lengths);
        p.note = std::move(note);
        out.push_back(std::move(p));
    };

    add({2, 1, 2, 1, 1}, {5, 2, 3, 2, 7, 5},
        "second-round edges chosen so the anchor gap equals |p1p2|+|p2p3| and "
        "|p0p1| equals |p4p5|-|p3p4|");
    add({2, 1, 1, 2, 1}, {7, 1, 3, 7, 1, 5},
        "both second-round edges set to the same rung length");
    add({1, 2, 1, 2, 1}, {7, 9, 3, 9, 1, 5},
        "the two second-round edges form equal rungs three apart");
    add({1, 1, 2, 2, 1}, {2, 5, 9, 6, 1, 9},
        "second-round rung matched to the closing edge");
    add({1, 1, 2, 1, 1}, {2, 1, 9, 1, 3, 4},
        "equal-length first-round edges around a second-round edge equal to "
        "the sum of the remaining three");
    return out;
}

Rational DensityGroup::density() const {
    if (node_mass.is_zero()) {
        return Rational(0);
    }
    return edge_mass / node_mass;
}

namespace {

struct Assignment {
    // group index -> fraction; fractions over all groups sum to 1 per node
    std::vector<std::pair<int, Rational>> shares;
};

}  // namespace

DensityReport density(const Ppg& g) {
    DensityReport rep;
    rep.node_count = g.n();
    rep.edge_count = static_cast<long>(g.edge_count());
    rep.density = g.n() > 0 ? Rational(rep.edge_count) / Rational(rep.node_count) : Rational(0);

    Ppg g1 = g.round_view(1);
    auto deg1 = g1.degrees();
    auto deg2 = g.degrees();
    auto adj = g.adjacency();

    std::vector<DensityGroup> groups;
    std::vector<Assignment> assign(g.n());
    std::vector<char> assigned(g.n(), 0);

    // first-round anchored paths: interior of a maximal degree-2 path in the
    // first-round graph, length >= 2, both anchors heavy there
    for (const auto& path : extract_degree2_paths(g, 1)) {
        if (path.is_cycle || path.length() < 2) {
            continue;
        }
        if (path.anchor_front_degree < kHeavyDegree || path.anchor_back_degree < kHeavyDegree) {
            continue;
        }
        int gid = static_cast<int>(groups.size());
        DensityGroup grp;
        grp.kind = "anchored-path";
        grp.members = path.nodes;
        groups.push_back(std::move(grp));
        for (PointId u : path.nodes) {
            assign[u].shares = {{gid, Rational(1)}};
            assigned[u] = 1;
        }
    }

    // heavy nodes of the final graph anchor their own neighborhoods
    for (PointId v = 0; v < g.n(); ++v) {
        if (!assigned[v] && deg2[v] >= kHeavyDegree) {
            int gid = static_cast<int>(groups.size());
            DensityGroup grp;
            grp.kind = "heavy";
            grp.members = {v};
            groups.push_back(std::move(grp));
            assign[v].shares = {{gid, Rational(1)}};
            assigned[v] = 1;
        }
    }

    // remaining nodes have final degree <= 2; each connected cluster of them
    // is a path or cycle whose boundary touches at most two assigned groups
    std::vector<char> seen(g.n(), 0);
    for (PointId v = 0; v < g.n(); ++v) {
        if (assigned[v] || seen[v]) {
            continue;
        }
        std::vector<PointId> cluster;
        std::vector<int> boundary;  // group ids reachable by one edge
        std::queue<PointId> work;
        work.push(v);
        seen[v] = 1;
        while (!work.empty()) {
            PointId u = work.front();
            work.pop();
            cluster.push_back(u);
            for (auto [w, idx] : adj[u]) {
                if (assigned[w]) {
                    boundary.push_back(assign[w].shares[0].first);
                } else if (!seen[w]) {
                    seen[w] = 1;
                    work.push(w);
                }
            }
        }
        std::sort(boundary.begin(), boundary.end());
        std::sort(cluster.begin(), cluster.end());

        std::vector<std::pair<int, Rational>> shares;
        if (boundary.empty()) {
            int gid = static_cast<int>(groups.size());
            DensityGroup grp;
            grp.kind = "other";
            grp.members = cluster;
            groups.push_back(std::move(grp));
            shares = {{gid, Rational(1)}};
        } else if (boundary.size() == 1 || boundary.front() == boundary.back()) {
            shares = {{boundary.front(), Rational(1)}};
        } else {
            int ga = boundary[0];
            int gb = boundary[1];
            const std::string& ka = groups[ga].kind;
            const std::string& kb = groups[gb].kind;
            if (ka == "anchored-path" && kb != "anchored-path") {
                shares = {{gb, Rational(1)}};  // whole chain counts to the heavy side
            } else if (kb == "anchored-path" && ka != "anchored-path") {
                shares = {{ga, Rational(1)}};
            } else {
                shares = {{ga, Rational(1, 2)}, {gb, Rational(1, 2)}};
            }
        }
        for (PointId u : cluster) {
            assign[u].shares = shares;
            assigned[u] = 1;
            bool already = false;
            for (auto& [gid, frac] : shares) {
                if (!already) {
                    groups[gid].members.push_back(u);
                }
                already = true;  // list each member once, under its first group
            }
        }
    }

    // masses: each node adds its share; each edge adds half per endpoint share
    for (auto& grp : groups) {
        grp.node_mass = Rational(0);
        grp.edge_mass = Rational(0);
    }
    for (PointId v = 0; v < g.n(); ++v) {
        for (const auto& [gid, frac] : assign[v].shares) {
            groups[gid].node_mass += frac;
        }
    }
    const Rational half(1, 2);
    for (const auto& e : g.edges()) {
        for (const auto& [gid, frac] : assign[e.a].shares) {
            groups[gid].edge_mass += half * frac;
        }
        for (const auto& [gid, frac] : assign[e.b].shares) {
            groups[gid].edge_mass += half * frac;
        }
    }

    rep.groups = std::move(groups);
    return rep;
}

Rational anchored_path_group_density(int k) {
    if (k < 1) {
        throw Error("path group density needs k >= 1");
    }
    return Rational(2 * k + (k + 1) / 3, 2 * k);
}

Rational heavy_group_density(int m) {
    if (m < 0) {
        throw Error("heavy group density needs m >= 0");
    }
    return Rational(m + 3, m + 2);
}

}  // namespace ppg
