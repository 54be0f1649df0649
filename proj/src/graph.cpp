#include "ppg/graph.hpp"

#include <algorithm>
#include <queue>

#include "ppg/errors.hpp"

namespace ppg {

void Ppg::set_n(int n) {
    if (n < 0) {
        throw Error("negative point count");
    }
    for (const auto& e : edges_) {
        if (e.a >= n || e.b >= n) {
            throw Error("cannot shrink graph below existing edges");
        }
    }
    n_ = n;
}

void Ppg::add_edge(PointId a, PointId b, int round, const Rational& length) {
    if (a == b) {
        throw Error("self-loop edge");
    }
    if (a < 0 || b < 0 || a >= n_ || b >= n_) {
        throw UnknownPointError("edge endpoint out of range");
    }
    if (round != 1 && round != 2) {
        throw Error("edge round must be 1 or 2");
    }
    if (length.sign() <= 0) {
        throw Error("edge length must be positive");
    }
    if (a > b) {
        std::swap(a, b);
    }
    if (index_.count({a, b})) {
        throw Error("duplicate edge");
    }
    index_[{a, b}] = static_cast<int>(edges_.size());
    edges_.push_back(QueryEdge{a, b, round, length});
}

bool Ppg::has_edge(PointId a, PointId b) const {
    return find_edge(a, b) != nullptr;
}

const QueryEdge* Ppg::find_edge(PointId a, PointId b) const {
    if (a > b) {
        std::swap(a, b);
    }
    auto it = index_.find({a, b});
    return it == index_.end() ? nullptr : &edges_[it->second];
}

Ppg Ppg::round_view(int round) const {
    Ppg out(n_);
    out.roles_ = roles_;
    for (const auto& e : edges_) {
        if (round == 2 || e.round == 1) {
            out.add_edge(e.a, e.b, e.round, e.length);
        }
    }
    return out;
}

std::vector<int> Ppg::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& e : edges_) {
        ++deg[e.a];
        ++deg[e.b];
    }
    return deg;
}

std::vector<std::vector<std::pair<PointId, int>>> Ppg::adjacency() const {
    std::vector<std::vector<std::pair<PointId, int>>> adj(n_);
    for (int i = 0; i < static_cast<int>(edges_.size()); ++i) {
        adj[edges_[i].a].push_back({edges_[i].b, i});
        adj[edges_[i].b].push_back({edges_[i].a, i});
    }
    for (auto& lst : adj) {
        std::sort(lst.begin(), lst.end());
    }
    return adj;
}

bool Ppg::connected() const {
    if (n_ <= 1) {
        return true;
    }
    auto adj = adjacency();
    std::vector<char> seen(n_, 0);
    std::queue<int> work;
    work.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!work.empty()) {
        int v = work.front();
        work.pop();
        for (auto [u, idx] : adj[v]) {
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                work.push(u);
            }
        }
    }
    return reached == n_;
}

}  // namespace ppg
