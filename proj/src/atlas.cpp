#include "ppg/atlas.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "ppg/errors.hpp"
#include "ppg/layer_graph.hpp"
#include "ppg/rng.hpp"
#include "ppg/solver.hpp"

namespace ppg {

namespace {

// Edge bit order: pair (i, j), i < j, indexed lexicographically.
int pair_bit(int n, int i, int j) {
    int bit = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (a == i && b == j) {
                return bit;
            }
            ++bit;
        }
    }
    return -1;
}

bool mask_connected(int n, std::uint64_t mask) {
    std::vector<int> comp(n);
    std::iota(comp.begin(), comp.end(), 0);
    std::function<int(int)> find = [&](int v) {
        return comp[v] == v ? v : comp[v] = find(comp[v]);
    };
    int bit = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                comp[find(a)] = find(b);
            }
        }
    }
    int root = find(0);
    for (int v = 1; v < n; ++v) {
        if (find(v) != root) {
            return false;
        }
    }
    return true;
}

std::uint64_t relabel_mask(int n, std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    int bit = 0;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b, ++bit) {
            if (mask & (std::uint64_t{1} << bit)) {
                int pa = perm[a], pb = perm[b];
                if (pa > pb) {
                    std::swap(pa, pb);
                }
                out |= std::uint64_t{1} << pair_bit(n, pa, pb);
            }
        }
    }
    return out;
}

std::uint64_t canonical_mask(int n, std::uint64_t mask) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = mask;
    do {
        best = std::min(best, relabel_mask(n, mask, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace

std::vector<Ppg> connected_graph_atlas(int max_n) {
    if (max_n < 1 || max_n > 7) {
        throw ConfigError("atlas supports 1..7 vertices");
    }
    std::vector<Ppg> out;
    for (int n = 1; n <= max_n; ++n) {
        int pairs = n * (n - 1) / 2;
        std::set<std::uint64_t> seen;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
            if (!mask_connected(n, mask)) {
                continue;
            }
            std::uint64_t canon = canonical_mask(n, mask);
            if (!seen.insert(canon).second) {
                continue;
            }
            Ppg g(n);
            int bit = 0;
            for (int a = 0; a < n; ++a) {
                for (int b = a + 1; b < n; ++b, ++bit) {
                    if (canon & (std::uint64_t{1} << bit)) {
                        g.add_edge(a, b, 1, Rational(1));
                    }
                }
            }
            out.push_back(std::move(g));
        }
    }
    return out;
}

AtlasResult run_atlas(int max_n, int samples_per_graph, std::uint64_t seed) {
    AtlasResult result;
    result.samples_per_graph = samples_per_graph;
    Rng rng(seed);

    for (const Ppg& skeleton : connected_graph_atlas(max_n)) {
        ++result.graphs_checked;
        for (int s = 0; s < samples_per_graph; ++s) {
            // realizability-first: sample a placement, read lengths off it
            std::set<long long> used;
            std::vector<Rational> pos;
            while (static_cast<int>(pos.size()) < skeleton.n()) {
                long long v = rng.uniform(0, 1'000'000'000LL);
                if (used.insert(v).second) {
                    pos.push_back(Rational(v));
                }
            }
            Ppg g(skeleton.n());
            for (const auto& e : skeleton.edges()) {
                g.add_edge(e.a, e.b, 1, abs(pos[e.a] - pos[e.b]));
            }
            EquivalenceReport rep = check_rigidity_drawing_equivalence(g);
            if (!rep.consistent) {
                ++result.inconsistencies;
                std::ostringstream msg;
                msg << "n=" << g.n() << " edges=" << g.edge_count()
                    << " rigid=" << rep.rigid << " has_drawing=" << rep.has_drawing;
                result.failures.push_back(msg.str());
            }
        }
    }
    return result;
}

}  // namespace ppg
