#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "ppg/graph.hpp"
#include "ppg/oracle.hpp"
#include "ppg/placement.hpp"
#include "ppg/rational.hpp"

namespace ppg {

struct AdversaryConfig {
    Rational c = Rational(1);       // the shared length handed to pendant chains
    int cap = 24;                   // brute-force verification bound
    std::size_t candidate_cap = 512;
};

struct AdversaryVerdict {
    bool defeated = false;
    bool disconnected = false;
    std::vector<Placement> witnesses;  // up to 2, canonical
};

// Decides whether the final graph still admits two placements consistent
// with every answer given. A disconnected final graph is always a defeat.
AdversaryVerdict adversary_verdict(const Ppg& g2, const Transcript& transcript, int cap = -1);

// Lower-bound adversary. Round one commits a concrete layout: heavy nodes
// spaced far apart, degree-2 chains answered with the equal-pair patterns
// (paired edges around a fold for chains between heavy nodes, alternating
// classes with the shared length c on pendant chains), isolated edges
// answered as c. Round two answers keep two placements alive whenever the
// final graph still carries a degree-2 path of four or more nodes, by
// planting an equal-flank window whose joint reflection is a second
// placement; everything else is answered to preserve as many committed
// candidates as possible.
class AdversaryOracle : public Oracle {
public:
    explicit AdversaryOracle(long n, AdversaryConfig cfg = {});

    long point_count() const override { return n_; }

    AdversaryVerdict verdict() const;

    // The committed layout behind the round-1 answers.
    const std::vector<Rational>& primary_positions() const { return primary_; }
    // Candidate placements still alive beyond the committed one.
    std::size_t pending_ambiguities() const;

    const AdversaryConfig& config() const { return cfg_; }

protected:
    std::vector<Rational> do_answer(
        int round, const std::vector<std::pair<PointId, PointId>>& batch) override;

private:
    struct Component {
        std::vector<PointId> verts;                     // sorted point ids
        std::vector<std::vector<Rational>> candidates;  // coords aligned with verts
        std::size_t primary = 0;
        bool truncated = false;

        int index_of(PointId v) const;
    };

    struct TrapPlan {
        std::vector<int> arena;  // component ids collapsed by the trap
        std::map<PointId, Rational> layout_a;
        std::map<PointId, Rational> layout_b;
        std::map<std::pair<PointId, PointId>, Rational> answers;
    };

    std::vector<Rational> answer_round1(const std::vector<std::pair<PointId, PointId>>& batch);
    std::vector<Rational> answer_round2(const std::vector<std::pair<PointId, PointId>>& batch);

    // Attempts to lay the given degree-2 path (anchor, interior..., anchor)
    // out twice: identically except for one window of three edges whose
    // equal-length flanks are traversed in opposite directions, so the two
    // middle nodes reflect jointly. Free (this-batch) edges absorb the
    // closure toward a committed far anchor.
    bool plan_reflection_trap(const std::vector<PointId>& path_nodes,
                              const std::set<std::pair<PointId, PointId>>& batch_edges,
                              TrapPlan& plan);

    void build_primary(const Ppg& g1);
    bool try_build_primary(const Ppg& g1);
    void build_components(const Ppg& g1);

    Rational fresh_small();
    Rational fresh_heavy();

    const Rational& primary_coord(int comp, PointId v) const;
    void prune_component(int comp, PointId a, PointId b, const Rational& answer);
    int merge_components(int ca, int cb, PointId u, PointId w, const Rational& answer);

    long n_ = 0;
    AdversaryConfig cfg_;
    std::vector<Rational> primary_;
    std::vector<int> comp_of_;
    std::vector<Component> comps_;
    Ppg answered_;
    int fresh_counter_ = 0;
    int salt_ = 0;
};

}  // namespace ppg
