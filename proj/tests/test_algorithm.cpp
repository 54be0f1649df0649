#include <doctest.h>

#include <set>

#include "game_helpers.hpp"
#include "ppg/algorithm.hpp"
#include "ppg/errors.hpp"
#include "ppg/oracle.hpp"
#include "ppg/rng.hpp"
#include "ppg/solver.hpp"

using ppg::HiddenInstance;
using ppg::HonestOracle;
using ppg::Rational;
using ppg::RoundOnePlan;

TEST_CASE("plan counts follow the closed forms") {
    RoundOnePlan plan = ppg::build_round1_plan(1);
    CHECK(plan.n == 4664);
    CHECK(plan.link_groups == 46);
    CHECK(plan.leaves_per_point == 127);
    CHECK(plan.round1_query_count() == 4638);
    CHECK(plan.round2_query_count() == 2292);
    CHECK(plan.total_query_count() == 6930);
    CHECK(static_cast<long>(plan.round1_pairs().size()) == 4638);

    RoundOnePlan plan2 = ppg::build_round1_plan(2);
    CHECK(plan2.n == 4909);
    CHECK(plan2.round1_query_count() == 4848);

    CHECK_THROWS_AS(ppg::build_round1_plan(0), ppg::ConfigError);
}

TEST_CASE("the core has 35 points and 55 edges and recovers exactly") {
    ppg::Ppg core = ppg::make_core_graph();
    CHECK(core.n() == 35);
    CHECK(core.edge_count() == 55);
    CHECK(core.connected());

    ppg::Rng rng(31);
    for (int trial = 0; trial < 5; ++trial) {
        std::set<long long> used;
        std::vector<Rational> pos;
        while (pos.size() < 35) {
            long long v = rng.uniform(0, 1LL << 40);
            if (used.insert(v).second) {
                pos.push_back(Rational(v));
            }
        }
        std::vector<Rational> lengths;
        for (const auto& [a, b] : ppg::core_topology()) {
            lengths.push_back(abs(pos[a] - pos[b]));
        }
        std::vector<Rational> coords = ppg::solve_core(lengths);
        CHECK(ppg::canonicalize(coords) == ppg::canonicalize(pos));
    }
}

TEST_CASE("a degenerate jewel is flagged instead of trusted") {
    // answers consistent with the rectangle ambiguity inside one gadget:
    // strut 0-1 at distance 10, gadget points placed so its four-cycle
    // (0, d, e, c) has two layouts
    std::vector<Rational> pos(35, Rational(0));
    for (int i = 0; i < 35; ++i) {
        pos[i] = Rational(1000 + 37 * i);
    }
    pos[0] = Rational(0);
    pos[1] = Rational(10);
    pos[2] = Rational(7);  // c
    pos[3] = Rational(2);  // d
    pos[4] = Rational(9);  // e: |d e| equals the a..c gap, so the cycle shears
    std::vector<Rational> lengths;
    for (const auto& [a, b] : ppg::core_topology()) {
        lengths.push_back(abs(pos[a] - pos[b]));
    }
    CHECK_THROWS_AS(ppg::solve_core(lengths), ppg::CoreNotRigidError);
}

TEST_CASE("triplet selection prefers low valence and low id") {
    std::vector<Rational> coords;
    for (int i = 0; i < 35; ++i) {
        coords.push_back(Rational(1 << 10) * Rational(i));
    }
    ppg::ValenceState valence(35);
    ppg::Triplet t = ppg::select_triplet(valence, coords, Rational(3), Rational(5), Rational(11));
    CHECK(t.p1 == 0);
    CHECK(t.p2 == 1);
    CHECK(t.p3 == 2);

    valence.attach(t.p1, t.p2, t.p3);
    t = ppg::select_triplet(valence, coords, Rational(3), Rational(5), Rational(11));
    CHECK(t.p1 == 3);
    CHECK(t.p2 == 4);
    CHECK(t.p3 == 5);
}

TEST_CASE("triplet selection skips candidates hitting forbidden gaps") {
    // gap |p0 p1| set equal to r1s, so point 1 cannot follow point 0
    std::vector<Rational> coords{Rational(0), Rational(3), Rational(100), Rational(250),
                                 Rational(700)};
    ppg::ValenceState valence(5);
    ppg::Triplet t = ppg::select_triplet(valence, coords, Rational(3), Rational(5), Rational(11));
    CHECK(t.p1 == 0);
    CHECK(t.p2 == 2);  // candidate 1 blocked by |p1p2| = r1s
    CHECK(t.p3 == 3);
}

TEST_CASE("leaf selection takes the first unused unblocked leaf") {
    ppg::ThreePathLengths partial;
    partial.r1s = 2;
    partial.r2s = 9;
    partial.r3s = 31;
    partial.p1p2 = 4099;
    partial.p3p1 = 20510;
    std::vector<Rational> lengths{Rational(2), Rational(50), Rational(60)};
    std::vector<char> used(3, 0);
    // leaf 0 carries exactly r1s and is skipped
    CHECK(ppg::select_leaf_edge(4, lengths, used, partial) == 1);
    used[1] = 1;
    CHECK(ppg::select_leaf_edge(4, lengths, used, partial) == 2);
}

TEST_CASE("leaf selection survives the paired-equal worst case") {
    ppg::ThreePathLengths partial;
    partial.r1s = 2;
    partial.r2s = 9;
    partial.r3s = 31;
    partial.p1p2 = 4099;
    partial.p2p3 = 16411;
    partial.p3p1 = 20510;
    partial.p1q1 = 101;
    partial.p2q2 = 367;

    auto sets = ppg::three_path_condition_sets();
    std::set<Rational> forbidden;
    for (const auto& expr : sets[5].forbidden) {
        for (const auto& v : expr.expand(partial)) {
            forbidden.insert(v);
        }
    }
    REQUIRE(forbidden.size() == 61);

    // two leaves per forbidden value (the two-equal-edges worst case), and
    // 127 - 122 = 5 free leaves at the tail
    std::vector<Rational> lengths;
    for (const auto& v : forbidden) {
        if (!v.is_zero()) {
            lengths.push_back(v);
            lengths.push_back(v);
        }
    }
    while (lengths.size() < 126) {
        lengths.push_back(Rational(1, 999983) + Rational(static_cast<long>(lengths.size())));
    }
    std::vector<char> used(lengths.size(), 0);
    long leaf = ppg::select_leaf_edge(6, lengths, used, partial);
    CHECK_FALSE(forbidden.count(lengths[leaf]));

    // blocking everything must throw rather than mis-select
    std::vector<Rational> all_blocked(10, *forbidden.rbegin());
    std::vector<char> none_used(10, 0);
    CHECK_THROWS_AS(ppg::select_leaf_edge(6, all_blocked, none_used, partial),
                    ppg::NoFeasibleLeafError);
}

TEST_CASE("two-anchor and bridged-pair solvers reject ambiguity") {
    CHECK(ppg::solve_two_anchor(Rational(0), Rational(3), Rational(10), Rational(7)) ==
          Rational(3));
    CHECK_THROWS_AS(ppg::solve_two_anchor(Rational(0), Rational(3), Rational(10), Rational(6)),
                    ppg::VerificationError);

    auto [qa, qb] = ppg::solve_bridged_pair(Rational(0), Rational(3), Rational(10), Rational(4),
                                            Rational(11));
    CHECK(qa == Rational(3));
    CHECK(qb == Rational(14));

    // equal leaf lengths would leave the four-cycle ambiguous; the solver
    // refuses instead of guessing
    CHECK_THROWS_AS(ppg::solve_bridged_pair(Rational(0), Rational(3), Rational(10), Rational(3),
                                            Rational(13)),
                    ppg::VerificationError);
}

TEST_CASE("leftover pairing crosses hubs and leaves at most the odd one out") {
    std::vector<std::vector<long>> unused{{0, 1, 2}, {0, 1}, {0, 1}};
    std::vector<std::vector<Rational>> lengths{
        {Rational(1), Rational(2), Rational(3)},
        {Rational(4), Rational(5)},
        {Rational(6), Rational(7)}};
    ppg::LeafPairing pairing = ppg::pair_leftover_leaves(unused, lengths);
    CHECK(pairing.pairs.size() == 3);
    CHECK(pairing.leftovers.size() == 1);
    for (const auto& [ha, la, hb, lb] : pairing.pairs) {
        CHECK(ha != hb);
        CHECK(lengths[ha][la] != lengths[hb][lb]);
    }
}

TEST_CASE("leftover pairing switches an earlier match when lengths collide") {
    // hub 1 ends with only leaves equal to hub 0's last candidate
    std::vector<std::vector<long>> unused{{0, 1}, {0, 1}};
    std::vector<std::vector<Rational>> lengths{
        {Rational(5), Rational(7)},
        {Rational(7), Rational(7)}};
    ppg::LeafPairing pairing = ppg::pair_leftover_leaves(unused, lengths);
    CHECK(pairing.pairs.size() == 2);
    CHECK(pairing.leftovers.empty());
    for (const auto& [ha, la, hb, lb] : pairing.pairs) {
        CHECK(lengths[ha][la] != lengths[hb][lb]);
    }
}

TEST_CASE("the full b=1 run against an honest oracle") {
    HonestOracle oracle(4664, 2024);
    ppg::AlgorithmReport report = ppg::run_two_round(oracle, 1, true);
    CHECK(report.round1_queries == 4638);
    CHECK(report.round2_queries == 2292);
    CHECK(report.total_queries == 6930);
    CHECK(7 * report.total_queries == 9 * report.n + 6534);
    CHECK(report.component_count == 46);
    CHECK(report.max_valence_spread <= 2);
    for (int v : report.final_valences) {
        CHECK(v >= 3);
        CHECK(v <= 5);
    }
    CHECK(report.verified);
    CHECK(report.placement.coords.size() == 4664);
}

TEST_CASE("padding fixes off-lattice sizes with two queries each") {
    HonestOracle oracle(4670, 7);
    ppg::AlgorithmReport report = ppg::run_two_round(oracle, 1, true);
    CHECK(report.padding_points == 6);
    CHECK(report.padding_queries == 12);
    CHECK(report.round2_queries == 2292);  // padding reported separately
    CHECK(report.verified);
}

TEST_CASE("the triangle baseline is exact and always rigid") {
    for (long n : {2L, 3L, 10L}) {
        HonestOracle oracle(n, 100 + n);
        ppg::AlgorithmReport report = ppg::run_triangle_baseline(oracle, n, true);
        CHECK(report.total_queries == 2 * n - 3);
        CHECK(report.round2_queries == 0);
        CHECK(report.verified);
    }
}

TEST_CASE("the quadrilateral baseline counts and recovers") {
    HonestOracle oracle(8, 3);
    ppg::AlgorithmReport report = ppg::run_quadrilateral_baseline(oracle, 8, true);
    CHECK(report.total_queries == 11);  // 3n/2 - 1
    CHECK(report.verified);

    HonestOracle odd(9, 4);
    report = ppg::run_quadrilateral_baseline(odd, 9, true);
    CHECK(report.verified);
    CHECK(report.total_queries == 13);  // even part plus two padding queries
}

TEST_CASE("the quadrilateral baseline survives paired equal lengths") {
    // hub 0 at 0, hub 1 at 1000; children engineered so equal lengths appear
    // in pairs at both hubs (the tight case for switch-matching)
    std::vector<Rational> pos{Rational(0), Rational(1000),
                              Rational(7),  Rational(-7),   // hub-0 pair, length 7
                              Rational(1007), Rational(993), // hub-1 pair, length 7
                              Rational(1011), Rational(989)}; // hub-1 pair, length 11
    HonestOracle oracle(HiddenInstance::from_positions(pos));
    ppg::AlgorithmReport report = ppg::run_quadrilateral_baseline(oracle, 8, true);
    CHECK(report.verified);
}

TEST_CASE("the mini three-path game recovers an honest instance") {
    HonestOracle oracle(13, 77);
    ppg::Placement recovered = ppg::testing::run_mini_three_path(oracle);
    CHECK(ppg::canonicalize(recovered) == ppg::canonicalize(*oracle.hidden_positions()));
}

TEST_CASE("report JSON carries the closed forms") {
    HonestOracle oracle(13, 77);
    ppg::AlgorithmReport report = ppg::run_triangle_baseline(oracle, 13, true);
    std::string json = ppg::report_to_json(report);
    CHECK(json.find("\"expected_total\": 23") != std::string::npos);
    CHECK(json.find("\"verified\": true") != std::string::npos);
}
