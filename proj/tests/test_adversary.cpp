#include <doctest.h>

#include <map>

#include "game_helpers.hpp"
#include "ppg/adversary.hpp"
#include "ppg/algorithm.hpp"
#include "ppg/analysis.hpp"
#include "ppg/errors.hpp"

using ppg::AdversaryOracle;
using ppg::AdversaryVerdict;
using ppg::PointId;
using ppg::Rational;

namespace {

std::map<std::pair<PointId, PointId>, Rational> answer_map(
    AdversaryOracle& oracle, const std::vector<std::pair<PointId, PointId>>& batch) {
    std::vector<Rational> ans = oracle.answer_round(batch);
    std::map<std::pair<PointId, PointId>, Rational> out;
    for (std::size_t i = 0; i < batch.size(); ++i) {
        out[batch[i]] = ans[i];
    }
    return out;
}

}  // namespace

TEST_CASE("a chain between two heavy nodes gets paired lengths and folds") {
    // heavy anchors 0 and 7 (two extra leaves each), chain 1..6 between them
    AdversaryOracle oracle(12);
    std::vector<std::pair<PointId, PointId>> batch = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7},
        {0, 8}, {0, 9}, {7, 10}, {7, 11}};
    auto ans = answer_map(oracle, batch);

    CHECK(ans[{0, 1}] == ans[{2, 3}]);
    CHECK(ans[{3, 4}] == ans[{5, 6}]);
    const auto& p = oracle.primary_positions();
    CHECK(ans[{1, 2}] == abs(p[0] - p[3]));  // the fold spans the pair
    CHECK(ans[{4, 5}] == abs(p[3] - p[6]));
    CHECK(ppg::testing::transcript_realizable(oracle.transcript()));
    CHECK(oracle.pending_ambiguities() > 0);
}

TEST_CASE("a pendant chain alternates lengths with the shared value") {
    // heavy anchor 0 (needs three incident edges), chain 1..4 dangling
    AdversaryOracle oracle(7);
    std::vector<std::pair<PointId, PointId>> batch = {
        {0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 5}, {0, 6}};
    auto ans = answer_map(oracle, batch);

    CHECK(ans[{0, 1}] == ans[{2, 3}]);  // alternate edges equal
    CHECK(ans[{1, 2}] == ans[{3, 4}]);
    CHECK(ans[{1, 2}] == oracle.config().c);  // the shared length
    CHECK(ppg::testing::transcript_realizable(oracle.transcript()));
}

TEST_CASE("an isolated edge is answered with the shared length") {
    AdversaryOracle oracle(2);
    auto ans = answer_map(oracle, {{0, 1}});
    CHECK(ans[{0, 1}] == oracle.config().c);
}

TEST_CASE("every surviving-pattern game is defeated with two witnesses") {
    for (int pattern = 0; pattern <= 5; ++pattern) {
        CAPTURE(pattern);
        AdversaryOracle oracle(7);
        AdversaryVerdict verdict = ppg::testing::play_pattern_game(pattern, oracle);
        CHECK(verdict.defeated);
        CHECK_FALSE(verdict.disconnected);
        REQUIRE(verdict.witnesses.size() == 2);
        CHECK(verdict.witnesses[0] != verdict.witnesses[1]);

        // witnesses satisfy every answered edge exactly
        ppg::Ppg g2 = oracle.transcript().to_ppg();
        for (const auto& w : verdict.witnesses) {
            for (const auto& e : g2.edges()) {
                CHECK(abs(w.coords[e.a] - w.coords[e.b]) == e.length);
            }
        }
        // and the final graph indeed carries an over-long degree-2 path
        CHECK_FALSE(ppg::check_degree2_path_bound(g2).ok);
        CHECK(ppg::testing::transcript_realizable(oracle.transcript()));
    }
}

TEST_CASE("the one-round triangle scheme is never defeated") {
    AdversaryOracle oracle(9);
    ppg::AlgorithmReport report = ppg::run_triangle_baseline(oracle, 9, true);
    CHECK(report.verified);
    AdversaryVerdict verdict = oracle.verdict();
    CHECK_FALSE(verdict.defeated);
    // short degree-2 paths only, so the committed layout answered everything
    CHECK(ppg::check_degree2_path_bound(oracle.transcript().to_ppg()).ok);
}

TEST_CASE("the mini three-path game beats the adversary") {
    AdversaryOracle oracle(13);
    ppg::Placement recovered = ppg::testing::run_mini_three_path(oracle);
    CHECK(recovered.coords.size() == 13);
    AdversaryVerdict verdict = oracle.verdict();
    CHECK_FALSE(verdict.defeated);
    CHECK(ppg::testing::transcript_realizable(oracle.transcript()));
}

TEST_CASE("the quadrilateral baseline also beats the adversary") {
    AdversaryOracle oracle(10);
    ppg::AlgorithmReport report = ppg::run_quadrilateral_baseline(oracle, 10, true);
    CHECK(report.verified);
    CHECK_FALSE(oracle.verdict().defeated);
}

TEST_CASE("the adversary refuses instances past its cap") {
    CHECK_THROWS_AS(AdversaryOracle(100), ppg::InstanceTooLargeError);
}
