#include <doctest.h>

#include "ppg/errors.hpp"
#include "ppg/json_io.hpp"
#include "ppg/oracle.hpp"
#include "ppg/rng.hpp"

using ppg::HiddenInstance;
using ppg::Rational;

TEST_CASE("honest answers are exact distances") {
    HiddenInstance inst = HiddenInstance::from_positions({Rational(0), Rational(3), Rational(10)});
    CHECK(ppg::honest_answer(inst, {{0, 2}}) == std::vector<Rational>{Rational(10)});
    CHECK(ppg::honest_answer(inst, {{2, 0}}) == std::vector<Rational>{Rational(10)});
    CHECK(ppg::honest_answer(inst, {{0, 1}, {1, 2}}) ==
          std::vector<Rational>{Rational(3), Rational(7)});
    CHECK_THROWS_AS(ppg::honest_answer(inst, {{0, 5}}), ppg::UnknownPointError);
}

TEST_CASE("hidden instances are reproducible and distinct") {
    HiddenInstance a = HiddenInstance::random(50, 99);
    HiddenInstance b = HiddenInstance::random(50, 99);
    CHECK(a.positions == b.positions);
    CHECK(ppg::all_distinct(a.positions));
    CHECK_THROWS_AS(HiddenInstance::from_positions({Rational(1), Rational(1)}),
                    ppg::DuplicateCoordinateError);
}

TEST_CASE("collinear triples satisfy the one-equals-sum-of-two identity") {
    HiddenInstance inst = HiddenInstance::random(12, 5);
    ppg::Rng rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        int a = static_cast<int>(rng.uniform(0, 11));
        int b = static_cast<int>(rng.uniform(0, 11));
        int c = static_cast<int>(rng.uniform(0, 11));
        if (a == b || b == c || a == c) {
            continue;
        }
        auto d = ppg::honest_answer(inst, {{a, b}, {b, c}, {a, c}});
        bool identity = d[0] == d[1] + d[2] || d[1] == d[0] + d[2] || d[2] == d[0] + d[1];
        CHECK(identity);
    }
}

TEST_CASE("oracles keep a transcript and map it back to a query graph") {
    ppg::HonestOracle oracle(HiddenInstance::from_positions(
        {Rational(0), Rational(4), Rational(9), Rational(17)}));
    oracle.answer_round({{0, 1}, {1, 2}});
    oracle.answer_round({{2, 3}});
    CHECK(oracle.rounds_answered() == 2);

    ppg::Ppg g2 = oracle.transcript().to_ppg();
    CHECK(g2.n() == 4);
    CHECK(g2.edge_count() == 3);
    CHECK(g2.round_view(1).edge_count() == 2);
    CHECK(g2.find_edge(2, 3)->round == 2);
    CHECK(g2.find_edge(1, 2)->length == Rational(5));

    // transcripts round-trip through JSON
    std::string text = ppg::transcript_to_json(oracle.transcript());
    ppg::Transcript back = ppg::transcript_from_json(text);
    CHECK(back.n == 4);
    REQUIRE(back.rounds.size() == 2);
    CHECK(back.rounds[0][1].answer == Rational(5));
    CHECK(ppg::transcript_to_json(back) == text);
}
