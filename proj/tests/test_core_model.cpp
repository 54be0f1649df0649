#include <doctest.h>

#include "ppg/errors.hpp"
#include "ppg/graph.hpp"
#include "ppg/json_io.hpp"
#include "ppg/placement.hpp"
#include "ppg/rng.hpp"

using ppg::Placement;
using ppg::Ppg;
using ppg::Rational;

TEST_CASE("canonical form translates the minimum to zero") {
    Placement p = ppg::canonicalize({Rational(5), Rational(8)});
    CHECK(p.coords == std::vector<Rational>{Rational(0), Rational(3)});
}

TEST_CASE("canonical form absorbs reflection") {
    Placement p = ppg::canonicalize({Rational(3), Rational(0)});
    CHECK(p.coords == std::vector<Rational>{Rational(0), Rational(3)});
}

TEST_CASE("reflections about the midpoint share a canonical form") {
    Placement a = ppg::canonicalize({Rational(0), Rational(7), Rational(3)});
    Placement b = ppg::canonicalize({Rational(7), Rational(0), Rational(4)});
    CHECK(a == b);
}

TEST_CASE("coincident points are rejected") {
    CHECK_THROWS_AS(ppg::canonicalize({Rational(1), Rational(1)}),
                    ppg::DuplicateCoordinateError);
}

TEST_CASE("canonicalization is idempotent and affine invariant") {
    ppg::Rng rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> raw;
        int n = 2 + static_cast<int>(rng.uniform(0, 6));
        while (static_cast<int>(raw.size()) < n) {
            Rational v(static_cast<long>(rng.uniform(-1000, 1000)),
                       static_cast<long>(rng.uniform(1, 20)));
            if (std::find(raw.begin(), raw.end(), v) == raw.end()) {
                raw.push_back(v);
            }
        }
        Placement canon = ppg::canonicalize(raw);
        CHECK(ppg::canonicalize(canon) == canon);

        Rational shift(static_cast<long>(rng.uniform(-500, 500)));
        bool flip = rng.uniform(0, 1) == 1;
        std::vector<Rational> mapped;
        for (const auto& v : raw) {
            mapped.push_back(flip ? shift - v : shift + v);
        }
        CHECK(ppg::canonicalize(mapped) == canon);
        CHECK(ppg::same_up_to_motion(Placement{raw}, Placement{mapped}));
    }
}

TEST_CASE("round views filter first-round edges") {
    Ppg g(6);
    g.add_edge(0, 1, 1, Rational(1));
    g.add_edge(1, 2, 1, Rational(2));
    g.add_edge(2, 3, 1, Rational(3));
    g.add_edge(3, 4, 2, Rational(4));
    g.add_edge(4, 5, 2, Rational(5));
    CHECK(g.round_view(1).edge_count() == 3);
    CHECK(g.round_view(2).edge_count() == 5);

    Ppg empty(4);
    CHECK(empty.round_view(1).edge_count() == 0);
}

TEST_CASE("graphs refuse malformed edges") {
    Ppg g(3);
    g.add_edge(0, 1, 1, Rational(1));
    CHECK_THROWS_AS(g.add_edge(1, 0, 1, Rational(2)), ppg::Error);   // duplicate pair
    CHECK_THROWS_AS(g.add_edge(1, 1, 1, Rational(1)), ppg::Error);   // self loop
    CHECK_THROWS_AS(g.add_edge(0, 2, 1, Rational(0)), ppg::Error);   // zero length
    CHECK_THROWS_AS(g.add_edge(0, 2, 1, Rational(-1)), ppg::Error);  // negative length
    CHECK_THROWS_AS(g.add_edge(0, 2, 3, Rational(1)), ppg::Error);   // bad round
    CHECK_THROWS_AS(g.add_edge(0, 5, 1, Rational(1)), ppg::UnknownPointError);
}

TEST_CASE("instance JSON round-trips bit-exactly") {
    ppg::Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng.uniform(0, 8));
        Ppg g(n);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng.uniform(0, 2) == 0) {
                    g.add_edge(a, b, rng.uniform(0, 1) == 0 ? 1 : 2,
                               Rational(static_cast<long>(rng.uniform(1, 1'000'000)),
                                        static_cast<long>(rng.uniform(1, 997))));
                }
            }
        }
        std::string text = ppg::instance_to_json(g);
        Ppg back = ppg::instance_from_json(text);
        CHECK(back.n() == g.n());
        REQUIRE(back.edge_count() == g.edge_count());
        for (std::size_t i = 0; i < g.edges().size(); ++i) {
            CHECK(back.edges()[i].a == g.edges()[i].a);
            CHECK(back.edges()[i].b == g.edges()[i].b);
            CHECK(back.edges()[i].round == g.edges()[i].round);
            CHECK(back.edges()[i].length == g.edges()[i].length);
        }
        CHECK(ppg::instance_to_json(back) == text);
    }
}

TEST_CASE("malformed instance JSON is rejected") {
    CHECK_THROWS_AS(ppg::instance_from_json("not json"), ppg::Error);
    CHECK_THROWS_AS(ppg::instance_from_json("{}"), ppg::Error);
    CHECK_THROWS_AS(ppg::instance_from_json(
                        R"({"n": 2, "edges": [{"a": 0, "b": 1, "round": 1, "len": "1/0"}]})"),
                    ppg::Error);
}
