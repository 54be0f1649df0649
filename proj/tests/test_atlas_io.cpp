#include <doctest.h>

#include "ppg/atlas.hpp"
#include "ppg/dot_export.hpp"
#include "ppg/errors.hpp"
#include "ppg/graph.hpp"
#include "ppg/algorithm.hpp"

using ppg::Ppg;
using ppg::Rational;

TEST_CASE("the connected-graph atlas has the known class counts") {
    // connected graphs up to isomorphism: 1, 1, 2, 6, 21 for n = 1..5
    CHECK(ppg::connected_graph_atlas(1).size() == 1);
    CHECK(ppg::connected_graph_atlas(2).size() == 2);
    CHECK(ppg::connected_graph_atlas(3).size() == 4);
    CHECK(ppg::connected_graph_atlas(4).size() == 10);
    CHECK(ppg::connected_graph_atlas(5).size() == 31);
    CHECK_THROWS_AS(ppg::connected_graph_atlas(9), ppg::ConfigError);
}

TEST_CASE("a small sweep sees no disagreement") {
    ppg::AtlasResult res = ppg::run_atlas(4, 10, 123);
    CHECK(res.graphs_checked == 10);
    CHECK(res.inconsistencies == 0);
}

TEST_CASE("DOT export is deterministic and styles rounds") {
    Ppg tri(3);
    tri.add_edge(0, 1, 1, Rational(5));
    tri.add_edge(0, 2, 1, Rational(2));
    tri.add_edge(1, 2, 1, Rational(3));
    std::string dot = ppg::export_dot(tri);
    CHECK(dot == ppg::export_dot(tri));
    CHECK(dot.find("p0 -- p1") != std::string::npos);
    CHECK(dot.find("style=solid") != std::string::npos);
    CHECK(dot.find("style=dashed") == std::string::npos);

    // the basic component: nine solid edges, three dashed
    ppg::ThreePathLengths len;
    len.p1p2 = 4099;
    len.p2p3 = 16411;
    len.p3p1 = 20510;
    len.p1q1 = 101;
    len.p2q2 = 367;
    len.p3q3 = 1301;
    len.q1r1 = 51;
    len.q2r2 = 151;
    len.q3r3 = 451;
    len.r1s = 2;
    len.r2s = 9;
    len.r3s = 31;
    std::string comp = ppg::export_dot(ppg::make_component_graph(len));
    std::size_t solid = 0, dashed = 0, at = 0;
    while ((at = comp.find("style=solid", at)) != std::string::npos) {
        ++solid;
        ++at;
    }
    at = 0;
    while ((at = comp.find("style=dashed", at)) != std::string::npos) {
        ++dashed;
        ++at;
    }
    CHECK(solid == 9);
    CHECK(dashed == 3);

    Ppg empty(0);
    CHECK(ppg::export_dot(empty).find("graph ppg {") == 0);
}
