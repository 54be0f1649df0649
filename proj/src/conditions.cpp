#include "ppg/conditions.hpp"

#include <algorithm>

#include "ppg/errors.hpp"

namespace ppg {

const char* comp_edge_name(CompEdge e) {
    switch (e) {
        case CompEdge::P1P2: return "p1p2";
        case CompEdge::P2P3: return "p2p3";
        case CompEdge::P3P1: return "p3p1";
        case CompEdge::P1Q1: return "p1q1";
        case CompEdge::P2Q2: return "p2q2";
        case CompEdge::P3Q3: return "p3q3";
        case CompEdge::Q1R1: return "q1r1";
        case CompEdge::Q2R2: return "q2r2";
        case CompEdge::Q3R3: return "q3r3";
        case CompEdge::R1S: return "r1s";
        case CompEdge::R2S: return "r2s";
        case CompEdge::R3S: return "r3s";
    }
    return "?";
}

const Rational& ThreePathLengths::get(CompEdge e) const {
    switch (e) {
        case CompEdge::P1P2: return p1p2;
        case CompEdge::P2P3: return p2p3;
        case CompEdge::P3P1: return p3p1;
        case CompEdge::P1Q1: return p1q1;
        case CompEdge::P2Q2: return p2q2;
        case CompEdge::P3Q3: return p3q3;
        case CompEdge::Q1R1: return q1r1;
        case CompEdge::Q2R2: return q2r2;
        case CompEdge::Q3R3: return q3r3;
        case CompEdge::R1S: return r1s;
        case CompEdge::R2S: return r2s;
        case CompEdge::R3S: return r3s;
    }
    throw Error("bad component edge");
}

Rational& ThreePathLengths::get(CompEdge e) {
    return const_cast<Rational&>(static_cast<const ThreePathLengths*>(this)->get(e));
}

bool ThreePathLengths::gaps_collinear() const {
    return p1p2 == p2p3 + p3p1 || p2p3 == p1p2 + p3p1 || p3p1 == p1p2 + p2p3;
}

std::vector<Rational> LengthExpr::expand_all(const ThreePathLengths& lengths) const {
    if (terms.empty()) {
        throw Error("empty length expression");
    }
    std::vector<Rational> out;
    int free_signs = static_cast<int>(terms.size()) - 1;
    out.reserve(std::size_t{1} << free_signs);
    for (int mask = 0; mask < (1 << free_signs); ++mask) {
        Rational v = lengths.get(terms[0]);
        for (int i = 0; i < free_signs; ++i) {
            const Rational& t = lengths.get(terms[i + 1]);
            v += (mask & (1 << i)) ? -t : t;
        }
        out.push_back(abs(v));
    }
    return out;
}

std::set<Rational> LengthExpr::expand(const ThreePathLengths& lengths) const {
    auto all = expand_all(lengths);
    return {all.begin(), all.end()};
}

std::string LengthExpr::str() const {
    if (terms.size() == 1) {
        return std::string("|") + comp_edge_name(terms[0]) + "|";
    }
    std::string s = "||";
    s += comp_edge_name(terms[0]);
    s += "|";
    for (std::size_t i = 1; i < terms.size(); ++i) {
        s += " +/- |";
        s += comp_edge_name(terms[i]);
        s += "|";
    }
    s += "|";
    return s;
}

int ConditionSet::expansion_count() const {
    int total = 0;
    for (const auto& e : forbidden) {
        total += e.expansion_count();
    }
    return total;
}

namespace {

using E = CompEdge;

LengthExpr x(std::initializer_list<E> terms) { return LengthExpr{terms}; }

}  // namespace

std::vector<ConditionSet> three_path_condition_sets() {
    std::vector<ConditionSet> sets;

    sets.push_back(ConditionSet{
        E::P1P2,
        {x({E::R1S}), x({E::R2S}), x({E::R1S, E::R2S})},
        1});

    sets.push_back(ConditionSet{
        E::P2P3,
        {x({E::R2S}), x({E::R3S}), x({E::R2S, E::R3S})},
        2});

    sets.push_back(ConditionSet{
        E::P3P1,
        {x({E::R3S}), x({E::R1S}), x({E::R3S, E::R1S})},
        3});

    sets.push_back(ConditionSet{
        E::P1Q1,
        {x({E::R1S}),
         x({E::R2S}),
         x({E::R1S, E::R2S}),
         x({E::P1P2, E::R1S}),
         x({E::P1P2, E::R2S}),
         x({E::P3P1, E::R1S}),
         x({E::P3P1, E::R3S}),
         x({E::P1P2, E::R1S, E::R2S}),
         x({E::P3P1, E::R1S, E::R3S})},
        4});

    sets.push_back(ConditionSet{
        E::P2Q2,
        {x({E::R1S}),
         x({E::R2S}),
         x({E::P1Q1}),
         x({E::R1S, E::R2S}),
         x({E::P1P2, E::R1S}),
         x({E::P1P2, E::R2S}),
         x({E::P2P3, E::R2S}),
         x({E::P2P3, E::R3S}),
         x({E::P1Q1, E::R1S}),
         x({E::P1Q1, E::R2S}),
         x({E::P1P2, E::R1S, E::R2S}),
         x({E::P2P3, E::R2S, E::R3S}),
         x({E::P1Q1, E::R1S, E::R2S}),
         x({E::P1Q1, E::P1P2, E::R1S}),
         x({E::P1Q1, E::P1P2, E::R2S}),
         x({E::P1Q1, E::P1P2, E::R1S, E::R2S})},
        5});

    sets.push_back(ConditionSet{
        E::P3Q3,
        {x({E::R1S}),
         x({E::R2S}),
         x({E::R3S}),
         x({E::P1Q1}),
         x({E::P2Q2}),
         x({E::R2S, E::R3S}),
         x({E::R3S, E::R1S}),
         x({E::P3P1, E::R3S}),
         x({E::P2P3, E::R3S}),
         x({E::P1Q1, E::R1S}),
         x({E::P1Q1, E::R3S}),
         x({E::P2Q2, E::R2S}),
         x({E::P2Q2, E::R3S}),
         x({E::P3P1, E::R1S, E::R3S}),
         x({E::P2P3, E::R2S, E::R3S}),
         x({E::P1Q1, E::R1S, E::R3S}),
         x({E::P2Q2, E::R2S, E::R3S}),
         x({E::P1Q1, E::P3P1, E::R3S}),
         x({E::P2Q2, E::P2P3, E::R3S}),
         x({E::P1Q1, E::P3P1, E::R1S, E::R2S}),
         x({E::P2Q2, E::P2P3, E::R2S, E::R3S})},
        6});

    return sets;
}

bool CycleCondition::mentions(CompEdge e) const {
    return std::find(lhs.terms.begin(), lhs.terms.end(), e) != lhs.terms.end() ||
           std::find(rhs.terms.begin(), rhs.terms.end(), e) != rhs.terms.end();
}

std::string CycleCondition::str() const {
    return lhs.str() + " != " + rhs.str();
}

std::vector<CycleCondition> seven_cycle_conditions() {
    std::vector<CycleCondition> out;
    auto add = [&out](int group, LengthExpr lhs, LengthExpr rhs) {
        out.push_back(CycleCondition{std::move(lhs), std::move(rhs), group});
    };

    // group 1: single-edge comparisons
    add(1, x({E::P1P2}), x({E::Q2R2}));
    add(1, x({E::P1P2}), x({E::Q1R1}));
    add(1, x({E::P2Q2}), x({E::R2S}));
    add(1, x({E::P1Q1}), x({E::R1S}));
    add(1, x({E::Q2R2}), x({E::R1S}));
    add(1, x({E::Q1R1}), x({E::R2S}));
    add(1, x({E::P1Q1}), x({E::P2Q2}));

    // group 2
    add(2, x({E::P1P2, E::P2Q2}), x({E::R2S}));
    add(2, x({E::P2Q2, E::Q2R2}), x({E::R1S}));
    add(2, x({E::P1P2, E::P1Q1, E::P2Q2}), x({E::R1S}));
    add(2, x({E::P1Q1}), x({E::R1S, E::R2S}));
    add(2, x({E::P1P2}), x({E::Q1R1, E::R1S}));
    add(2, x({E::P1Q1, E::Q1R1}), x({E::P2Q2}));
    add(2, x({E::P1Q1, E::P1P2}), x({E::Q2R2}));

    // group 3
    add(3, x({E::P1P2, E::P1Q1}), x({E::R1S}));
    add(3, x({E::P1Q1, E::Q1R1}), x({E::R2S}));
    add(3, x({E::P1P2, E::P1Q1, E::P2Q2}), x({E::R2S}));
    add(3, x({E::P2Q2}), x({E::R1S, E::R2S}));
    add(3, x({E::P1P2}), x({E::Q2R2, E::R2S}));
    add(3, x({E::P2Q2, E::Q2R2}), x({E::P2Q2}));
    add(3, x({E::P2Q2, E::P1P2}), x({E::Q1R1}));

    // group 4
    add(4, x({E::P1P2}), x({E::R2S}));
    add(4, x({E::P1P2}), x({E::R1S}));
    add(4, x({E::P2Q2}), x({E::R1S}));
    add(4, x({E::P1Q1}), x({E::R2S}));
    add(4, x({E::P1Q1, E::P2Q2, E::P1P2}), x({E::R1S, E::R2S}));
    add(4, x({E::P2Q2}), x({E::Q1R1}));
    add(4, x({E::P1Q1}), x({E::Q2R2}));

    // group 5
    add(5, x({E::P2Q2}), x({E::P1P2, E::R1S}));
    add(5, x({E::P1Q1}), x({E::P1P2, E::R2S}));
    add(5, x({E::P1Q1}), x({E::P1P2, E::R1S, E::R2S}));
    add(5, x({E::P2Q2}), x({E::P1P2, E::R1S, E::R2S}));
    add(5, x({E::P1Q1}), x({E::Q2R2, E::R2S}));
    add(5, x({E::P2Q2}), x({E::Q1R1, E::R1S}));
    add(5, x({E::P1P2}), x({E::R1S, E::R2S}));

    // group 6
    add(6, x({E::P1Q1, E::Q1R1}), x({E::P2Q2, E::R2S}));
    add(6, x({E::P2Q2, E::Q2R2}), x({E::P1Q1, E::R1S}));
    add(6, x({E::Q1R1}), x({E::P2Q2, E::R2S}));
    add(6, x({E::Q2R2}), x({E::P1Q1, E::R1S}));
    add(6, x({E::P2Q2}), x({E::P1Q1, E::R1S}));
    add(6, x({E::P1Q1}), x({E::P2Q2, E::R2S}));
    add(6, x({E::P2Q2}), x({E::P1Q1, E::R1S, E::R2S}));

    return out;
}

std::vector<CycleCondition> replacement_conditions() {
    std::vector<CycleCondition> out;
    out.push_back(CycleCondition{x({E::P3P1}), x({E::P3Q3, E::R3S}), 0});
    out.push_back(CycleCondition{x({E::P3P1}), x({E::R3S}), 0});
    out.push_back(CycleCondition{x({E::P3Q3, E::R2S}), x({E::P2Q2}), 0});
    out.push_back(CycleCondition{x({E::P3Q3, E::R2S, E::R3S}), x({E::P2Q2}), 0});
    return out;
}

ThreePathCheck check_three_path(const ThreePathLengths& lengths) {
    ThreePathCheck result;
    for (const auto& set : three_path_condition_sets()) {
        const Rational& target = lengths.get(set.target);
        for (const auto& expr : set.forbidden) {
            for (const auto& value : expr.expand(lengths)) {
                if (value == target) {
                    result.violations.push_back(ConditionViolation{set.serial, expr, value});
                }
            }
        }
    }
    result.ok = result.violations.empty();
    return result;
}

bool check_four_cycle(const Rational& pq, const Rational& rs) {
    return pq != rs;
}

}  // namespace ppg
