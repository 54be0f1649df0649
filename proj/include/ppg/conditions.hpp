#pragma once

#include <set>
#include <string>
#include <vector>

#include "ppg/rational.hpp"

namespace ppg {

// Named edges of the three-path component. P1P2, P2P3, P3P1 are the gaps
// between the pre-fixed outer points; the rest are queried edges.
enum class CompEdge {
    P1P2, P2P3, P3P1,
    P1Q1, P2Q2, P3Q3,
    Q1R1, Q2R2, Q3R3,
    R1S, R2S, R3S,
};

const char* comp_edge_name(CompEdge e);

// Concrete lengths for the component: three fixed gaps plus nine edges.
struct ThreePathLengths {
    Rational p1p2, p2p3, p3p1;
    Rational p1q1, p2q2, p3q3;
    Rational q1r1, q2r2, q3r3;
    Rational r1s, r2s, r3s;

    const Rational& get(CompEdge e) const;
    Rational& get(CompEdge e);

    // The three outer points are collinear, so one gap is the sum of the
    // other two.
    bool gaps_collinear() const;
};

// A formal length expression |t0 +/- t1 +/- ... +/- tk|: the first term is
// fixed positive, each later term carries a free sign.
struct LengthExpr {
    std::vector<CompEdge> terms;

    // Number of sign choices, before value deduplication.
    int expansion_count() const { return 1 << (terms.size() > 0 ? terms.size() - 1 : 0); }

    // All sign evaluations in a fixed order, absolute value applied.
    std::vector<Rational> expand_all(const ThreePathLengths& lengths) const;
    // Deduplicated values.
    std::set<Rational> expand(const ThreePathLengths& lengths) const;

    std::string str() const;
};

// One avoidance list: the target edge's length must avoid every expansion
// of every forbidden expression.
struct ConditionSet {
    CompEdge target;
    std::vector<LengthExpr> forbidden;
    int serial = 0;  // position in the printed list, 1-based

    int expansion_count() const;  // sum over forbidden expressions
};

// The six avoidance lists that make the component line rigid once its three
// outer points are fixed. None of them mentions a q-r edge, which is what
// lets those three edges wait until the second round.
std::vector<ConditionSet> three_path_condition_sets();

// One inequality between two expressions; 42 of these, in six groups of
// seven keyed by the drawing shape they rule out for the 7-cycle
// (p1, q1, r1, s, r2, q2, p2).
struct CycleCondition {
    LengthExpr lhs;
    LengthExpr rhs;
    int group = 0;  // 1..6

    bool mentions(CompEdge e) const;
    std::string str() const;
};

std::vector<CycleCondition> seven_cycle_conditions();

// The four conditions that replace the first 7-cycle condition
// (|p1p2| != |q2r2|) with conditions free of q-r edges, derived from the
// four drawings of the chain p3-q3-r3-s compatible with that shape.
std::vector<CycleCondition> replacement_conditions();

struct ConditionViolation {
    int serial = 0;
    LengthExpr expr;
    Rational value;
};

struct ThreePathCheck {
    bool ok = false;
    std::vector<ConditionViolation> violations;
};

// Evaluates all six avoidance lists against concrete lengths.
ThreePathCheck check_three_path(const ThreePathLengths& lengths);

// Rigidity condition for a 4-cycle whose opposite pair of points is already
// fixed: the two edges at the fixed points must differ.
bool check_four_cycle(const Rational& pq, const Rational& rs);

}  // namespace ppg
