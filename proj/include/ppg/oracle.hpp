#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "ppg/graph.hpp"
#include "ppg/placement.hpp"
#include "ppg/rational.hpp"

namespace ppg {

struct QueryRecord {
    PointId a = 0;
    PointId b = 0;
    Rational answer;
};

// Full record of a query game: the batches asked per round, the answers
// given, and optionally the placement the algorithm finally claimed.
struct Transcript {
    long n = 0;
    std::vector<std::vector<QueryRecord>> rounds;
    std::optional<Placement> claim;

    // Query graph after `upto_round` rounds (0 = all); edges tagged round 1
    // for the first batch and round 2 for everything later.
    Ppg to_ppg(int upto_round = 0) const;
};

// Distance-query answering service. Batches must be submitted one round at
// a time; answers within a batch are positionally aligned with the queries.
class Oracle {
public:
    virtual ~Oracle() = default;

    virtual long point_count() const = 0;

    std::vector<Rational> answer_round(const std::vector<std::pair<PointId, PointId>>& batch);

    int rounds_answered() const { return static_cast<int>(transcript_.rounds.size()); }
    const Transcript& transcript() const { return transcript_; }
    void record_claim(const Placement& p) { transcript_.claim = p; }

    // Ground-truth positions when this oracle has them (honest oracles only).
    virtual const std::vector<Rational>* hidden_positions() const { return nullptr; }

protected:
    virtual std::vector<Rational> do_answer(
        int round, const std::vector<std::pair<PointId, PointId>>& batch) = 0;

private:
    Transcript transcript_;
};

// A concrete set of hidden positions on the line.
struct HiddenInstance {
    std::vector<Rational> positions;  // pairwise distinct
    std::uint64_t seed = 0;

    static HiddenInstance random(long n, std::uint64_t seed);
    static HiddenInstance from_positions(std::vector<Rational> positions);
};

// Exact distances for a batch of pairs.
std::vector<Rational> honest_answer(const HiddenInstance& inst,
                                    const std::vector<std::pair<PointId, PointId>>& batch);

class HonestOracle : public Oracle {
public:
    explicit HonestOracle(HiddenInstance inst) : inst_(std::move(inst)) {}
    HonestOracle(long n, std::uint64_t seed) : inst_(HiddenInstance::random(n, seed)) {}

    long point_count() const override { return static_cast<long>(inst_.positions.size()); }
    const std::vector<Rational>* hidden_positions() const override { return &inst_.positions; }
    const HiddenInstance& instance() const { return inst_; }

protected:
    std::vector<Rational> do_answer(
        int round, const std::vector<std::pair<PointId, PointId>>& batch) override {
        return honest_answer(inst_, batch);
    }

private:
    HiddenInstance inst_;
};

}  // namespace ppg
