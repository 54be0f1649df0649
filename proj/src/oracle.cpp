#include "ppg/oracle.hpp"

#include <set>

#include "ppg/errors.hpp"
#include "ppg/rng.hpp"

namespace ppg {

Ppg Transcript::to_ppg(int upto_round) const {
    Ppg g(static_cast<int>(n));
    int last = upto_round > 0 ? upto_round : static_cast<int>(rounds.size());
    for (int r = 0; r < last && r < static_cast<int>(rounds.size()); ++r) {
        for (const auto& q : rounds[r]) {
            g.add_edge(q.a, q.b, r == 0 ? 1 : 2, q.answer);
        }
    }
    return g;
}

std::vector<Rational> Oracle::answer_round(
    const std::vector<std::pair<PointId, PointId>>& batch) {
    int round = rounds_answered() + 1;
    std::vector<Rational> answers = do_answer(round, batch);
    if (answers.size() != batch.size()) {
        throw Error("oracle answered the wrong number of queries");
    }
    std::vector<QueryRecord> records;
    records.reserve(batch.size());
    for (std::size_t i = 0; i < batch.size(); ++i) {
        records.push_back(QueryRecord{batch[i].first, batch[i].second, answers[i]});
    }
    transcript_.n = point_count();
    transcript_.rounds.push_back(std::move(records));
    return answers;
}

HiddenInstance HiddenInstance::random(long n, std::uint64_t seed) {
    if (n < 0) {
        throw Error("negative point count");
    }
    Rng rng(seed);
    std::set<long long> used;
    std::vector<Rational> positions;
    positions.reserve(n);
    // Wide integer range keeps accidental length coincidences vanishingly
    // rare while staying cheap for exact arithmetic.
    const long long span = 1LL << 47;
    while (static_cast<long>(positions.size()) < n) {
        long long v = rng.uniform(0, span);
        if (used.insert(v).second) {
            positions.push_back(Rational(v));
        }
    }
    HiddenInstance inst;
    inst.positions = std::move(positions);
    inst.seed = seed;
    return inst;
}

HiddenInstance HiddenInstance::from_positions(std::vector<Rational> positions) {
    if (!all_distinct(positions)) {
        throw DuplicateCoordinateError("hidden positions must be pairwise distinct");
    }
    HiddenInstance inst;
    inst.positions = std::move(positions);
    return inst;
}

std::vector<Rational> honest_answer(const HiddenInstance& inst,
                                    const std::vector<std::pair<PointId, PointId>>& batch) {
    std::vector<Rational> out;
    out.reserve(batch.size());
    long n = static_cast<long>(inst.positions.size());
    for (const auto& [a, b] : batch) {
        if (a < 0 || b < 0 || a >= n || b >= n) {
            throw UnknownPointError("query references an unknown point");
        }
        out.push_back(abs(inst.positions[a] - inst.positions[b]));
    }
    return out;
}

}  // namespace ppg
