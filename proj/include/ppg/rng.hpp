#pragma once

#include <cstdint>
#include <random>

namespace ppg {

// Single seeded generator; every random choice in the library flows through
// one of these so transcripts replay byte-identically.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // Uniform in [lo, hi], inclusive.
    long long uniform(long long lo, long long hi) {
        std::uniform_int_distribution<long long> d(lo, hi);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace ppg
