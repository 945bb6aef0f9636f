#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace idim {

// Deterministic random source used everywhere in the toolkit.
//
// Engine: std::mt19937_64, whose output sequence is fixed by the C++ standard.
// Standard-library distributions are NOT used because their algorithms are
// implementation-defined; the transforms below are fixed instead:
//   uniform01     (bits >> 11) * 2^-53, in [0, 1)
//   below(n)      rejection sampling on the top of the 64-bit range
//   normal        Box-Muller on (u1, u2), u1 = 1 - uniform01(); the sine
//                 variate is cached and returned by the following call
//
// Independent streams are derived with substream_seed(seed, stream), a
// SplitMix64 mix of the two words. Generators give every point its own
// stream, so fills are independent of iteration order and thread count.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
    std::uint64_t below(std::uint64_t bound);
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t stream);

// First k entries of a seeded Fisher-Yates shuffle of 0..n-1. The result for
// k is a prefix of the result for any k' > k with the same rng state.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k, Rng& rng);

}  // namespace idim
