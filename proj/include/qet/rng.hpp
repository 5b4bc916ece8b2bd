#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace qet {

/// Seedable random source used by every stochastic operation.
///
/// The engine is xoshiro256++ seeded through SplitMix64, so constructing a
/// stream is cheap enough to create one per shot. Stream-split rule: the
/// child for index `i` of a stream with seed `s` is seeded with
/// `mix(s) ^ mix(i + 0x9e3779b97f4a7c15)`, where `mix` is the SplitMix64
/// finalizer. Children depend only on (seed, index), never on how many
/// numbers the parent has drawn, which makes per-shot and per-sample work
/// order-independent and parallelizable.
///
/// Satisfies UniformRandomBitGenerator, so std distributions accept it.
class Rng {
  public:
    using result_type = std::uint64_t;

    explicit Rng(std::uint64_t seed = 0);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform();
    /// Standard normal deviate.
    double normal();

    /// Independent child stream keyed by `index`.
    Rng child(std::uint64_t index) const;

    std::uint64_t seed() const { return seed_; }

  private:
    std::uint64_t seed_;
    std::array<std::uint64_t, 4> s_;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace qet
