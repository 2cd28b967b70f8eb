#pragma once

#include <cstdint>
#include <limits>
#include <string>

namespace nstab {

// Counter-based pseudo-random generator (Philox-style 2x64, 10 rounds).
//
// Output block i of stream s under seed k is a pure function of (k, s, i),
// so any draw can be reproduced without replaying the sequence and disjoint
// streams never share state. Monte Carlo drivers give each trial its own
// stream id; trials can then run in any order, or in parallel, and still
// produce identical samples.
class Rng {
 public:
  Rng() : Rng(0, 0) {}
  Rng(std::uint64_t seed, std::uint64_t stream)
      : key_(mix64(seed + kGolden)), hi_(mix64(stream + kGolden)), lo_(0),
        buffered_(false), buffer_(0) {}

  // Next 64 uniform bits.
  std::uint64_t next_u64() {
    if (buffered_) {
      buffered_ = false;
      return buffer_;
    }
    std::uint64_t x0 = lo_++;
    std::uint64_t x1 = hi_;
    std::uint64_t k = key_;
    for (int round = 0; round < 10; ++round) {
      const unsigned __int128 prod =
          static_cast<unsigned __int128>(kMultiplier) * x0;
      const std::uint64_t hi = static_cast<std::uint64_t>(prod >> 64);
      const std::uint64_t lo = static_cast<std::uint64_t>(prod);
      x0 = hi ^ k ^ x1;
      x1 = lo;
      k += kGolden;
    }
    buffer_ = x1;
    buffered_ = true;
    return x0;
  }

  // Uniform double on the open interval (0, 1); never returns 0 or 1, so
  // log(u) and log1p(-u) are always finite.
  double uniform01() {
    const std::uint64_t bits = next_u64() >> 11;  // top 53 bits
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t kMultiplier = 0xD2B74407B1CE6E93ull;
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

  // SplitMix64 finalizer; decorrelates small seeds/stream ids.
  static std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t hi_;  // stream id (high counter word)
  std::uint64_t lo_;  // block counter within the stream
  bool buffered_;
  std::uint64_t buffer_;
};

}  // namespace nstab
