#pragma once

#include <array>
#include <cstdint>

#include "relm/serialize.hpp"

namespace relm {

/// splitmix64; used to expand one seed into independent sub-seeds.
struct SplitMix64 {
  uint64_t state;

  explicit SplitMix64(uint64_t seed) : state(seed) {}

  uint64_t next() {
    state += 0x9E3779B97F4A7C15ull;
    uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
};

/// xoshiro256++ with a Box-Muller normal generator. Chosen over the stdlib
/// distributions because std::normal_distribution is implementation-defined:
/// the model file persists the generator state and replayed draws must be
/// identical after a load, which requires a fully specified algorithm. State
/// is 4 words plus the cached Box-Muller spare.
class Rng {
public:
  Rng() : Rng(0) {}

  explicit Rng(uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : state_) w = sm.next();
  }

  uint64_t next_u64() {
    uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Standard normal draw.
  double normal();

  /// Uniform integer in [0, bound), bound > 0. Multiply-shift map; the
  /// O(2^-64) bias is irrelevant at replay-buffer scales.
  uint64_t below(uint64_t bound) {
    return static_cast<uint64_t>((static_cast<__uint128_t>(next_u64()) * bound) >> 64);
  }

  void save(serialize::Writer& w) const;
  void load(serialize::Reader& r);

  bool operator==(const Rng&) const = default;

private:
  static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  std::array<uint64_t, 4> state_{};
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace relm
