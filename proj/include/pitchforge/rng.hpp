#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>

namespace pitchforge {

namespace detail {

// SplitMix64 output function. Statistically strong enough for simulation
// streams and fully portable (integer-only).
inline uint64_t splitmix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline uint64_t mix(uint64_t a, uint64_t b) {
  return splitmix64(splitmix64(a) ^ (0x9e3779b97f4a7c15ULL + b));
}

} // namespace detail

// Counter-based random stream: the value sequence is a pure function of the
// key, so streams derived from (seed, lane, index) are reproducible no matter
// in which order or on how many threads they are consumed.
class RandomStream {
public:
  RandomStream() : key_(0) {}
  explicit RandomStream(uint64_t key) : key_(key) {}

  static RandomStream derive(uint64_t seed, uint64_t lane) {
    return RandomStream(detail::mix(seed, lane));
  }
  static RandomStream derive(uint64_t seed, uint64_t lane, uint64_t index) {
    return RandomStream(detail::mix(detail::mix(seed, lane), index));
  }

  // Child stream that does not disturb this stream's counter.
  RandomStream child(uint64_t lane) const { return RandomStream(detail::mix(key_, lane)); }

  uint64_t next_u64() { return detail::splitmix64(key_ + 0x9e3779b97f4a7c15ULL * (++counter_)); }

  // Uniform in [0, 1).
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform integer in [0, n). n == 0 returns 0.
  uint64_t uniform_index(uint64_t n) {
    if (n == 0) return 0;
    return uint64_t((__uint128_t(next_u64()) * n) >> 64);
  }

  bool bernoulli(double p) { return uniform() < p; }

  // Box-Muller; uses two uniforms per call. Implemented locally so results do
  // not depend on the standard library's distribution internals.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }

  double normal(double mean, double sigma) { return mean + sigma * normal(); }

  uint64_t key() const { return key_; }

private:
  uint64_t key_;
  uint64_t counter_ = 0;
};

} // namespace pitchforge
