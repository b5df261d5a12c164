#pragma once

#include <cmath>
#include <cstdint>

namespace bmc {

inline uint64_t mix64(uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// splitmix64 stream keyed by (seed, stream). One stream per Monte-Carlo path,
// keyed by the global seed and the path index, so results are independent of
// how paths are scheduled across threads.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream) {
    state_ = mix64(mix64(seed) ^ (0x9e3779b97f4a7c15ull * (stream + 1)));
  }

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // [0, 1)
  double uniform() { return (next_u64() >> 11) * 0x1.0p-53; }

  // (0, 1), safe under log
  double uniform_open() { return (next_u64() >> 11) * 0x1.0p-53 + 0x1.0p-54; }

  double exponential(double rate) { return -std::log(uniform_open()) / rate; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double r = std::sqrt(-2.0 * std::log(uniform_open()));
    double a = 6.28318530717958647692 * uniform();
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t state_ = 0;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace bmc
