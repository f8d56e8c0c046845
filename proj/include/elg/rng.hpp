#pragma once

#include <cstdint>

namespace elg {

/// Deterministic 64-bit generator (splitmix64). Used instead of <random>
/// engines/distributions so that seeded runs produce identical streams on
/// every platform, which the report golden files rely on.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  /// Uniform integer in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  /// Independent substream: distinct (tag, index) pairs give decorrelated
  /// generators regardless of draw counts elsewhere.
  Rng fork(std::uint64_t tag, std::uint64_t index = 0) const {
    Rng mix(state_ ^ (0x9e3779b97f4a7c15ULL * (tag + 1)));
    mix.next_u64();
    Rng sub(mix.next_u64() ^ (0xd1b54a32d192ed03ULL * (index + 1)));
    sub.next_u64();
    return sub;
  }

  /// FNV-1a tag for deriving substreams from string ids.
  static std::uint64_t tag(const char* s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 1099511628211ULL;
    return h;
  }

private:
  std::uint64_t state_;
};

}  // namespace elg
