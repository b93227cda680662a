#ifndef CHEVKIT_RNG_HPP
#define CHEVKIT_RNG_HPP

#include <cstdint>

namespace chevkit {

/// SplitMix64 stream.  state += 0x9E3779B97F4A7C15, then the output is
///   z = state; z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9;
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB; return z ^ (z >> 31).
/// uniform(n) is next() % n.  Fixing the stream this way keeps sampled
/// test vectors identical across builds and platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed = 0) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t uniform(uint64_t n) { return next() % n; }
  // Inclusive range [lo, hi].
  int64_t range(int64_t lo, int64_t hi) { return lo + static_cast<int64_t>(uniform(uint64_t(hi - lo + 1))); }

  uint64_t state() const { return state_; }

 private:
  uint64_t state_;
};

}  // namespace chevkit

#endif  // CHEVKIT_RNG_HPP
