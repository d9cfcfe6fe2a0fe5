#pragma once
#include <cstdint>

namespace jpgeom {

// Documented generator for every seeded suite: the MMIX linear-congruential
// step, emitting the upper 32 bits. Identical seeds give identical draws on
// every platform, so reported failures are reproducible from the seed alone.
class Lcg {
 public:
  explicit Lcg(std::uint64_t seed = 0) : state_(seed) {}

  std::uint64_t next() {
    state_ = state_ * 6364136223846793005ULL + 1442695040888963407ULL;
    return state_ >> 32;
  }

  // Inclusive bounds.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace jpgeom
