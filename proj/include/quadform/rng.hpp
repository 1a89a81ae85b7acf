#pragma once

#include <cstdint>

namespace quadform {

// splitmix64: tiny seeded generator with identical output on every
// platform, so property-test trials are reproducible from a seed alone.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4B7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // uniform-ish integer in [0, n); n > 0.  Modulo bias is irrelevant for
  // these property suites, determinism is what matters.
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  // integer in [lo, hi] inclusive
  long range(long lo, long hi) {
    return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // derive an independent stream, e.g. per trial index
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0xA0761D6478BD642FULL * (salt + 1)));
    r.next_u64();
    return r;
  }

 private:
  std::uint64_t state_;
};

}  // namespace quadform
