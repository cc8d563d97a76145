#pragma once

// Deterministic random draws.  std::mt19937_64 has a standard-specified
// output sequence, and the bounded mapping below is pinned here, so the same
// seed yields the same data on every platform (std::uniform_int_distribution
// would not: its algorithm is implementation-defined).

#include <cstdint>
#include <random>

namespace bgdc {

class DetRng {
 public:
  explicit DetRng(std::uint64_t seed) : eng_(seed) {}

  // Uniform-enough draw in [lo, hi]; modulo bias is irrelevant for test data.
  long long bounded(long long lo, long long hi) {
    return lo + static_cast<long long>(eng_() % std::uint64_t(hi - lo + 1));
  }

  std::uint64_t raw() { return eng_(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace bgdc
