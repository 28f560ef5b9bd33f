#pragma once

#include <cstdint>

#include "symcurv/rational.hpp"

namespace symcurv {

// SplitMix64. Deterministic across platforms, which std:: distributions
// are not; all seeded sampling in the library goes through this.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  long long in_range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Numerator in [-3, 3], denominator in {1,2,3,4}: keeps rational growth
  // manageable through second covariant derivatives.
  Rational small_rational() {
    long long num = in_range(-3, 3);
    long long den = in_range(1, 4);
    return Rational(num, den);
  }

  Rational small_nonzero_rational() {
    for (;;) {
      Rational r = small_rational();
      if (r != 0) return r;
    }
  }

  static std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
    Rng g(a * 0x9e3779b97f4a7c15ull + b + 0x243f6a8885a308d3ull);
    return g.next_u64();
  }

 private:
  std::uint64_t state_;
};

}  // namespace symcurv
