#pragma once

#include "loopforge/algebra.hpp"

#include <random>

namespace loopforge {

// Deterministic source for the randomized property suites; identical seeds
// give identical runs.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(g_);
  }
  Rational small_rational() {
    int num = uniform(-9, 9);
    int den = uniform(1, 3);
    return Rational(num, den);
  }
  Rational nonzero_rational() {
    Rational r = small_rational();
    return is_zero(r) ? Rational(1) : r;
  }

  // Random element supported on |degree| <= max_degree, as a combination of
  // a few core basis vectors, optionally with complement and c/d parts.
  GradedElement element(const AlgebraSpec& spec, const CoreBasis& cb,
                        int max_degree, bool with_complement, bool with_cd);

 private:
  std::mt19937_64 g_;
};

}  // namespace loopforge
