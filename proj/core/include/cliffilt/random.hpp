#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "cliffilt/matrix.hpp"

namespace cliffilt {

/// Seeded generator for the randomized searches, samplers and property tests.
/// Every randomized entry point takes one of these, so output is reproducible.
class Rng {
 public:
  static constexpr std::uint64_t kDefaultSeed = 1;

  explicit Rng(std::uint64_t seed = kDefaultSeed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  std::size_t index(std::size_t n);
  bool coin(double p = 0.5);
  /// a / b with |a| <= bound, 1 <= b <= bound.
  Rational small_rational(long bound = 3);
  Vector vector(std::size_t n, long bound = 3);
  /// Integer vector with roughly `density` nonzero entries, never all zero for n > 0.
  Vector sparse_vector(std::size_t n, double density, long bound = 2);
  Matrix matrix(std::size_t rows, std::size_t cols, long bound = 3);
  /// Unimodular-ish random invertible matrix (product of elementary factors).
  Matrix invertible(std::size_t n, long bound = 2);

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace cliffilt
