#include "cliffilt/random.hpp"

namespace cliffilt {

long Rng::uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(engine_); }

std::size_t Rng::index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(engine_); }

bool Rng::coin(double p) { return std::bernoulli_distribution(p)(engine_); }

Rational Rng::small_rational(long bound) { return Rational(uniform(-bound, bound), uniform(1, bound)); }

Vector Rng::vector(std::size_t n, long bound) {
  Vector v(n);
  for (auto& x : v) x = Rational(uniform(-bound, bound));
  return v;
}

Vector Rng::sparse_vector(std::size_t n, double density, long bound) {
  Vector v(n);
  if (n == 0) return v;
  bool any = false;
  for (auto& x : v) {
    if (!coin(density)) continue;
    long c = 0;
    while (c == 0) c = uniform(-bound, bound);
    x = Rational(c);
    any = true;
  }
  if (!any) v[index(n)] = Rational(1);
  return v;
}

Matrix Rng::matrix(std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(uniform(-bound, bound));
  return m;
}

Matrix Rng::invertible(std::size_t n, long bound) {
  Matrix m = Matrix::identity(n);
  if (n == 0) return m;
  for (std::size_t k = 0; k < 3 * n; ++k) {
    const std::size_t a = index(n), b = index(n);
    if (a == b) {
      long s = 0;
      while (s == 0) s = uniform(-bound, bound);
      for (std::size_t c = 0; c < n; ++c) m(a, c) *= Rational(s);
    } else {
      const Rational f(uniform(-bound, bound));
      for (std::size_t c = 0; c < n; ++c) m(a, c).sub_mul(f, m(b, c));
    }
  }
  return m;
}

}  // namespace cliffilt
