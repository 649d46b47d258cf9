#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "cliffilt/matrix.hpp"

namespace cliffilt {

/// Univariate polynomial over Q, coefficients stored from the constant term up.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  static Polynomial constant(const Rational& c);
  static Polynomial x();

  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] const std::vector<Rational>& coefficients() const { return coeffs_; }
  [[nodiscard]] Rational coefficient(std::size_t k) const;
  [[nodiscard]] const Rational& leading() const { return coeffs_.back(); }

  [[nodiscard]] Polynomial monic() const;
  [[nodiscard]] Polynomial derivative() const;
  [[nodiscard]] Rational operator()(const Rational& at) const;
  /// p(A) for a square matrix A.
  [[nodiscard]] Matrix operator()(const Matrix& a) const;
  [[nodiscard]] std::string str() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

[[nodiscard]] DivMod divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero when both inputs are zero).
[[nodiscard]] Polynomial gcd(const Polynomial& a, const Polynomial& b);

struct ExtendedGcd {
  Polynomial g;  ///< monic gcd
  Polynomial s;
  Polynomial t;  ///< s a + t b = g
};
[[nodiscard]] ExtendedGcd extended_gcd(const Polynomial& a, const Polynomial& b);

/// Yun's algorithm: returns squarefree, pairwise coprime s_1, s_2, ... with
/// p = lc * prod_k s_k^k. Entries may be the constant 1.
[[nodiscard]] std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

/// Factors a monic squarefree polynomial with integer coefficients into monic
/// integer factors that are irreducible over Q. Candidate factors come from
/// floating-point roots and are accepted only after exact division, so
/// correctness never depends on rounding. When recombination fails the
/// remaining cofactor is returned unsplit.
[[nodiscard]] std::vector<Polynomial> factor_squarefree_integer(const Polynomial& p);

/// Minimal polynomial (monic) of a square matrix, by exact Krylov dependence on powers.
[[nodiscard]] Polynomial minimal_polynomial(const Matrix& a);

}  // namespace cliffilt
