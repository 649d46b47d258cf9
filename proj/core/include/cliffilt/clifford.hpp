#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "cliffilt/certificate.hpp"
#include "cliffilt/matrix.hpp"
#include "cliffilt/subspace.hpp"

namespace cliffilt {

/// Subset of generators as a bitmask; bit i stands for generator i+1.
using Blade = std::uint32_t;

[[nodiscard]] inline int blade_grade(Blade b) { return __builtin_popcount(b); }
/// Sorted, 1-based generator indices of a blade.
[[nodiscard]] std::vector<int> blade_indices(Blade b);
[[nodiscard]] Blade blade_from_indices(const std::vector<int>& one_based);

/// Sparse linear combination of basis monomials.
using BladeCombination = std::vector<std::pair<Blade, Rational>>;

/// Clifford superalgebra Cl(S) on N odd generators with
/// {g_i, g_j} = 2 gram(i, j) 1, for a symmetric positive-definite gram matrix.
///
/// The basis is the set of ordered monomials g_{i1} ... g_{ik} (i1 < ... < ik),
/// ordered by cardinality and then lexicographically. Monomial products are
/// computed by direct relation rewriting; for a non-diagonal gram the
/// rewriting table is built eagerly at construction so the algebra is
/// immutable afterwards.
class CliffordAlgebra {
 public:
  static constexpr std::size_t kMaxGenerators = 12;

  explicit CliffordAlgebra(std::size_t n);
  explicit CliffordAlgebra(Matrix gram);

  [[nodiscard]] std::size_t generators() const { return n_; }
  [[nodiscard]] std::size_t dimension() const { return std::size_t{1} << n_; }
  [[nodiscard]] const Matrix& gram() const { return gram_; }
  [[nodiscard]] bool is_diagonal() const { return diagonal_; }
  [[nodiscard]] bool is_standard() const;

  [[nodiscard]] const std::vector<Blade>& basis() const { return basis_; }
  [[nodiscard]] std::size_t index_of(Blade b) const { return index_[b]; }

  /// e_a * e_b for basis monomials.
  [[nodiscard]] BladeCombination monomial_product(Blade a, Blade b) const;

  friend bool operator==(const CliffordAlgebra& a, const CliffordAlgebra& b) {
    return a.n_ == b.n_ && a.gram_ == b.gram_;
  }

 private:
  void build_basis();
  void build_rewrite_table();

  std::size_t n_ = 0;
  Matrix gram_;
  bool diagonal_ = true;
  std::vector<Blade> basis_;
  std::vector<std::size_t> index_;
  // right_mul_[blade * n + g] = e_blade * g_{g+1}, only for non-diagonal gram.
  std::vector<BladeCombination> right_mul_;
};

/// Reference implementation of a monomial product by rewriting a word of
/// generators with the defining relations, independent of any table.
[[nodiscard]] BladeCombination product_by_rewriting(const Matrix& gram, Blade a, Blade b);

class CliffordElement {
 public:
  explicit CliffordElement(std::shared_ptr<const CliffordAlgebra> algebra);

  static CliffordElement scalar(std::shared_ptr<const CliffordAlgebra> algebra, const Rational& c);
  /// Generator g_i, 1-based.
  static CliffordElement generator(std::shared_ptr<const CliffordAlgebra> algebra, std::size_t i);
  static CliffordElement monomial(std::shared_ptr<const CliffordAlgebra> algebra, Blade b,
                                  const Rational& c = Rational(1));
  /// From coefficients in the canonical basis order.
  static CliffordElement from_vector(std::shared_ptr<const CliffordAlgebra> algebra, const Vector& v);

  [[nodiscard]] const CliffordAlgebra& algebra() const { return *algebra_; }
  [[nodiscard]] const std::shared_ptr<const CliffordAlgebra>& algebra_ptr() const { return algebra_; }
  [[nodiscard]] const std::map<Blade, Rational>& terms() const { return terms_; }
  [[nodiscard]] Rational coefficient(Blade b) const;
  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  /// 0 or 1 when every term has the same grade parity, -1 otherwise (and for zero).
  [[nodiscard]] int parity() const;
  [[nodiscard]] Vector to_vector() const;

  CliffordElement& operator+=(const CliffordElement& other);
  CliffordElement& operator-=(const CliffordElement& other);
  CliffordElement& operator*=(const Rational& s);

  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(CliffordElement a, const Rational& s) { return a *= s; }
  friend CliffordElement operator*(const Rational& s, CliffordElement a) { return a *= s; }
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return *a.algebra_ == *b.algebra_ && a.terms_ == b.terms_;
  }

 private:
  void add_term(Blade b, const Rational& c);
  void require_same_algebra(const CliffordElement& other) const;

  std::shared_ptr<const CliffordAlgebra> algebra_;
  std::map<Blade, Rational> terms_;

  friend CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);
};

/// Bilinear Clifford product; throws DimensionError for elements of different algebras.
[[nodiscard]] CliffordElement clifford_product(const CliffordElement& a, const CliffordElement& b);
[[nodiscard]] inline CliffordElement operator*(const CliffordElement& a, const CliffordElement& b) {
  return clifford_product(a, b);
}

/// F_p(Cl): span of monomials with |I| <= p and |I| = p (mod 2), as a subspace
/// of the 2^N-dimensional coefficient space. Zero for p < 0.
[[nodiscard]] Subspace filtration_level(const CliffordAlgebra& algebra, int p);

/// Verifies F_p * F_q within F_{p+q} over 0 <= p, q <= N + 1 for the standard filtration.
[[nodiscard]] Certificate check_filtered_superalgebra(const CliffordAlgebra& algebra);
/// Same check against an arbitrary candidate filtration.
[[nodiscard]] Certificate check_filtered_superalgebra(const CliffordAlgebra& algebra,
                                                      const std::function<Subspace(int)>& level, int top);

/// The matrix of left multiplication by a basis monomial on the coefficient space
/// (row convention: row k is e_b * basis[k]).
[[nodiscard]] Matrix left_multiplication(const CliffordAlgebra& algebra, Blade b);
/// Right multiplication x -> x * e_b.
[[nodiscard]] Matrix right_multiplication(const CliffordAlgebra& algebra, Blade b);

}  // namespace cliffilt
