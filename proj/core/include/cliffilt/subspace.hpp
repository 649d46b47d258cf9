#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cliffilt/matrix.hpp"

namespace cliffilt {

/// Linear subspace of Q^n held by its canonical (reduced row-echelon) basis.
///
/// Two subspaces are equal as sets exactly when their bases agree entry for
/// entry, so operator== is syntactic.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Row space of the given spanning rows.
  static Subspace span(const Matrix& rows);
  static Subspace span(std::span<const Vector> rows, std::size_t ambient_dim);
  /// Coordinate subspace spanned by the unit vectors at the given indices.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices);

  [[nodiscard]] std::size_t ambient_dim() const { return ambient_dim_; }
  [[nodiscard]] std::size_t dim() const { return basis_.rows(); }
  [[nodiscard]] bool is_zero() const { return dim() == 0; }
  [[nodiscard]] bool is_full() const { return dim() == ambient_dim_; }
  [[nodiscard]] const Matrix& basis() const { return basis_; }
  [[nodiscard]] const std::vector<std::size_t>& pivots() const { return pivots_; }

  [[nodiscard]] bool contains(std::span<const Rational> v) const;
  [[nodiscard]] bool contains(const Subspace& other) const;

  /// Coordinates of v in the canonical basis; throws ContractError if v is not in the span.
  [[nodiscard]] Vector coordinates(std::span<const Rational> v) const;
  /// Row-wise coordinates of every row of m.
  [[nodiscard]] Matrix coordinates(const Matrix& m) const;

  /// Columns spanning the annihilator: x lies in this subspace iff x * result == 0.
  [[nodiscard]] Matrix annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  Subspace(std::size_t ambient_dim, RrefResult form);

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

[[nodiscard]] Subspace subspace_sum(const Subspace& a, const Subspace& b);
[[nodiscard]] Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Image of a under x -> x m.
[[nodiscard]] Subspace image(const Matrix& m, const Subspace& a);
/// dim a - dim b; throws ContractError unless b is contained in a.
[[nodiscard]] std::size_t quotient_dim(const Subspace& a, const Subspace& b);

/// Coefficients C with C * basis = vectors, for a basis given by independent
/// rows. Throws ContractError if the rows are dependent or a vector is outside their span.
[[nodiscard]] Matrix express_in_basis(const Matrix& basis, const Matrix& vectors);

}  // namespace cliffilt
