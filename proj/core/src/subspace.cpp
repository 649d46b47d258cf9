#include "cliffilt/subspace.hpp"

#include "cliffilt/error.hpp"

namespace cliffilt {

Subspace::Subspace(std::size_t ambient_dim, RrefResult form)
    : ambient_dim_(ambient_dim), basis_(std::move(form.reduced)), pivots_(std::move(form.pivots)) {
  if (basis_.rows() == 0) basis_ = Matrix(0, ambient_dim);
}

Subspace Subspace::zero(std::size_t ambient_dim) { return Subspace(ambient_dim, {Matrix(0, ambient_dim), {}}); }

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(ambient_dim, {Matrix::identity(ambient_dim), std::move(pivots)});
}

Subspace Subspace::span(const Matrix& rows) { return Subspace(rows.cols(), rref(rows)); }

Subspace Subspace::span(std::span<const Vector> rows, std::size_t ambient_dim) {
  return span(Matrix::from_rows(rows, ambient_dim));
}

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices) {
  Matrix m(indices.size(), ambient_dim);
  for (std::size_t k = 0; k < indices.size(); ++k) {
    if (indices[k] >= ambient_dim) throw DimensionError("Subspace::coordinate: index out of range");
    m(k, indices[k]) = Rational(1);
  }
  return span(m);
}

bool Subspace::contains(std::span<const Rational> v) const {
  if (v.size() != ambient_dim_) throw DimensionError("Subspace::contains: vector length mismatch");
  // In RREF the only candidate combination uses the pivot entries of v as coefficients.
  Vector residual(v.begin(), v.end());
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const Rational c = v[pivots_[k]];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < ambient_dim_; ++j) residual[j].sub_mul(c, basis_(k, j));
  }
  return cliffilt::is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) throw DimensionError("Subspace::contains: ambient mismatch");
  if (other.dim() > dim()) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Vector Subspace::coordinates(std::span<const Rational> v) const {
  if (!contains(v)) throw ContractError("Subspace::coordinates: vector not in subspace");
  Vector c(pivots_.size());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

Matrix Subspace::coordinates(const Matrix& m) const {
  if (m.cols() != ambient_dim_) throw DimensionError("Subspace::coordinates: column mismatch");
  Matrix c(m.rows(), dim());
  for (std::size_t r = 0; r < m.rows(); ++r) c.set_row(r, coordinates(m.row(r)));
  return c;
}

Matrix Subspace::annihilator() const { return right_kernel(basis_).transpose(); }

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_sum: ambient dimension mismatch");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace_intersect: ambient dimension mismatch");
  const std::size_t n = a.ambient_dim();
  if (a.is_zero() || b.is_zero()) return Subspace::zero(n);
  // u A = w B  <=>  [u w] [A; -B] = 0; the intersection is spanned by u A.
  const Matrix kernel = left_kernel(vstack(a.basis(), b.basis() * Rational(-1)));
  const Matrix u = kernel.block(0, 0, kernel.rows(), a.dim());
  return Subspace::span(u * a.basis());
}

Subspace image(const Matrix& m, const Subspace& a) {
  if (m.rows() != a.ambient_dim()) throw DimensionError("image: matrix rows do not match ambient dimension");
  return Subspace::span(a.basis() * m);
}

std::size_t quotient_dim(const Subspace& a, const Subspace& b) {
  if (!a.contains(b)) throw ContractError("quotient_dim: second subspace is not contained in the first");
  return a.dim() - b.dim();
}

Matrix express_in_basis(const Matrix& basis, const Matrix& vectors) {
  const Subspace s = Subspace::span(basis);
  if (s.dim() != basis.rows()) throw ContractError("express_in_basis: basis rows are dependent");
  const Matrix coords = s.coordinates(vectors);
  if (basis.rows() == 0) return coords;
  // basis = T * canonical, so vectors = (coords * T^-1) * basis.
  return coords * inverse(s.coordinates(basis));
}

}  // namespace cliffilt
