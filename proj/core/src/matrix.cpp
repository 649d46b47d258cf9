#include "cliffilt/matrix.hpp"

#include <algorithm>
#include <numeric>

#include "cliffilt/error.hpp"

namespace cliffilt {

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("Matrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) { return scalar(n, Rational(1)); }

Matrix Matrix::scalar(std::size_t n, const Rational& value) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
  return m;
}

Matrix Matrix::from_rows(std::span<const Vector> rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return {s.begin(), s.end()};
}

void Matrix::set_row(std::size_t r, std::span<const Rational> values) {
  if (values.size() != cols_) throw DimensionError("Matrix::set_row: length mismatch");
  std::copy(values.begin(), values.end(), data_.begin() + static_cast<std::ptrdiff_t>(r * cols_));
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionError("Matrix::block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& m) {
  if (r0 + m.rows() > rows_ || c0 + m.cols() > cols_) throw DimensionError("Matrix::set_block out of range");
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) (*this)(r0 + r, c0 + c) = m(r, c);
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

Rational Matrix::trace() const {
  if (!is_square()) throw DimensionError("Matrix::trace of non-square matrix");
  Rational t;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("Matrix +: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw DimensionError("Matrix -: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("Matrix *: inner dimension mismatch");
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      const Rational neg = -a(i, k);
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j).sub_mul(neg, b(k, j));
    }
  }
  return c;
}

Vector apply(std::span<const Rational> x, const Matrix& m) {
  if (x.size() != m.rows()) throw DimensionError("apply: vector length does not match matrix rows");
  Vector y(m.cols());
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (x[k].is_zero()) continue;
    const Rational neg = -x[k];
    for (std::size_t j = 0; j < m.cols(); ++j) y[j].sub_mul(neg, m(k, j));
  }
  return y;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DimensionError("vstack: column mismatch");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  m.set_block(0, 0, top);
  m.set_block(top.rows(), 0, bottom);
  return m;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw DimensionError("hstack: row mismatch");
  Matrix m(left.rows(), left.cols() + right.cols());
  m.set_block(0, 0, left);
  m.set_block(0, left.cols(), right);
  return m;
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t col = 0; col < a.cols() && lead_row < a.rows(); ++col) {
    std::size_t pick = lead_row;
    while (pick < a.rows() && a(pick, col).is_zero()) ++pick;
    if (pick == a.rows()) continue;
    if (pick != lead_row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pick, c), a(lead_row, c));
    }
    const Rational inv = Rational(1) / a(lead_row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(lead_row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead_row || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) {
        if (!a(lead_row, c).is_zero()) a(r, c).sub_mul(factor, a(lead_row, c));
      }
    }
    pivots.push_back(col);
    ++lead_row;
  }
  return {a.block(0, 0, lead_row, a.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix right_kernel(const Matrix& m) {
  const auto [reduced, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  Matrix kernel(m.cols() - pivots.size(), m.cols());
  std::size_t k = 0;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    kernel(k, free) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) kernel(k, pivots[r]) = -reduced(r, free);
    ++k;
  }
  return kernel;
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

Matrix inverse(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("inverse: non-square matrix");
  const std::size_t n = m.rows();
  const auto [reduced, pivots] = rref(hstack(m, Matrix::identity(n)));
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) throw ContractError("inverse: singular matrix");
  return reduced.block(0, n, n, n);
}

bool is_injective(const Matrix& m) { return rank(m) == m.rows(); }

bool RowReducer::add(Vector row) {
  if (row.size() != cols_) throw DimensionError("RowReducer::add: length mismatch");
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    const std::size_t p = pivots_[k];
    if (row[p].is_zero()) continue;
    const Rational factor = row[p];
    const Vector& basis = rows_[k];
    for (std::size_t c = p; c < cols_; ++c) {
      if (!basis[c].is_zero()) row[c].sub_mul(factor, basis[c]);
    }
  }
  std::size_t lead = 0;
  while (lead < cols_ && row[lead].is_zero()) ++lead;
  if (lead == cols_) return false;
  const Rational inv = Rational(1) / row[lead];
  for (std::size_t c = lead; c < cols_; ++c) row[c] *= inv;
  rows_.push_back(std::move(row));
  pivots_.push_back(lead);
  return true;
}

RrefResult RowReducer::finish() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return pivots_[a] < pivots_[b]; });
  Matrix m(rows_.size(), cols_);
  std::vector<std::size_t> pivots;
  for (std::size_t r = 0; r < order.size(); ++r) {
    m.set_row(r, rows_[order[r]]);
    pivots.push_back(pivots_[order[r]]);
  }
  // Back substitution: clear entries above each pivot.
  for (std::size_t r = pivots.size(); r-- > 0;) {
    const std::size_t p = pivots[r];
    for (std::size_t above = 0; above < r; ++above) {
      if (m(above, p).is_zero()) continue;
      const Rational factor = m(above, p);
      for (std::size_t c = p; c < cols_; ++c) {
        if (!m(r, c).is_zero()) m(above, c).sub_mul(factor, m(r, c));
      }
    }
  }
  return {std::move(m), std::move(pivots)};
}

Matrix RowReducer::solution_space() const { return right_kernel(finish().reduced); }

}  // namespace cliffilt
