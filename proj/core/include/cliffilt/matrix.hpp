#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "cliffilt/rational.hpp"

namespace cliffilt {

/// Row vector over Q.
using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
///
/// Repo-wide convention: vectors are rows and a matrix acts on the right, so
/// the map x -> x M goes from Q^rows to Q^cols, and "first A, then B" is A * B.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(std::span<const Vector> rows, std::size_t cols);
  static Matrix scalar(std::size_t n, const Rational& value);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  [[nodiscard]] std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  [[nodiscard]] Vector row_vector(std::size_t r) const;
  void set_row(std::size_t r, std::span<const Rational> values);

  [[nodiscard]] Matrix transpose() const;
  [[nodiscard]] Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& m);
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] bool is_square() const { return rows_ == cols_; }
  [[nodiscard]] Rational trace() const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(const Rational& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// x M for a row vector x.
[[nodiscard]] Vector apply(std::span<const Rational> x, const Matrix& m);

[[nodiscard]] Matrix vstack(const Matrix& top, const Matrix& bottom);
[[nodiscard]] Matrix hstack(const Matrix& left, const Matrix& right);
[[nodiscard]] Matrix direct_sum(const Matrix& a, const Matrix& b);
[[nodiscard]] bool is_zero(std::span<const Rational> v);

struct RrefResult {
  Matrix reduced;                    ///< nonzero rows only
  std::vector<std::size_t> pivots;   ///< pivot column of each row, strictly increasing
};

/// Reduced row-echelon form; zero rows are dropped so the result has rank rows.
[[nodiscard]] RrefResult rref(const Matrix& m);
[[nodiscard]] std::size_t rank(const Matrix& m);

/// Basis (as rows) of { x : x M = 0 }.
[[nodiscard]] Matrix left_kernel(const Matrix& m);
/// Basis (as rows) of { y : M y^T = 0 }.
[[nodiscard]] Matrix right_kernel(const Matrix& m);
/// Throws ContractError when m is singular.
[[nodiscard]] Matrix inverse(const Matrix& m);
/// The map x -> x M is injective, i.e. M has full row rank.
[[nodiscard]] bool is_injective(const Matrix& m);

/// Incremental Gaussian elimination over a fixed number of columns.
///
/// Rows are reduced against the current pivot set on insertion, so memory stays
/// bounded by the rank even when far more rows are fed in.
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols) {}

  /// Returns true when the row was independent of the rows seen so far.
  bool add(Vector row);
  [[nodiscard]] std::size_t rank() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] RrefResult finish() const;
  /// Basis (as rows) of { y : r . y = 0 for every inserted row r }.
  [[nodiscard]] Matrix solution_space() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;           // each row has leading entry 1 at pivots_[k]
  std::vector<std::size_t> pivots_;
};

}  // namespace cliffilt
