#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "lienil/rational.hpp"

namespace lienil {

using Vector = std::vector<Rational>;

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Rational> v);

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Rows must all have the same length; `cols` is used when `rows` is empty.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_integers(const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  std::vector<Vector> row_vectors() const;

  Matrix transpose() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
/// Row vector times matrix.
Vector operator*(std::span<const Rational> v, const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Matrix& m);

// Incrementally maintained reduced row-echelon basis. Every stored row has a
// leading 1 and zeros in all other rows' pivot columns, so the rows form the
// canonical RREF of their span at all times (modulo row order, which is
// restored by `matrix()`).
class RowEchelon {
 public:
  explicit RowEchelon(std::size_t cols) : cols_(cols) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Reduces `v` in place modulo the current span. Returns true if it became zero.
  bool reduce(Vector& v) const;
  /// Adds `v` to the span. Returns true if the rank grew.
  bool insert(Vector v);
  bool contains(Vector v) const { return reduce(v); }

  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;
  /// Canonical RREF, rows ordered by pivot column.
  Matrix matrix() const;

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> leads_;
};

/// Linear subspace of Q^n stored as its canonical RREF basis.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  static Subspace from_echelon(const RowEchelon& e);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const { return basis_.row_vectors(); }
  std::vector<std::size_t> pivots() const;

  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_dim_;
  Matrix basis_;
};

/// Canonical reduced row-echelon form with zero rows dropped.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Right kernel {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Membership of `v` in `s`; throws InputError on a length mismatch.
bool member(const Subspace& s, std::span<const Rational> v);

Rational determinant(const Matrix& m);
/// Throws InputError if `m` is not square or singular.
Matrix inverse(const Matrix& m);

/// Deterministic d x d integer matrix of determinant +-1, built from a random
/// sign flip, a permutation and a bounded number of +-1 row shears with
/// entries capped in absolute value. Never the identity. Throws InputError for d = 0.
Matrix random_unimodular(std::size_t d, std::uint64_t seed);

}  // namespace lienil
