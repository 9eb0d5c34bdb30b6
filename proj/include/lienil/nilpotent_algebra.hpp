#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "lienil/exactlin.hpp"

namespace lienil {

/// Sparse vector: (index, value) pairs, indices strictly increasing, values nonzero.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Finite-dimensional algebra given by antisymmetric structure constants
// [x_i, x_j] = sum_k c_ij^k x_k. Only the i < j half is stored.
//
// Nothing in here knows about roots: this is the anonymous side of the
// identification problem. Nilpotency is established by lower_central_series,
// the Jacobi identity by verify_jacobi.
class NilpotentAlgebra {
 public:
  explicit NilpotentAlgebra(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }

  /// [x_i, x_j]; antisymmetry is applied for i > j, and [x_i, x_i] = 0.
  SparseVector bracket_basis(std::size_t i, std::size_t j) const;
  /// c_ij^k.
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// Sets [x_i, x_j] (and implicitly [x_j, x_i]). Zero entries are dropped.
  /// Throws InputError for i == j or out-of-range indices.
  void set_bracket(std::size_t i, std::size_t j, SparseVector value);
  void set_bracket(std::size_t i, std::size_t j, std::span<const Rational> dense);

  /// Upper-triangular view: stored value for i < j.
  const SparseVector& upper(std::size_t i, std::size_t j) const { return table_[pair_index(i, j)]; }
  /// Count of nonzero c_ij^k with i < j.
  std::size_t nonzero_constants() const;

  friend bool operator==(const NilpotentAlgebra&, const NilpotentAlgebra&) = default;

 private:
  std::size_t pair_index(std::size_t i, std::size_t j) const { return i * dim_ - i * (i + 1) / 2 + (j - i - 1); }
  void check_index(std::size_t i) const;

  std::size_t dim_;
  std::vector<SparseVector> table_;
};

SparseVector to_sparse(std::span<const Rational> dense);
Vector to_dense(const SparseVector& s, std::size_t n);

/// Bilinear extension of the structure constants. Throws InputError on length mismatch.
Vector bracket(const NilpotentAlgebra& a, std::span<const Rational> x, std::span<const Rational> y);

// Lower central series n = n^1 > n^2 > ... > n^(c+1) = 0.
struct Filtration {
  /// terms[0] is the full space (n^1), the last term is zero.
  std::vector<Subspace> terms;
  /// c: the largest i with n^i != 0.
  std::size_t nilpotency_class = 0;

  /// n^i for i >= 1; zero subspace beyond the class.
  Subspace term(std::size_t i) const;
  std::vector<std::size_t> dims() const;
};

/// Throws NotNilpotent if the series stabilises at a nonzero subspace.
/// Assumes the Jacobi identity holds.
Filtration lower_central_series(const NilpotentAlgebra& a);

// Associated graded pieces gr^i = n^i / n^(i+1).
struct GradedAlgebra {
  Filtration filtration;
  /// pieces[i-1]: coset representatives spanning a complement of n^(i+1) in n^i.
  std::vector<std::vector<Vector>> pieces;

  std::size_t nilpotency_class() const { return pieces.size(); }
  /// dim gr^i, 0 outside 1..class.
  std::size_t dim(std::size_t degree) const;
  std::vector<std::size_t> dims() const;
  const std::vector<Vector>& piece(std::size_t degree) const;
};

/// Completes the RREF basis of each n^(i+1) to one of n^i using the RREF rows
/// of n^i whose pivots are not pivots of n^(i+1).
GradedAlgebra graded(const NilpotentAlgebra& a, const Filtration& f);

// Induced bracket gr^i x gr^j -> gr^(i+j).
struct BilinearPairing {
  std::size_t left_degree = 0;
  std::size_t right_degree = 0;
  std::size_t left_dim = 0;
  std::size_t right_dim = 0;
  std::size_t target_dim = 0;
  /// tensor[a * right_dim + b] = coordinates of [u_a, v_b] in the gr^(i+j) basis.
  std::vector<Vector> tensor;

  const Vector& at(std::size_t a, std::size_t b) const { return tensor[a * right_dim + b]; }
  bool is_zero() const;
  /// Matrix with rows indexed by (a, target coordinate) and columns by b.
  Matrix right_matrix() const;
  /// Matrix with rows indexed by (b, target coordinate) and columns by a.
  Matrix left_matrix() const;

  friend bool operator==(const BilinearPairing&, const BilinearPairing&) = default;
};

/// Degrees beyond the class give a zero pairing into a 0-dimensional target.
/// Throws InputError for a zero degree.
BilinearPairing graded_pairing(const GradedAlgebra& g, const NilpotentAlgebra& a, std::size_t i, std::size_t j);

/// {w in gr^j : pairing(u, w) = 0 for all u}, in gr^j coordinates.
Subspace right_kernel(const BilinearPairing& p);
/// {u in gr^i : pairing(u, w) = 0 for all w}, in gr^i coordinates.
Subspace left_kernel(const BilinearPairing& p);

/// Structure constants of the associated graded algebra in the basis obtained
/// by concatenating the pieces in degree order.
NilpotentAlgebra graded_structure_constants(const GradedAlgebra& g, const NilpotentAlgebra& a);

/// Same algebra in the basis y_i = sum_a m(i, a) x_a. Throws InputError if m
/// is singular or has the wrong shape.
NilpotentAlgebra change_basis(const NilpotentAlgebra& a, const Matrix& m);

}  // namespace lienil
