#include "lienil/exactlin.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <random>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n);
  v.at(i) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------
// Matrix

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged rows in Matrix::from_rows");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

Matrix Matrix::from_integers(const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InputError("ragged rows in Matrix::from_integers");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

std::vector<Vector> Matrix::row_vectors() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vector(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product dimension mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

Vector operator*(std::span<const Rational> v, const Matrix& m) {
  if (v.size() != m.rows()) throw InputError("vector-matrix product dimension mismatch");
  Vector out(m.cols());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!m(k, j).is_zero()) out[j] += v[k] * m(k, j);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

// ---------------------------------------------------------------------------
// RowEchelon

bool RowEchelon::reduce(Vector& v) const {
  if (v.size() != cols_) throw InputError("vector length does not match echelon width");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational c = v[leads_[r]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[r];
    for (std::size_t j = leads_[r]; j < cols_; ++j) {
      if (!row[j].is_zero()) v[j].sub_mul(c, row[j]);
    }
  }
  return is_zero(v);
}

bool RowEchelon::insert(Vector v) {
  if (reduce(v)) return false;
  std::size_t lead = 0;
  while (v[lead].is_zero()) ++lead;
  if (!v[lead].is_one()) {
    const Rational inv = Rational(1) / v[lead];
    for (std::size_t j = lead; j < cols_; ++j) {
      if (!v[j].is_zero()) v[j] *= inv;
    }
  }
  for (auto& row : rows_) {
    const Rational c = row[lead];
    if (c.is_zero()) continue;
    for (std::size_t j = lead; j < cols_; ++j) {
      if (!v[j].is_zero()) row[j].sub_mul(c, v[j]);
    }
  }
  rows_.push_back(std::move(v));
  leads_.push_back(lead);
  return true;
}

std::vector<std::size_t> RowEchelon::pivots() const {
  std::vector<std::size_t> p = leads_;
  std::sort(p.begin(), p.end());
  return p;
}

Matrix RowEchelon::matrix() const {
  std::vector<std::size_t> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return leads_[a] < leads_[b]; });
  Matrix m(rows_.size(), cols_);
  for (std::size_t r = 0; r < order.size(); ++r) std::copy(rows_[order[r]].begin(), rows_[order[r]].end(), m.row(r).begin());
  return m;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  RowEchelon e(ambient_dim);
  for (const auto& v : vectors) e.insert(v);
  return from_echelon(e);
}

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::from_echelon(const RowEchelon& e) {
  Subspace s(e.cols());
  s.basis_ = e.matrix();
  return s;
}

std::vector<std::size_t> Subspace::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    auto row = basis_.row(r);
    std::size_t c = 0;
    while (row[c].is_zero()) ++c;
    p.push_back(c);
  }
  return p;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim_) return false;
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!member(*this, other.basis().row(r))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Free functions

Matrix rref(const Matrix& m) {
  RowEchelon e(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) e.insert(m.row_vector(r));
  return e.matrix();
}

std::size_t rank(const Matrix& m) { return rref(m).rows(); }

Subspace kernel(const Matrix& m) {
  const Matrix r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<std::size_t> pivot_of_row;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (r(i, c).is_zero()) ++c;
    is_pivot[c] = true;
    pivot_of_row.push_back(c);
  }
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.cols(), f);
    for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_of_row[i]] = -r(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, m.cols());
}

bool member(const Subspace& s, std::span<const Rational> v) {
  if (v.size() != s.ambient_dim()) {
    throw InputError("member: vector length " + std::to_string(v.size()) + " != ambient dimension " +
                     std::to_string(s.ambient_dim()));
  }
  Vector w(v.begin(), v.end());
  const auto piv = s.pivots();
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Rational c = w[piv[r]];
    if (c.is_zero()) continue;
    auto row = s.basis().row(r);
    for (std::size_t j = piv[r]; j < w.size(); ++j) {
      if (!row[j].is_zero()) w[j].sub_mul(c, row[j]);
    }
  }
  return is_zero(w);
}

Rational determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    const Rational inv = Rational(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      const Rational f = a(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j).sub_mul(f, a(k, j));
      }
    }
  }
  return det;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw InputError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Matrix inv = Matrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) throw InputError("matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    const Rational s = Rational(1) / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(k, j).is_zero()) a(k, j) *= s;
      if (!inv(k, j).is_zero()) inv(k, j) *= s;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k).is_zero()) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        if (!a(k, j).is_zero()) a(i, j).sub_mul(f, a(k, j));
        if (!inv(k, j).is_zero()) inv(i, j).sub_mul(f, inv(k, j));
      }
    }
  }
  return inv;
}

Matrix random_unimodular(std::size_t d, std::uint64_t seed) {
  if (d == 0) throw InputError("random_unimodular: dimension must be at least 1");
  constexpr std::int64_t kEntryCap = 3;

  std::mt19937_64 rng(seed);
  auto below = [&rng](std::size_t n) { return static_cast<std::size_t>(rng() % n); };

  std::vector<std::vector<std::int64_t>> m(d, std::vector<std::int64_t>(d, 0));
  std::vector<std::size_t> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  for (std::size_t i = d; i > 1; --i) std::swap(perm[i - 1], perm[below(i)]);
  for (std::size_t i = 0; i < d; ++i) m[i][perm[i]] = (rng() & 1) ? -1 : 1;

  if (d == 1) {
    m[0][0] = -1;
    return Matrix::from_integers(m);
  }

  const std::size_t shears = 2 * d;
  std::size_t applied = 0;
  for (std::size_t attempt = 0; applied < shears && attempt < 16 * d; ++attempt) {
    const std::size_t src = below(d);
    const std::size_t dst = below(d);
    const std::int64_t coef = (rng() & 1) ? 1 : -1;
    if (src == dst) continue;
    bool ok = true;
    for (std::size_t k = 0; k < d && ok; ++k) {
      const std::int64_t v = m[dst][k] + coef * m[src][k];
      ok = v >= -kEntryCap && v <= kEntryCap;
    }
    if (!ok) continue;
    for (std::size_t k = 0; k < d; ++k) m[dst][k] += coef * m[src][k];
    ++applied;
  }
  bool identity = true;
  for (std::size_t i = 0; i < d && identity; ++i)
    for (std::size_t k = 0; k < d && identity; ++k) identity = m[i][k] == (i == k ? 1 : 0);
  if (identity) {
    for (auto& x : m[0]) x = -x;
  }
  return Matrix::from_integers(m);
}

}  // namespace lienil
