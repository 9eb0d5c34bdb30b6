#include "lienil/nilpotent_algebra.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {

NilpotentAlgebra::NilpotentAlgebra(std::size_t dim) : dim_(dim), table_(dim * (dim ? dim - 1 : 0) / 2) {}

void NilpotentAlgebra::check_index(std::size_t i) const {
  if (i >= dim_) throw InputError("basis index " + std::to_string(i) + " out of range for dimension " + std::to_string(dim_));
}

SparseVector NilpotentAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  check_index(i);
  check_index(j);
  if (i == j) return {};
  if (i < j) return table_[pair_index(i, j)];
  SparseVector v = table_[pair_index(j, i)];
  for (auto& [k, c] : v) c = -c;
  return v;
}

Rational NilpotentAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  for (const auto& [idx, c] : bracket_basis(i, j)) {
    if (idx == k) return c;
  }
  return Rational(0);
}

void NilpotentAlgebra::set_bracket(std::size_t i, std::size_t j, SparseVector value) {
  check_index(i);
  check_index(j);
  if (i == j) throw InputError("cannot set the bracket of a basis vector with itself");
  std::sort(value.begin(), value.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector clean;
  for (std::size_t n = 0; n < value.size(); ++n) {
    auto& [k, c] = value[n];
    check_index(k);
    if (n > 0 && value[n - 1].first == k) throw InputError("duplicate output index in bracket");
    if (c.is_zero()) continue;
    clean.emplace_back(k, i < j ? std::move(c) : -c);
  }
  table_[i < j ? pair_index(i, j) : pair_index(j, i)] = std::move(clean);
}

void NilpotentAlgebra::set_bracket(std::size_t i, std::size_t j, std::span<const Rational> dense) {
  if (dense.size() != dim_) throw InputError("bracket value has the wrong length");
  set_bracket(i, j, to_sparse(dense));
}

std::size_t NilpotentAlgebra::nonzero_constants() const {
  std::size_t n = 0;
  for (const auto& v : table_) n += v.size();
  return n;
}

SparseVector to_sparse(std::span<const Rational> dense) {
  SparseVector s;
  for (std::size_t k = 0; k < dense.size(); ++k) {
    if (!dense[k].is_zero()) s.emplace_back(k, dense[k]);
  }
  return s;
}

Vector to_dense(const SparseVector& s, std::size_t n) {
  Vector v(n);
  for (const auto& [k, c] : s) v.at(k) = c;
  return v;
}

namespace {

// out += coef * [x_i, x_j]
void accumulate_basis_bracket(const NilpotentAlgebra& a, Vector& out, const Rational& coef, std::size_t i, std::size_t j) {
  if (i == j) return;
  const SparseVector& v = i < j ? a.upper(i, j) : a.upper(j, i);
  if (i < j) {
    for (const auto& [k, c] : v) out[k].add_mul(coef, c);
  } else {
    for (const auto& [k, c] : v) out[k].sub_mul(coef, c);
  }
}

std::vector<std::size_t> support(std::span<const Rational> v) {
  std::vector<std::size_t> s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (!v[k].is_zero()) s.push_back(k);
  }
  return s;
}

// [u, x_g] for a basis vector x_g.
Vector bracket_with_basis(const NilpotentAlgebra& a, std::span<const Rational> u, std::size_t g) {
  Vector out(a.dim());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (!u[i].is_zero()) accumulate_basis_bracket(a, out, u[i], i, g);
  }
  return out;
}

// Coordinates of vectors of n^t modulo n^(t+1) with respect to a chosen set of
// coset representatives.
class QuotientCoordinates {
 public:
  QuotientCoordinates(const std::vector<Vector>& reps, const Subspace& sub)
      : sub_(sub), sub_pivots_(sub.pivots()), count_(reps.size()) {
    const std::size_t d = sub.ambient_dim();
    RowEchelon aug(d + count_);
    for (std::size_t a = 0; a < count_; ++a) {
      Vector row = reduced(reps[a]);
      row.resize(d + count_);
      row[d + a] = 1;
      aug.insert(std::move(row));
    }
    const Matrix m = aug.matrix();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      auto row = m.row(r);
      std::size_t p = 0;
      while (row[p].is_zero()) ++p;
      if (p >= d) throw InternalError("coset representatives are dependent modulo the next filtration term");
      pivots_.push_back(p);
      image_.emplace_back(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(d));
      transform_.emplace_back(row.begin() + static_cast<std::ptrdiff_t>(d), row.end());
    }
  }

  Vector coordinates(std::span<const Rational> w) const {
    Vector wbar = reduced(w);
    Vector coords(count_);
    for (std::size_t r = 0; r < pivots_.size(); ++r) {
      const Rational f = wbar[pivots_[r]];
      if (f.is_zero()) continue;
      for (std::size_t a = 0; a < count_; ++a) {
        if (!transform_[r][a].is_zero()) coords[a].add_mul(f, transform_[r][a]);
      }
      for (std::size_t k = 0; k < wbar.size(); ++k) {
        if (!image_[r][k].is_zero()) wbar[k].sub_mul(f, image_[r][k]);
      }
    }
    if (!is_zero(wbar)) throw InternalError("bracket does not lie in the expected filtration term");
    return coords;
  }

 private:
  Vector reduced(std::span<const Rational> v) const {
    Vector w(v.begin(), v.end());
    for (std::size_t r = 0; r < sub_pivots_.size(); ++r) {
      const Rational c = w[sub_pivots_[r]];
      if (c.is_zero()) continue;
      auto row = sub_.basis().row(r);
      for (std::size_t k = sub_pivots_[r]; k < w.size(); ++k) {
        if (!row[k].is_zero()) w[k].sub_mul(c, row[k]);
      }
    }
    return w;
  }

  const Subspace& sub_;
  std::vector<std::size_t> sub_pivots_;
  std::size_t count_;
  std::vector<std::size_t> pivots_;
  std::vector<Vector> image_;
  std::vector<Vector> transform_;
};

}  // namespace

Vector bracket(const NilpotentAlgebra& a, std::span<const Rational> x, std::span<const Rational> y) {
  if (x.size() != a.dim() || y.size() != a.dim()) throw InputError("bracket: vector length does not match algebra dimension");
  Vector out(a.dim());
  const auto sx = support(x);
  const auto sy = support(y);
  for (std::size_t i : sx) {
    for (std::size_t j : sy) {
      if (i == j) continue;
      accumulate_basis_bracket(a, out, x[i] * y[j], i, j);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Lower central series

Subspace Filtration::term(std::size_t i) const {
  if (i == 0) throw InputError("filtration terms are indexed from 1");
  if (i <= terms.size()) return terms[i - 1];
  return Subspace(terms.empty() ? 0 : terms.front().ambient_dim());
}

std::vector<std::size_t> Filtration::dims() const {
  std::vector<std::size_t> d;
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

Filtration lower_central_series(const NilpotentAlgebra& a) {
  const std::size_t d = a.dim();
  Filtration f;
  if (d == 0) {
    f.terms.push_back(Subspace(0));
    return f;
  }

  // [n, n] is spanned by the structure-constant vectors themselves.
  RowEchelon derived(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!a.upper(i, j).empty()) derived.insert(to_dense(a.upper(i, j), d));
    }
  }
  if (derived.rank() == d) throw NotNilpotent("[n, n] = n: the algebra is not nilpotent");

  // Unit vectors at the non-pivot columns of [n, n] span a complement G. For a
  // nilpotent algebra G generates n, and n^i is spanned by the left-normed
  // brackets of elements of G of length >= i; U_k collects those of length k.
  std::vector<std::size_t> gens;
  {
    const auto piv = derived.pivots();
    std::set<std::size_t> pivset(piv.begin(), piv.end());
    for (std::size_t c = 0; c < d; ++c) {
      if (!pivset.count(c)) gens.push_back(c);
    }
  }
  std::vector<Matrix> layers;
  {
    RowEchelon u1(d);
    for (std::size_t g : gens) u1.insert(unit_vector(d, g));
    layers.push_back(u1.matrix());
  }
  while (true) {
    if (layers.size() > d) throw NotNilpotent("lower central series does not terminate");
    const Matrix& prev = layers.back();
    RowEchelon next(d);
    for (std::size_t r = 0; r < prev.rows(); ++r) {
      for (std::size_t g : gens) next.insert(bracket_with_basis(a, prev.row(r), g));
    }
    if (next.rank() == 0) break;
    layers.push_back(next.matrix());
  }

  const std::size_t c = layers.size();
  f.terms.assign(c + 1, Subspace(d));
  RowEchelon acc(d);
  for (std::size_t k = c; k-- > 0;) {
    for (std::size_t r = 0; r < layers[k].rows(); ++r) acc.insert(layers[k].row_vector(r));
    f.terms[k] = Subspace::from_echelon(acc);
  }
  if (acc.rank() != d) throw NotNilpotent("the generators of n / [n, n] do not generate n: not nilpotent");
  if (c >= 2 && !(f.terms[1] == Subspace::from_echelon(derived))) {
    throw InputError("structure constants are inconsistent with the Jacobi identity");
  }
  f.nilpotency_class = c;
  return f;
}

// ---------------------------------------------------------------------------
// Graded pieces and pairings

std::size_t GradedAlgebra::dim(std::size_t degree) const {
  if (degree == 0 || degree > pieces.size()) return 0;
  return pieces[degree - 1].size();
}

std::vector<std::size_t> GradedAlgebra::dims() const {
  std::vector<std::size_t> d;
  for (const auto& p : pieces) d.push_back(p.size());
  return d;
}

const std::vector<Vector>& GradedAlgebra::piece(std::size_t degree) const {
  static const std::vector<Vector> empty;
  if (degree == 0 || degree > pieces.size()) return empty;
  return pieces[degree - 1];
}

GradedAlgebra graded(const NilpotentAlgebra& a, const Filtration& f) {
  if (!f.terms.empty() && f.terms.front().ambient_dim() != a.dim()) {
    throw InputError("filtration does not belong to this algebra");
  }
  GradedAlgebra g;
  g.filtration = f;
  for (std::size_t i = 1; i <= f.nilpotency_class; ++i) {
    const Subspace cur = f.term(i);
    const auto next_piv = f.term(i + 1).pivots();
    const std::set<std::size_t> skip(next_piv.begin(), next_piv.end());
    const auto cur_piv = cur.pivots();
    std::vector<Vector> reps;
    for (std::size_t r = 0; r < cur.dim(); ++r) {
      if (!skip.count(cur_piv[r])) reps.push_back(cur.basis().row_vector(r));
    }
    g.pieces.push_back(std::move(reps));
  }
  return g;
}

bool BilinearPairing::is_zero() const {
  return std::all_of(tensor.begin(), tensor.end(), [](const Vector& v) { return lienil::is_zero(v); });
}

Matrix BilinearPairing::right_matrix() const {
  Matrix m(left_dim * target_dim, right_dim);
  for (std::size_t a = 0; a < left_dim; ++a)
    for (std::size_t b = 0; b < right_dim; ++b)
      for (std::size_t c = 0; c < target_dim; ++c) m(a * target_dim + c, b) = at(a, b)[c];
  return m;
}

Matrix BilinearPairing::left_matrix() const {
  Matrix m(right_dim * target_dim, left_dim);
  for (std::size_t a = 0; a < left_dim; ++a)
    for (std::size_t b = 0; b < right_dim; ++b)
      for (std::size_t c = 0; c < target_dim; ++c) m(b * target_dim + c, a) = at(a, b)[c];
  return m;
}

BilinearPairing graded_pairing(const GradedAlgebra& g, const NilpotentAlgebra& a, std::size_t i, std::size_t j) {
  if (i == 0 || j == 0) throw InputError("graded_pairing: degrees start at 1");
  BilinearPairing p;
  p.left_degree = i;
  p.right_degree = j;
  const auto& left = g.piece(i);
  const auto& right = g.piece(j);
  const auto& target = g.piece(i + j);
  p.left_dim = left.size();
  p.right_dim = right.size();
  p.target_dim = target.size();
  p.tensor.assign(p.left_dim * p.right_dim, Vector(p.target_dim));
  if (p.target_dim == 0 || p.left_dim == 0 || p.right_dim == 0) return p;

  const Subspace below = g.filtration.term(i + j + 1);
  const QuotientCoordinates coords(target, below);
  for (std::size_t x = 0; x < p.left_dim; ++x) {
    for (std::size_t y = 0; y < p.right_dim; ++y) {
      p.tensor[x * p.right_dim + y] = coords.coordinates(bracket(a, left[x], right[y]));
    }
  }
  return p;
}

Subspace right_kernel(const BilinearPairing& p) { return kernel(p.right_matrix()); }

Subspace left_kernel(const BilinearPairing& p) { return kernel(p.left_matrix()); }

NilpotentAlgebra graded_structure_constants(const GradedAlgebra& g, const NilpotentAlgebra& a) {
  const std::size_t c = g.nilpotency_class();
  std::vector<std::size_t> offset(c + 2, 0);
  for (std::size_t i = 1; i <= c; ++i) offset[i + 1] = offset[i] + g.dim(i);
  NilpotentAlgebra out(offset[c + 1]);
  for (std::size_t i = 1; i <= c; ++i) {
    for (std::size_t j = i; i + j <= c; ++j) {
      const BilinearPairing p = graded_pairing(g, a, i, j);
      for (std::size_t x = 0; x < p.left_dim; ++x) {
        for (std::size_t y = 0; y < p.right_dim; ++y) {
          const std::size_t gx = offset[i] + x;
          const std::size_t gy = offset[j] + y;
          if (gx == gy) continue;
          SparseVector v;
          const Vector& coords = p.at(x, y);
          for (std::size_t k = 0; k < coords.size(); ++k) {
            if (!coords[k].is_zero()) v.emplace_back(offset[i + j] + k, coords[k]);
          }
          out.set_bracket(gx, gy, std::move(v));
        }
      }
    }
  }
  return out;
}

NilpotentAlgebra change_basis(const NilpotentAlgebra& a, const Matrix& m) {
  const std::size_t d = a.dim();
  if (m.rows() != d || m.cols() != d) throw InputError("change_basis: matrix must be dim x dim");
  const Matrix minv = inverse(m);
  NilpotentAlgebra out(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const Vector w = bracket(a, m.row(i), m.row(j));
      if (is_zero(w)) continue;
      out.set_bracket(i, j, w * minv);
    }
  }
  return out;
}

}  // namespace lienil
