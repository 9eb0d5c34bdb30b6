#include "lienil/chevalley.hpp"

#include <cstdlib>
#include <string>

#include "lienil/errors.hpp"

namespace lienil {
namespace {

Root add(const Root& a, const Root& b, int sign = 1) {
  Root r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + sign * b[i];
  return r;
}

// Largest p with b - p a a root (of either sign).
int string_depth(const RootSystem& rs, const Root& a, const Root& b) {
  int p = 0;
  Root cur = b;
  while (true) {
    cur = add(cur, a, -1);
    if (!rs.is_root(cur)) return p;
    ++p;
  }
}

// Signed root: positive root index with a sign.
struct Signed {
  std::size_t idx;
  int sign;
};

class Builder {
 public:
  explicit Builder(const RootSystem& rs) : rs_(rs), n_(rs.size()), table_(n_ * n_, 0), extraspecial_(n_) {}

  void run() {
    for (std::size_t xi = 0; xi < n_; ++xi) {
      const Root& target = rs_.root(xi);
      if (degree(target) < 2) continue;
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < xi; ++a) {
        auto b = rs_.index_of(add(target, rs_.root(a), -1));
        if (b && a < *b) pairs.emplace_back(a, *b);
      }
      if (pairs.empty()) throw InternalError("non-simple root " + to_string(target) + " has no decomposition");
      // Pairs are generated with increasing first component: the first is extraspecial.
      const auto [g, d] = pairs.front();
      extraspecial_[xi] = pairs.front();
      set(g, d, string_depth(rs_, rs_.root(g), rs_.root(d)) + 1);

      const Rational xi_norm = rs_.inner_product(target, target);
      const Rational ngd = at(g, d);
      for (std::size_t k = 1; k < pairs.size(); ++k) {
        const auto [a, b] = pairs[k];
        Rational sum;
        const Root b_minus_g = add(rs_.root(b), rs_.root(g), -1);
        if (rs_.is_root(b_minus_g)) {
          sum += general({b, 1}, {g, -1}) * general({a, 1}, {d, -1}) / norm(b_minus_g);
        }
        const Root a_minus_g = add(rs_.root(a), rs_.root(g), -1);
        if (rs_.is_root(a_minus_g)) {
          sum += general({g, -1}, {a, 1}) * general({b, 1}, {d, -1}) / norm(a_minus_g);
        }
        const Rational value = sum * xi_norm / ngd;
        if (!value.is_integer()) throw InternalError("non-integral structure constant");
        const auto small = value.small();
        const int expected = string_depth(rs_, rs_.root(a), rs_.root(b)) + 1;
        if (!small || std::abs(small->first) != expected) {
          throw InternalError("structure constant N(" + to_string(rs_.root(a)) + ", " + to_string(rs_.root(b)) +
                              ") = " + value.str() + " has the wrong magnitude");
        }
        set(a, b, static_cast<int>(small->first));
      }
    }
  }

  std::vector<int> take_table() { return std::move(table_); }
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> take_extraspecial() {
    return std::move(extraspecial_);
  }

 private:
  void set(std::size_t a, std::size_t b, int v) {
    table_[a * n_ + b] = v;
    table_[b * n_ + a] = -v;
  }
  Rational at(std::size_t a, std::size_t b) const { return Rational(table_[a * n_ + b]); }
  Rational norm(const Root& r) const { return rs_.inner_product(r, r); }

  // N(x, y) for arbitrary roots x, y with x + y a nonzero root, reduced to
  // already-known positive pairs via N(-a,-b) = -N(a,b) and the cyclic
  // relation N(x,y)/(z,z) = N(y,z)/(x,x) = N(z,x)/(y,y) for x + y + z = 0.
  Rational general(Signed x, Signed y) const {
    if (x.sign > 0 && y.sign > 0) return at(x.idx, y.idx);
    if (x.sign < 0 && y.sign < 0) return -at(x.idx, y.idx);
    if (x.sign < 0) return -general(y, x);
    const Root& a = rs_.root(x.idx);
    const Root& b = rs_.root(y.idx);
    if (auto c = rs_.index_of(add(b, a, -1))) {
      const Root& cr = rs_.root(*c);
      return norm(cr) / norm(b) * at(*c, x.idx);
    }
    if (auto c = rs_.index_of(add(a, b, -1))) {
      const Root& cr = rs_.root(*c);
      return -(norm(cr) / norm(a)) * at(y.idx, *c);
    }
    return Rational(0);
  }

  const RootSystem& rs_;
  std::size_t n_;
  std::vector<int> table_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> extraspecial_;
};

}  // namespace

ChevalleyConstants::ChevalleyConstants(const RootSystem& rs) : n_(rs.size()) {
  Builder b(rs);
  b.run();
  table_ = b.take_table();
  extraspecial_ = b.take_extraspecial();
}

std::optional<std::pair<std::size_t, std::size_t>> ChevalleyConstants::extraspecial_pair(std::size_t root) const {
  return extraspecial_.at(root);
}

NilpotentAlgebra nilradical(const RootSystem& rs) {
  const ChevalleyConstants n(rs);
  NilpotentAlgebra alg(rs.size());
  for (std::size_t a = 0; a < rs.size(); ++a) {
    for (std::size_t b = a + 1; b < rs.size(); ++b) {
      if (n(a, b) == 0) continue;
      const auto target = rs.index_of(add(rs.root(a), rs.root(b)));
      if (!target) throw InternalError("nonzero constant on a non-root sum");
      alg.set_bracket(a, b, SparseVector{{*target, Rational(n(a, b))}});
    }
  }
  return alg;
}

JacobiReport verify_jacobi(const NilpotentAlgebra& a, std::size_t limit) {
  const std::size_t d = a.dim();
  JacobiReport report;
  Vector acc(d);
  std::vector<std::size_t> touched;
  // acc += [[x_p, x_q], x_r]
  auto add_term = [&](std::size_t p, std::size_t q, std::size_t r) {
    const SparseVector inner = a.bracket_basis(p, q);
    for (const auto& [l, c] : inner) {
      if (l == r) continue;
      const SparseVector& outer = l < r ? a.upper(l, r) : a.upper(r, l);
      for (const auto& [k, v] : outer) {
        if (acc[k].is_zero()) touched.push_back(k);
        if (l < r) {
          acc[k].add_mul(c, v);
        } else {
          acc[k].sub_mul(c, v);
        }
      }
    }
  };
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      const bool ij = !a.upper(i, j).empty();
      for (std::size_t k = j + 1; k < d; ++k) {
        if (!ij && a.upper(j, k).empty() && a.upper(i, k).empty()) continue;
        add_term(i, j, k);
        add_term(j, k, i);
        add_term(k, i, j);
        bool bad = false;
        for (std::size_t t : touched) {
          if (!acc[t].is_zero()) bad = true;
          acc[t] = Rational();
        }
        touched.clear();
        if (bad) {
          report.passed = false;
          if (report.violations.size() < limit) report.violations.push_back({i, j, k});
        }
      }
    }
  }
  return report;
}

}  // namespace lienil
