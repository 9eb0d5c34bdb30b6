#include <gtest/gtest.h>

#include <random>

#include "lienil/chevalley.hpp"
#include "lienil/errors.hpp"
#include "lienil/nilpotent_algebra.hpp"

using namespace lienil;

namespace {

NilpotentAlgebra heisenberg() {
  NilpotentAlgebra a(3);
  a.set_bracket(0, 1, SparseVector{{2, Rational(1)}});
  return a;
}

// Model filiform algebra: [x0, x_i] = x_(i+1) for 1 <= i <= d - 2.
NilpotentAlgebra filiform(std::size_t d) {
  NilpotentAlgebra a(d);
  for (std::size_t i = 1; i + 1 < d; ++i) a.set_bracket(0, i, SparseVector{{i + 1, Rational(1)}});
  return a;
}

NilpotentAlgebra canonical(Family f, int n) { return nilradical(build_root_system({f, n})); }

// Lower central series straight from the definition: n^(i+1) = span [n^i, n].
std::vector<Subspace> naive_lcs(const NilpotentAlgebra& a) {
  const std::size_t d = a.dim();
  std::vector<Subspace> out{Subspace::full(d)};
  while (out.back().dim() > 0) {
    std::vector<Vector> gens;
    for (const Vector& u : out.back().basis_vectors())
      for (std::size_t k = 0; k < d; ++k) gens.push_back(bracket(a, u, unit_vector(d, k)));
    Subspace next = Subspace::span(gens, d);
    if (next.dim() == out.back().dim()) throw NotNilpotent("stable");
    out.push_back(std::move(next));
  }
  return out;
}

Subspace degree_at_least(const RootSystem& rs, int i) {
  std::vector<Vector> gens;
  for (std::size_t r = 0; r < rs.size(); ++r)
    if (degree(rs.root(r)) >= i) gens.push_back(unit_vector(rs.size(), r));
  return Subspace::span(gens, rs.size());
}

NilpotentAlgebra obfuscated(const NilpotentAlgebra& a, std::uint64_t seed) {
  return change_basis(a, random_unimodular(a.dim(), seed));
}

}  // namespace

TEST(Bracket, Examples) {
  const NilpotentAlgebra h = heisenberg();
  const Vector x{Rational(1), Rational(2), Rational(3)};
  const Vector y{Rational(4), Rational(5), Rational(6)};
  EXPECT_EQ(bracket(h, x, y), (Vector{Rational(0), Rational(0), Rational(-3)}));
  EXPECT_EQ(bracket(h, y, x), (Vector{Rational(0), Rational(0), Rational(3)}));
  EXPECT_EQ(bracket(h, x, x), zero_vector(3));
  EXPECT_THROW(bracket(h, x, Vector{Rational(1)}), InputError);
  EXPECT_EQ(h.constant(1, 0, 2), Rational(-1));
  EXPECT_TRUE(h.bracket_basis(2, 2).empty());
}

TEST(SetBracket, Validation) {
  NilpotentAlgebra a(3);
  EXPECT_THROW(a.set_bracket(1, 1, SparseVector{}), InputError);
  EXPECT_THROW(a.set_bracket(0, 3, SparseVector{}), InputError);
  EXPECT_THROW(a.set_bracket(0, 1, SparseVector{{5, Rational(1)}}), InputError);
  EXPECT_THROW(a.set_bracket(0, 1, SparseVector{{2, Rational(1)}, {2, Rational(0)}}), InputError);
  a.set_bracket(1, 0, SparseVector{{2, Rational(3)}, {0, Rational(0)}});
  EXPECT_EQ(a.upper(0, 1), (SparseVector{{2, Rational(-3)}}));
}

TEST(LowerCentralSeries, Examples) {
  NilpotentAlgebra abelian(4);
  EXPECT_EQ(lower_central_series(abelian).dims(), (std::vector<std::size_t>{4, 0}));
  EXPECT_EQ(lower_central_series(abelian).nilpotency_class, 1u);
  EXPECT_EQ(lower_central_series(heisenberg()).dims(), (std::vector<std::size_t>{3, 1, 0}));
  const Filtration b3 = lower_central_series(canonical(Family::B, 3));
  EXPECT_EQ(b3.dims(), (std::vector<std::size_t>{9, 6, 4, 2, 1, 0}));
  EXPECT_EQ(b3.nilpotency_class, 5u);
  EXPECT_EQ(b3.term(9).dim(), 0u);
  EXPECT_EQ(lower_central_series(NilpotentAlgebra(0)).nilpotency_class, 0u);
}

TEST(LowerCentralSeries, NotNilpotent) {
  NilpotentAlgebra affine(2);
  affine.set_bracket(0, 1, SparseVector{{1, Rational(1)}});
  EXPECT_THROW(lower_central_series(affine), NotNilpotent);

  // sl2 (+) C with basis e, f, h, z.
  NilpotentAlgebra gl2(4);
  gl2.set_bracket(0, 1, SparseVector{{2, Rational(1)}});
  gl2.set_bracket(0, 2, SparseVector{{0, Rational(-2)}});
  gl2.set_bracket(1, 2, SparseVector{{1, Rational(2)}});
  EXPECT_THROW(lower_central_series(gl2), NotNilpotent);

  NilpotentAlgebra sl2(3);
  sl2.set_bracket(0, 1, SparseVector{{2, Rational(1)}});
  sl2.set_bracket(0, 2, SparseVector{{0, Rational(-2)}});
  sl2.set_bracket(1, 2, SparseVector{{1, Rational(2)}});
  EXPECT_THROW(lower_central_series(sl2), NotNilpotent);
}

TEST(LowerCentralSeries, MatchesDefinition) {
  std::vector<NilpotentAlgebra> cases{heisenberg(), filiform(2), filiform(5), filiform(8), NilpotentAlgebra(3)};
  for (const SimpleType& t : {SimpleType{Family::A, 4}, SimpleType{Family::B, 3}, SimpleType{Family::C, 4},
                              SimpleType{Family::D, 4}, SimpleType{Family::G, 2}}) {
    const NilpotentAlgebra a = nilradical(build_root_system(t));
    cases.push_back(a);
    cases.push_back(obfuscated(a, 11));
    cases.push_back(obfuscated(a, 12));
  }
  for (const NilpotentAlgebra& a : cases) {
    const auto oracle = naive_lcs(a);
    const Filtration f = lower_central_series(a);
    ASSERT_EQ(f.terms.size(), oracle.size());
    for (std::size_t i = 0; i < oracle.size(); ++i) EXPECT_EQ(f.terms[i], oracle[i]) << i;
  }
}

TEST(LowerCentralSeries, EqualsDegreeFiltration) {
  for (const SimpleType& t : {SimpleType{Family::A, 5}, SimpleType{Family::B, 4}, SimpleType{Family::C, 5},
                              SimpleType{Family::D, 5}, SimpleType{Family::E, 6}, SimpleType{Family::F, 4},
                              SimpleType{Family::G, 2}}) {
    const RootSystem rs = build_root_system(t);
    const Filtration f = lower_central_series(nilradical(rs));
    const int top = degree(highest_root(rs));
    EXPECT_EQ(f.nilpotency_class, static_cast<std::size_t>(top)) << t.name();
    for (int i = 1; i <= top + 1; ++i) EXPECT_EQ(f.term(i), degree_at_least(rs, i)) << t.name() << " " << i;
  }
}

TEST(Graded, DimsMatchHistogram) {
  for (const SimpleType& t : {SimpleType{Family::B, 5}, SimpleType{Family::E, 6}, SimpleType{Family::F, 4}}) {
    const RootSystem rs = build_root_system(t);
    const NilpotentAlgebra a = obfuscated(nilradical(rs), 3);
    const GradedAlgebra g = graded(a, lower_central_series(a));
    const auto h = degree_histogram(rs);
    EXPECT_EQ(g.dims(), std::vector<std::size_t>(h.begin() + 1, h.end())) << t.name();
  }
  const NilpotentAlgebra e6 = canonical(Family::E, 6);
  EXPECT_EQ(graded(e6, lower_central_series(e6)).dim(4), 5u);
}

TEST(Graded, GradedOfCanonicalNilradicalIsItself) {
  for (const SimpleType& t : {SimpleType{Family::A, 4}, SimpleType{Family::B, 4}, SimpleType{Family::C, 3},
                              SimpleType{Family::D, 5}, SimpleType{Family::F, 4}, SimpleType{Family::G, 2}}) {
    const NilpotentAlgebra a = nilradical(build_root_system(t));
    const GradedAlgebra g = graded(a, lower_central_series(a));
    EXPECT_EQ(graded_structure_constants(g, a), a) << t.name();
  }
}

TEST(Pairing, B3TopPairingIsNondegenerate) {
  const NilpotentAlgebra a = canonical(Family::B, 3);
  const GradedAlgebra g = graded(a, lower_central_series(a));
  const BilinearPairing p = graded_pairing(g, a, 2, 3);
  EXPECT_EQ(p.target_dim, 1u);
  EXPECT_EQ(p.left_dim, 2u);
  EXPECT_EQ(p.right_dim, 2u);
  EXPECT_EQ(right_kernel(p).dim(), 0u);
  EXPECT_EQ(left_kernel(p).dim(), 0u);
  EXPECT_THROW(graded_pairing(g, a, 0, 2), InputError);
}

TEST(Pairing, C3KernelIsTwiceE2) {
  const RootSystem rs = build_root_system({Family::C, 3});
  const NilpotentAlgebra a = nilradical(rs);
  const GradedAlgebra g = graded(a, lower_central_series(a));
  const BilinearPairing p = graded_pairing(g, a, 2, 3);
  EXPECT_EQ(p.target_dim, 1u);
  // gr^3 coordinates follow the root ordering: 2e2 = (0, 2, 1) precedes e1 + e3 = (1, 1, 1).
  ASSERT_EQ(rs.root(*rs.index_of(Root{0, 2, 1})), (Root{0, 2, 1}));
  EXPECT_LT(*rs.index_of(Root{0, 2, 1}), *rs.index_of(Root{1, 1, 1}));
  EXPECT_EQ(right_kernel(p), Subspace::span({unit_vector(2, 0)}, 2));
}

TEST(Pairing, ZeroPairingAndAntisymmetry) {
  const NilpotentAlgebra h = heisenberg();
  const GradedAlgebra gh = graded(h, lower_central_series(h));
  const BilinearPairing z = graded_pairing(gh, h, 1, 2);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.target_dim, 0u);
  EXPECT_EQ(right_kernel(z).dim(), 1u);
  EXPECT_EQ(left_kernel(z).dim(), 2u);

  const NilpotentAlgebra a = obfuscated(canonical(Family::B, 4), 5);
  const GradedAlgebra g = graded(a, lower_central_series(a));
  for (std::size_t i = 1; i <= 3; ++i) {
    for (std::size_t j = 1; j <= 3; ++j) {
      const BilinearPairing p = graded_pairing(g, a, i, j);
      const BilinearPairing q = graded_pairing(g, a, j, i);
      for (std::size_t x = 0; x < p.left_dim; ++x)
        for (std::size_t y = 0; y < p.right_dim; ++y) {
          Vector neg = q.at(y, x);
          for (Rational& r : neg) r = Rational(0) - r;
          EXPECT_EQ(p.at(x, y), neg);
        }
      EXPECT_EQ(right_kernel(p), left_kernel(q));
    }
  }
}

TEST(Pairing, IndependentOfRepresentatives) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (const SimpleType& t : {SimpleType{Family::B, 3}, SimpleType{Family::C, 4}, SimpleType{Family::G, 2}}) {
    const NilpotentAlgebra a = obfuscated(nilradical(build_root_system(t)), 9);
    const GradedAlgebra g = graded(a, lower_central_series(a));
    for (int trial = 0; trial < 5; ++trial) {
      GradedAlgebra moved = g;
      for (std::size_t deg = 1; deg <= g.nilpotency_class(); ++deg) {
        const auto deeper = g.filtration.term(deg + 1).basis_vectors();
        for (Vector& rep : moved.pieces[deg - 1])
          for (const Vector& w : deeper) {
            const Rational c(coef(rng));
            for (std::size_t k = 0; k < rep.size(); ++k) rep[k] += c * w[k];
          }
      }
      for (std::size_t i = 1; i <= g.nilpotency_class(); ++i)
        for (std::size_t j = 1; i + j <= g.nilpotency_class(); ++j)
          EXPECT_EQ(graded_pairing(moved, a, i, j), graded_pairing(g, a, i, j)) << t.name();
    }
  }
}

TEST(ChangeBasis, Examples) {
  const NilpotentAlgebra h = heisenberg();
  EXPECT_EQ(change_basis(h, Matrix::identity(3)), h);

  Matrix two(3, 3);
  for (std::size_t i = 0; i < 3; ++i) two(i, i) = Rational(2);
  NilpotentAlgebra scaled(3);
  scaled.set_bracket(0, 1, SparseVector{{2, Rational(2)}});
  EXPECT_EQ(change_basis(h, two), scaled);

  EXPECT_THROW(change_basis(h, Matrix(3, 3)), InputError);
  EXPECT_THROW(change_basis(h, Matrix::identity(2)), InputError);
}

TEST(ChangeBasis, RoundTripAndComposition) {
  const NilpotentAlgebra a = canonical(Family::C, 3);
  const Matrix m = random_unimodular(a.dim(), 21);
  const Matrix k = random_unimodular(a.dim(), 22);
  const NilpotentAlgebra b = change_basis(a, m);
  EXPECT_EQ(change_basis(b, inverse(m)), a);
  EXPECT_EQ(change_basis(b, k), change_basis(a, k * m));
  EXPECT_TRUE(verify_jacobi(b).passed);
}

TEST(ChangeBasis, InvariantsSurvive) {
  for (const SimpleType& t : {SimpleType{Family::B, 4}, SimpleType{Family::C, 4}, SimpleType{Family::D, 4}}) {
    const NilpotentAlgebra a = nilradical(build_root_system(t));
    const GradedAlgebra g = graded(a, lower_central_series(a));
    for (std::uint64_t seed : {1u, 2u, 3u}) {
      const NilpotentAlgebra b = obfuscated(a, seed);
      const GradedAlgebra gb = graded(b, lower_central_series(b));
      EXPECT_EQ(gb.dims(), g.dims());
      for (std::size_t i = 1; i <= g.nilpotency_class(); ++i)
        for (std::size_t j = 1; i + j <= g.nilpotency_class(); ++j) {
          EXPECT_EQ(right_kernel(graded_pairing(gb, b, i, j)).dim(), right_kernel(graded_pairing(g, a, i, j)).dim());
          EXPECT_EQ(left_kernel(graded_pairing(gb, b, i, j)).dim(), left_kernel(graded_pairing(g, a, i, j)).dim());
        }
    }
  }
}
