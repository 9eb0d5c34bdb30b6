#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "lienil/errors.hpp"
#include "lienil/exactlin.hpp"

using namespace lienil;

namespace {

// Leibniz expansion: independent determinant oracle for small integer matrices.
mpz_class leibniz_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  mpz_class total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    mpz_class term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]).numerator();
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Fraction-free Bareiss elimination over GMP integers: determinant oracle for
// larger integer matrices.
mpz_class bareiss_det(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j).numerator();
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[p], a[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Matrix random_integer_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int range) {
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = static_cast<std::int64_t>(rng() % (2 * range + 1)) - range;
  return m;
}

}  // namespace

TEST(Rref, Examples) {
  EXPECT_EQ(rref(Matrix::identity(2)), Matrix::identity(2));
  EXPECT_EQ(rref(Matrix::from_integers({{2, 4}, {1, 2}})), Matrix::from_integers({{1, 2}}));
  const Matrix z = rref(Matrix(3, 3));
  EXPECT_EQ(z.rows(), 0u);
  EXPECT_EQ(z.cols(), 3u);
}

TEST(Rank, Examples) {
  EXPECT_EQ(rank(Matrix::identity(5)), 5u);
  EXPECT_EQ(rank(Matrix::from_integers({{1, 1}, {2, 2}})), 1u);
  EXPECT_EQ(rank(Matrix(4, 2)), 0u);
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel(Matrix::identity(3)).dim(), 0u);
  const Subspace k = kernel(Matrix::from_integers({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(member(k, Vector{Rational(1), Rational(-1)}));
  EXPECT_EQ(kernel(Matrix(0, 4)), Subspace::full(4));
}

TEST(Member, Examples) {
  EXPECT_TRUE(member(Subspace::full(3), Vector{Rational(7), Rational(1, 2), Rational(-3)}));
  const Subspace e2 = Subspace::span({Vector{Rational(0), Rational(1)}}, 2);
  EXPECT_FALSE(member(e2, Vector{Rational(1), Rational(0)}));
  const Subspace line = Subspace::span({Vector{Rational(1), Rational(2)}}, 2);
  EXPECT_TRUE(member(line, Vector{Rational(3), Rational(6)}));
  EXPECT_THROW(member(line, Vector{Rational(1)}), InputError);
}

TEST(Rref, IdempotentCanonicalAndRankNullity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
    // Low-rank products exercise dependent rows.
    const std::size_t inner = 1 + rng() % 4;
    const Matrix m = random_integer_matrix(rng, rows, inner, 3) * random_integer_matrix(rng, inner, cols, 3);
    const Matrix r = rref(m);
    EXPECT_EQ(rref(r), r);
    EXPECT_EQ(rank(m) + kernel(m).dim(), cols);

    // Same row space through random invertible row operations.
    const Matrix u = random_unimodular(rows, rng());
    EXPECT_EQ(rref(u * m), r);

    // Every kernel vector is annihilated.
    for (const Vector& v : kernel(m).basis_vectors()) {
      EXPECT_EQ(m * Matrix::from_rows({v}, cols).transpose(), Matrix(rows, 1));
    }
  }
}

TEST(Determinant, AgreesWithLeibniz) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const Matrix m = random_integer_matrix(rng, n, n, 4);
    EXPECT_EQ(determinant(m).to_mpq(), mpq_class(leibniz_det(m)));
  }
}

TEST(Inverse, RoundTripAndSingular) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 6;
    const Matrix m = random_integer_matrix(rng, n, n, 5);
    if (determinant(m).is_zero()) {
      EXPECT_THROW(inverse(m), InputError);
    } else {
      EXPECT_EQ(m * inverse(m), Matrix::identity(n));
    }
  }
  EXPECT_THROW(inverse(Matrix::from_integers({{1, 2}, {2, 4}})), InputError);
}

TEST(RandomUnimodular, Examples) {
  const Matrix one = random_unimodular(1, 5);
  ASSERT_EQ(one.rows(), 1u);
  EXPECT_TRUE(one(0, 0) == Rational(1) || one(0, 0) == Rational(-1));
  EXPECT_EQ(random_unimodular(9, 1234), random_unimodular(9, 1234));
  EXPECT_NE(random_unimodular(9, 1234), random_unimodular(9, 1235));
  EXPECT_THROW(random_unimodular(0, 1), InputError);
}

TEST(RandomUnimodular, DeterminantIsPlusMinusOne) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Matrix m5 = random_unimodular(5, seed);
    const mpz_class d5 = leibniz_det(m5);
    EXPECT_TRUE(d5 == 1 || d5 == -1) << "seed " << seed;
    EXPECT_NE(m5, Matrix::identity(5));
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) EXPECT_TRUE(m5(i, j).is_integer());
  }
  for (std::size_t d : {2u, 16u, 36u, 120u}) {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const mpz_class det = bareiss_det(random_unimodular(d, seed));
      EXPECT_TRUE(det == 1 || det == -1) << "d=" << d << " seed=" << seed;
    }
  }
}
