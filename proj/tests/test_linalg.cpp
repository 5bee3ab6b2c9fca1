#include <gtest/gtest.h>

#include <random>

#include "clustercat/linalg.hpp"

using namespace clustercat;

namespace {

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -2, int hi = 2) {
  std::uniform_int_distribution<int> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  return m;
}

}  // namespace

TEST(Linalg, RowReduceIdentity) {
  auto e = row_reduce(Matrix::identity(3));
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(e.reduced, Matrix::identity(3));
}

TEST(Linalg, KernelOfRankOneMatrix) {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  Kernel k = kernel(m);
  ASSERT_EQ(k.dim(), 2u);
  EXPECT_TRUE((m * k.basis).is_zero());
  EXPECT_EQ(k.free_cols, (std::vector<std::size_t>{1, 2}));
}

TEST(Linalg, RankNullityOnRandomMatrices) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
    Matrix m = random_matrix(rng, r, c);
    Kernel k = kernel(m);
    EXPECT_EQ(rank(m) + k.dim(), c);
    EXPECT_TRUE((m * k.basis).is_zero());
    // Kernel coordinates reproduce kernel vectors.
    for (std::size_t t2 = 0; t2 < k.dim(); ++t2) {
      Vector coords = k.coords(k.basis.column(t2));
      for (std::size_t s = 0; s < coords.size(); ++s) EXPECT_EQ(coords[s], s == t2 ? 1 : 0);
    }
  }
}

TEST(Linalg, SubspaceProjectionKillsSubspace) {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 1 + rng() % 5;
    Matrix gens = random_matrix(rng, rng() % 4, n);
    Subspace u(n, gens);
    EXPECT_EQ(u.dim() + u.codim(), n);
    Matrix p = u.projection();
    for (std::size_t r = 0; r < gens.rows(); ++r) {
      Vector v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = gens(r, c);
      EXPECT_TRUE(u.contains(v));
      EXPECT_TRUE(is_zero(p * v));
    }
    EXPECT_EQ(p * u.section(), Matrix::identity(u.codim()));
    // projection agrees with quotient_coords
    Matrix w = random_matrix(rng, 1, n);
    Vector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = w(0, c);
    EXPECT_EQ(p * v, u.quotient_coords(v));
  }
}

TEST(Linalg, InverseRoundTrip) {
  Matrix m = Matrix::from_rows({{2, 1}, {1, 1}});
  EXPECT_EQ(m * inverse(m), Matrix::identity(2));
  EXPECT_THROW(inverse(Matrix::from_rows({{1, 2}, {2, 4}})), InvariantViolation);
}

TEST(Linalg, SpanDim) {
  std::vector<Vector> vs{{1, 0, 1}, {2, 0, 2}, {0, 1, 0}};
  EXPECT_EQ(span_dim(vs, 3), 2u);
  EXPECT_EQ(span_dim({}, 3), 0u);
}
