#include <gtest/gtest.h>

#include <random>

#include "gds/gds.hpp"
#include "support/oracles.hpp"

using namespace gds;
using gds::testing::max_abs_diff;

TEST(YbePermutation, PerfectShuffle) {
  EXPECT_EQ(ybe_permutation(2), (std::vector<std::size_t>{0, 2, 1, 3}));
  EXPECT_EQ(ybe_permutation(3), (std::vector<std::size_t>{0, 3, 6, 1, 4, 7, 2, 5, 8}));
}

TEST(YbeSeed, TwoByTwoLiteral) {
  const Matrix x = build_ybe_seed(YbeSeedSpec{2, {1, 2, 3, 4}});
  EXPECT_EQ(x, (Matrix{{1, 0, 0, 0}, {0, 0, 2, 0}, {0, 3, 0, 0}, {0, 0, 0, 4}}));
}

TEST(YbeSeed, SpecValidation) {
  try {
    build_ybe_seed(YbeSeedSpec{2, {1, 2, 3}});
    FAIL();
  } catch (const DimensionError& e) {
    EXPECT_NE(std::string(e.what()).find("wrong dimensions"), std::string::npos);
  }
  EXPECT_THROW(build_ybe_seed(YbeSeedSpec{1, {1}}), ValidationError);
  EXPECT_THROW((YbeSeedSpec{2, {2, 1, 1, 1}}.validate_orthogonal_mode()), ValidationError);
  EXPECT_THROW((YbeSeedSpec{2, {1, 0.5, 1, 1}}.validate_orthogonal_mode()), ValidationError);
  EXPECT_NO_THROW((YbeSeedSpec{2, {1, -1, 1, -1}}.validate_orthogonal_mode()));
}

TEST(YbeSeed, RandomScalingsSolveTheEquation) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (std::size_t n : {2u, 3u}) {
    for (int t = 0; t < 10; ++t) {
      YbeSeedSpec spec{n, std::vector<double>(n * n)};
      for (double& v : spec.d) v = dist(rng);
      EXPECT_LE(ybe_residual(build_ybe_seed(spec)), 1e-13);
    }
  }
}

TEST(YbeResidual, DetectsNonSolutions) {
  // A generic rotation on C^2 (x) C^2 does not satisfy the equation.
  const Matrix b = qr_householder(random_matrix(4, 6)).q;
  EXPECT_GT(ybe_residual(b), 1e-3);
  EXPECT_EQ(ybe_residual(Matrix::identity(4)), 0.0);
  EXPECT_THROW(ybe_residual(Matrix::identity(3)), DimensionError);
}

TEST(BuildYbeGds, OrthogonalSeedGivesGdsSolution) {
  for (std::size_t n : {2u, 3u}) {
    std::vector<double> d(n * n, 1.0);
    for (std::size_t i = 1; i < d.size(); i += 2) d[i] = -1.0;
    const YbeSeedSpec spec{n, d};
    spec.validate_orthogonal_mode();
    const Matrix p = extend_to_un_basis(random_matrix(n, 3));
    const Matrix a = build_ybe_gds(build_ybe_seed(spec), p);
    const auto r = gds_report(a);
    EXPECT_LE(r.err_orth, 1e-13);
    EXPECT_LE(r.err_rows, 1e-13);
    EXPECT_LE(r.err_columns, 1e-13);
    EXPECT_LE(ybe_residual(a), 1e-12);
  }
}

TEST(BuildYbeGds, RejectsBadInputs) {
  const Matrix p = un_from_reflector(2);
  EXPECT_THROW(build_ybe_gds(Matrix::identity(9), p), DimensionError);
  EXPECT_THROW(build_ybe_gds(qr_householder(random_matrix(4, 6)).q, p), ValidationError);
  // Solves the equation but moves e_1.
  EXPECT_THROW(build_ybe_gds(build_ybe_seed(YbeSeedSpec{2, {-1, 1, 1, 1}}), p), ValidationError);
}

TEST(KroneckerConjugation, ConjugateStillSolves) {
  // (P (x) P) X (P (x) P)^-1 solves the equation for any invertible P.
  NormalGenerator gen(77);
  const Matrix x = build_ybe_seed(YbeSeedSpec{2, {1, 2, -1, 0.5}});
  const Matrix p = gen.matrix(2, 2);
  const Matrix pinv = scale(1.0 / (p(0, 0) * p(1, 1) - p(0, 1) * p(1, 0)),
                            Matrix{{p(1, 1), -p(0, 1)}, {-p(1, 0), p(0, 0)}});
  const Matrix y = mat_mul(mat_mul(kron(p, p), x), kron(pinv, pinv));
  EXPECT_LE(ybe_residual(y), 1e-10);
  EXPECT_LE(max_abs_diff(mat_mul(kron(p, p), kron(pinv, pinv)), Matrix::identity(4)), 1e-13);
}
