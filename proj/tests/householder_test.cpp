#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "gds/gds.hpp"
#include "support/oracles.hpp"

using namespace gds;
using gds::testing::kEps;
using gds::testing::max_abs_diff;
using gds::testing::naive_mul;
using gds::testing::uniform_matrix;

TEST(HouseholderReflector, MapsOnesToScaledFirstAxis) {
  const std::size_t n = 4;
  std::vector<double> z = ones(n);
  z[0] += std::sqrt(4.0);
  const auto he = mat_vec(householder_reflector(z), ones(n));
  EXPECT_NEAR(he[0], -2.0, 1e-15);
  for (std::size_t i = 1; i < n; ++i) EXPECT_NEAR(he[i], 0.0, 1e-15);
}

TEST(HouseholderReflector, FirstAxisFlipsSign) {
  const std::vector<double> e1{1.0, 0.0};
  EXPECT_EQ(householder_reflector(e1), (Matrix{{-1, 0}, {0, 1}}));
}

TEST(HouseholderReflector, ZeroVectorIsRejected) {
  try {
    householder_reflector(std::vector<double>(3, 0.0));
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_STREQ(e.what(), "zero reflector vector");
  }
}

TEST(HouseholderReflector, RandomVectorsGiveSymmetricOrthogonalReflections) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> len(1, 30);
  for (int t = 0; t < 100; ++t) {
    const Matrix zm = uniform_matrix(1, static_cast<std::size_t>(len(rng)), rng);
    const auto z = zm.row(0);
    const Matrix h = householder_reflector(z);
    EXPECT_EQ(h, transpose(h));
    EXPECT_LE(orthogonality_error(h), 1e-14);
    const auto hz = mat_vec(h, z);
    std::vector<double> diff(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) diff[i] = hz[i] + z[i];
    EXPECT_LE(norm2(diff), 1e-14 * norm2(z));
  }
}

TEST(QrHouseholder, IdentityIsItsOwnFactorization) {
  const auto qr = qr_householder(Matrix::identity(3));
  EXPECT_EQ(qr.q, Matrix::identity(3));
  EXPECT_EQ(qr.r, Matrix::identity(3));
}

TEST(QrHouseholder, PermutationNormalizesToIdentityR) {
  // Hand QR: [[0,1],[1,0]] = [[0,1],[1,0]] * I once diag(r) >= 0.
  const auto qr = qr_householder(Matrix{{0, 1}, {1, 0}});
  EXPECT_LE(max_abs_diff(qr.q, Matrix{{0, 1}, {1, 0}}), 1e-15);
  EXPECT_LE(max_abs_diff(qr.r, Matrix::identity(2)), 1e-15);
}

TEST(QrHouseholder, RejectsNonSquare) { EXPECT_THROW(qr_householder(Matrix(3, 2)), DimensionError); }

namespace {

void expect_valid_qr(const Matrix& x, const QrResult& qr) {
  const std::size_t n = x.rows();
  const double bound = 64.0 * static_cast<double>(n) * kEps;
  EXPECT_LE(orthogonality_error(qr.q), bound);
  EXPECT_LE(frobenius_norm(subtract(x, naive_mul(qr.q, qr.r))), bound * frobenius_norm(x));
  for (std::size_t i = 0; i < n; ++i) {
    EXPECT_GE(qr.r(i, i), 0.0);
    for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(qr.r(i, j), 0.0);
  }
}

}  // namespace

TEST(QrHouseholder, RandomFiftyIsAccurate) {
  const Matrix x = random_matrix(50, 4);
  const auto qr = qr_householder(x);
  EXPECT_LE(orthogonality_error(qr.q), 1e-14);
  EXPECT_LE(frobenius_norm(subtract(x, mat_mul(qr.q, qr.r))) / frobenius_norm(x), 1e-14);
  expect_valid_qr(x, qr);
}

TEST(QrHouseholder, RankDeficientInputsStillYieldOrthogonalQ) {
  std::mt19937_64 rng(8);
  // Two equal columns, a zero column, and an all-zero matrix.
  std::vector<double> v = uniform_matrix(6, 6, rng).take_data();
  for (std::size_t i = 0; i < 6; ++i) {
    v[i * 6 + 3] = v[i * 6 + 1];
    v[i * 6 + 5] = 0.0;
  }
  const Matrix x(6, 6, v);
  const auto qr = qr_householder(x);
  expect_valid_qr(x, qr);
  EXPECT_NEAR(qr.r(5, 5), 0.0, 1e-14);

  const Matrix zero(4, 4);
  const auto qz = qr_householder(zero);
  EXPECT_EQ(qz.q, Matrix::identity(4));
  expect_valid_qr(zero, qz);
}

TEST(QrHouseholder, PropertyRandomShapesAndScales) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> size(1, 40);
  std::uniform_int_distribution<int> exponent(-100, 100);
  for (int t = 0; t < 30; ++t) {
    const auto n = static_cast<std::size_t>(size(rng));
    const Matrix x = scale(std::ldexp(1.0, exponent(rng)), uniform_matrix(n, n, rng));
    const auto qr = qr_householder(x);
    expect_valid_qr(x, qr);
    // First column of q is the normalized first column of x.
    const auto x1 = x.column(0);
    const double nx1 = norm2(x1);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(qr.q(i, 0), x1[i] / nx1, 1e-14);
  }
}
