#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "gds/gds.hpp"
#include "support/oracles.hpp"

using namespace gds;
using gds::testing::jacobi_eigenvalues;

TEST(EigSpec, DimensionAndValidation) {
  EigSpec spec{2, 1, {{0.28, 0.96}}};
  EXPECT_EQ(spec.dimension(), 5u);
  EXPECT_NO_THROW(spec.validate());

  EXPECT_THROW((EigSpec{0, 2, {}}.validate()), ValidationError);
  try {
    EigSpec{1, 0, {{0.6, 0.7}}}.validate();
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("eigenvalue off unit circle"), std::string::npos);
  }
  try {
    EigSpec{1, 0, {{1.0, 0.0}}}.validate();
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("declare real eigenvalues via r or p"), std::string::npos);
  }
}

TEST(BuildEigGds, ThreeByThreeRotation) {
  const Matrix q = un_from_reflector(3);
  const Matrix a = build_eig_gds(EigSpec{1, 0, {{0.28, 0.96}}}, q);
  const auto r = gds_report(a);
  EXPECT_LE(r.err_orth, 1e-14);
  EXPECT_LE(r.err_rows, 1e-14);
  // Trace = 1 + 2c.
  EXPECT_NEAR(a(0, 0) + a(1, 1) + a(2, 2), 1.0 + 2 * 0.28, 1e-14);
  EXPECT_LE(verify_eigenpairs(a, EigSpec{1, 0, {{0.28, 0.96}}}, q), 1e-14);
}

TEST(BuildEigGds, SymmetricCaseHasRealSpectrum) {
  // Only +-1 eigenvalues: A is a symmetric involution. Check with Jacobi.
  const Matrix q = extend_to_un_basis(random_matrix(6, 1));
  const Matrix a = build_eig_gds(EigSpec{2, 4, {}}, q);
  EXPECT_LE(gds::testing::max_abs_diff(a, transpose(a)), 1e-15);
  auto ev = jacobi_eigenvalues(a);
  std::sort(ev.begin(), ev.end());
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(ev[i], -1.0, 1e-13);
  for (std::size_t i = 4; i < 6; ++i) EXPECT_NEAR(ev[i], 1.0, 1e-13);
}

TEST(BuildEigGds, PairsOfAnglesCertified) {
  const EigSpec spec{2, 3, {{0.6, 0.8}, {-0.8, 0.6}, {std::cos(1.0), std::sin(1.0)}}};
  const Matrix q = extend_to_un_basis(random_matrix(spec.dimension(), 12));
  const Matrix a = build_eig_gds(spec, q);
  const auto r = gds_report(a);
  EXPECT_LE(r.err_orth, 1e-13);
  EXPECT_LE(r.err_rows, 1e-13);
  EXPECT_LE(r.err_columns, 1e-13);
  EXPECT_LE(verify_eigenpairs(a, spec, q), 1e-13);
  // A wrong spectrum is not certified.
  const EigSpec wrong{2, 3, {{0.8, 0.6}, {-0.8, 0.6}, {std::cos(1.0), std::sin(1.0)}}};
  EXPECT_GT(verify_eigenpairs(a, wrong, q), 0.1);
}

TEST(BuildEigGds, DimensionMismatchIsRejected) {
  EXPECT_THROW(build_eig_gds(EigSpec{1, 1, {}}, un_from_reflector(3)), DimensionError);
  EXPECT_THROW(build_eig_gds(EigSpec{1, 2, {}}, Matrix::identity(3)), ValidationError);
}
