#pragma once

#include <cstddef>

#include "gds/matrix.hpp"
#include "gds/specs.hpp"

namespace gds {

/// Quality statistics of a (supposedly) orthogonal g.d.s. matrix A:
///   err_orth    = ||I - A'A||_2
///   err_rows    = ||A e - e||_2
///   err_columns = ||A' e - e||_2
/// Small err_orth means A is within that distance of an orthogonal matrix;
/// small err_rows / err_columns mean a perturbation of norm err / sqrt(n)
/// restores exact unit row / column sums.
struct GdsReport {
  double err_orth = 0.0;
  double err_rows = 0.0;
  double err_columns = 0.0;
  std::size_t n = 0;
};

GdsReport gds_report(const Matrix& a);

/// ||I - A'A||_2 with I the identity of size a.cols().
double orthogonality_error(const Matrix& a);
double row_sum_error(const Matrix& a);
double column_sum_error(const Matrix& a);
/// ||q e_1 - e / sqrt(n)||_2.
double first_column_error(const Matrix& q);

/// Unit row and column sums to within `tol` (2-norm of the residual vectors).
/// Non-square input is never g.d.s.
bool is_gds(const Matrix& a, double tol);
bool is_orthogonal(const Matrix& a, double tol);
/// Orthogonal with first column e / sqrt(n), both to within `tol`.
bool in_un(const Matrix& q, double tol);

/// Frobenius norm of (A(x)I)(I(x)A)(A(x)I) - (I(x)A)(A(x)I)(I(x)A) for an
/// n^2 x n^2 matrix A, formed explicitly with n^3 x n^3 intermediates.
/// Intended for small n (n <= 4 is instant).
double ybe_residual(const Matrix& a);

/// Certifies the spectrum of A = Q B Q' column by column instead of running an
/// eigensolver. For each +1 / -1 column q_i it measures ||A q_i -/+ q_i||; for
/// each pair (c, s) occupying columns (i, j) it measures
/// ||A v - (c - i s) v|| with v = q_i - i q_j. Returns the largest residual.
double verify_eigenpairs(const Matrix& a, const EigSpec& spec, const Matrix& q);

/// Orthogonal factor of the Householder QR of `a`: an exactly-orthogonal
/// matrix close to a nearly orthogonal `a`.
Matrix reorthogonalize(const Matrix& a);

}  // namespace gds
