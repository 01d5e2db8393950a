#pragma once

#include <span>

#include "gds/matrix.hpp"

namespace gds {

/// H = I - (2 / z'z) z z'. Symmetric and orthogonal, with H z = -z.
/// Throws ValidationError("zero reflector vector") when z is all zeros.
Matrix householder_reflector(std::span<const double> z);

struct QrResult {
  Matrix q;  // n x n orthogonal
  Matrix r;  // n x n upper triangular, diag(r) >= 0
};

/// Householder QR of a square matrix.
///
/// Each step reflects the active column onto -sign(x_k) * ||x|| e_k so the
/// pivot update never cancels; a column whose sub-diagonal part is already
/// zero is left untouched. Afterwards row k of r and column k of q are negated
/// wherever r(k,k) < 0, so r has a nonnegative diagonal and q's first column is
/// +x_1 / ||x_1|| whenever x_1 != 0. Entries of r below the diagonal are exact
/// zeros. Rank-deficient inputs are fine: q is still a full orthogonal matrix.
QrResult qr_householder(const Matrix& x);

}  // namespace gds
