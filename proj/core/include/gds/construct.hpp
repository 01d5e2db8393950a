#pragma once

#include <cstddef>
#include <vector>

#include "gds/matrix.hpp"
#include "gds/specs.hpp"

namespace gds {

/// Spectral-norm tolerance applied when checking that caller-supplied
/// matrices are orthogonal (or lie in U_n).
inline constexpr double kInputOrthogonalityTolerance = 1e-8;

/// Tolerance on the first row and column of q' a q in recover_block.
inline constexpr double kBlockStructureTolerance = 1e-10;

/// Symmetric orthogonal 3x3 g.d.s. matrix
///
///     [x y z]
///     [y z x]
///     [z x y]
///
/// with x = (1 - z + sqrt(D)) / 2, D = (1 - z)(1 + 3z), and y = -z(1 - z) / x.
/// Both terms of x's numerator are nonnegative, so no cancellation occurs.
/// z = 1 returns the anti-diagonal permutation.
/// Throws RangeError unless z lies in [-1/3, 1].
Matrix build_gds3_stable(double z);

/// Same pattern using the other root x = (1 - z - sqrt(D)) / 2.
///
/// UNSTABLE: for z near 0 the numerator subtracts two nearly equal numbers and
/// the result loses most of its accuracy. Kept to demonstrate the effect; use
/// build_gds3_stable for real work. z = 0 and z = 1 return exact permutations.
Matrix build_gds3_unstable(double z);

/// Orthogonal Q whose first column is e / sqrt(n), the remaining columns being
/// an orthonormal completion shaped by columns 2..n of `x`. Column 1 of `x` is
/// replaced by e / sqrt(n) before a Householder QR.
Matrix extend_to_un_basis(const Matrix& x);

/// Q = -H for the reflector built from z = e + sqrt(n) e_1. Symmetric,
/// orthogonal, first column e / sqrt(n).
Matrix un_from_reflector(std::size_t n);

/// A = Q B Q' with B = blockdiag(1, W). A has unit row and column sums; it is
/// orthogonal because W is. Both inputs are checked for orthogonality (and q
/// for its first column) at kInputOrthogonalityTolerance.
Matrix build_gds_from_block(const Matrix& q, const Matrix& w);

/// Inverse of build_gds_from_block: returns the trailing (n-1)x(n-1) block of
/// q' a q after checking that its first row and column are e_1.
Matrix recover_block(const Matrix& a, const Matrix& q);

/// Orthogonal g.d.s. matrix with the spectrum described by `spec`:
/// A = Q blockdiag(I_r, -I_p, R_1, ..., R_m) Q' with R_k = [[c, s], [-s, c]].
Matrix build_eig_gds(const EigSpec& spec, const Matrix& q);

/// Permutation p of {0, ..., n^2 - 1} read column by column off the n x n
/// matrix S(i, j) = i * n + j (the perfect shuffle).
std::vector<std::size_t> ybe_permutation(std::size_t n);

/// X = diag(d) P with P = (e_{p_1}, ..., e_{p_{n^2}}). X solves the
/// Yang-Baxter equation and X e_1 = X' e_1 = d_1 e_1.
Matrix build_ybe_seed(const YbeSeedSpec& spec);

/// A = (P (x) P) B (P (x) P)' for an orthogonal YBE solution B with
/// B e_1 = B' e_1 = e_1 and P in U_n. The result is orthogonal, g.d.s. and
/// still solves the Yang-Baxter equation.
Matrix build_ybe_gds(const Matrix& b, const Matrix& p);

}  // namespace gds
