#include "gds/construct.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "gds/dense.hpp"
#include "gds/error.hpp"
#include "gds/householder.hpp"
#include "gds/verify.hpp"

namespace gds {

namespace {

std::string sci(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << v;
  return s.str();
}

void require_z_in_range(double z) {
  if (!(z >= -1.0 / 3.0 && z <= 1.0)) throw RangeError("z should be in the interval [-1/3,1]");
}

Matrix circulant_pattern(double x, double y, double z) {
  return Matrix{{x, y, z}, {y, z, x}, {z, x, y}};
}

const Matrix& anti_diagonal_permutation() {
  static const Matrix p{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  return p;
}

void require_orthogonal(const char* what, const Matrix& m) {
  const double err = orthogonality_error(m);
  if (err > kInputOrthogonalityTolerance) {
    throw ValidationError(std::string("input not orthogonal: ") + what +
                          " has ||I - M'M||_2 = " + sci(err));
  }
}

void require_in_un(const char* what, const Matrix& q) {
  if (!q.is_square()) {
    throw DimensionError(std::string(what) + " should be a square matrix, got " + shape_string(q));
  }
  require_orthogonal(what, q);
  const double err = first_column_error(q);
  if (err > kInputOrthogonalityTolerance) {
    throw ValidationError(std::string(what) + " is not in U_n: first column is " + sci(err) +
                          " away from e/sqrt(n)");
  }
}

// q * b * q'
Matrix conjugate(const Matrix& q, const Matrix& b) { return mat_mul_transposed(q * b, q); }

}  // namespace

Matrix build_gds3_stable(double z) {
  require_z_in_range(z);
  const double t = 1.0 - z;
  if (t == 0.0) return anti_diagonal_permutation();
  // Clamp guards the z = -1/3 end, where rounding can leave delta at -0.
  const double delta = std::max(0.0, t * (1.0 + 3.0 * z));
  const double x = (t + std::sqrt(delta)) / 2.0;
  const double y = -z * t / x;
  return circulant_pattern(x, y, z);
}

Matrix build_gds3_unstable(double z) {
  require_z_in_range(z);
  const double t = 1.0 - z;
  if (t == 0.0) return anti_diagonal_permutation();
  if (z == 0.0) return Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 1}};
  const double delta = std::max(0.0, t * (1.0 + 3.0 * z));
  const double x = (t - std::sqrt(delta)) / 2.0;
  const double y = -z * t / x;
  if (!std::isfinite(y)) {
    throw NonFiniteError("build_gds3_unstable: root cancelled to zero at z = " + sci(z));
  }
  return circulant_pattern(x, y, z);
}

Matrix extend_to_un_basis(const Matrix& x) {
  if (!x.is_square()) {
    throw DimensionError("extend_to_un_basis: X should be a square matrix, got " + shape_string(x));
  }
  const std::size_t n = x.rows();
  std::vector<double> xhat(x.data().begin(), x.data().end());
  const double first = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) xhat[i * n] = first;
  return qr_householder(Matrix(n, n, std::move(xhat))).q;
}

Matrix un_from_reflector(std::size_t n) {
  if (n == 0) throw DimensionError("un_from_reflector: n must be positive");
  std::vector<double> z = ones(n);
  z[0] += std::sqrt(static_cast<double>(n));
  return scale(-1.0, householder_reflector(z));
}

Matrix build_gds_from_block(const Matrix& q, const Matrix& w) {
  if (!q.is_square()) {
    throw DimensionError("build_gds_from_block: Q should be a square matrix, got " +
                         shape_string(q));
  }
  if (!w.is_square()) {
    throw DimensionError("build_gds_from_block: W should be a square matrix, got " +
                         shape_string(w));
  }
  const std::size_t n = q.rows();
  if (w.rows() + 1 != n) {
    throw DimensionError("Size of W should be equal to n-1: Q is " + shape_string(q) +
                         ", W is " + shape_string(w));
  }
  require_in_un("Q", q);
  require_orthogonal("W", w);

  const Matrix one = Matrix::identity(1);
  const Matrix blocks[] = {one, w};
  return conjugate(q, block_diag(blocks));
}

Matrix recover_block(const Matrix& a, const Matrix& q) {
  if (!a.is_square() || !q.is_square() || a.rows() != q.rows() || a.rows() < 2) {
    throw DimensionError("recover_block: need matching square matrices of size >= 2, got A " +
                         shape_string(a) + " and Q " + shape_string(q));
  }
  require_in_un("Q", q);
  const std::size_t n = a.rows();
  const Matrix b = mat_mul(transpose(q), a * q);

  double worst = std::abs(b(0, 0) - 1.0);
  for (std::size_t k = 1; k < n; ++k) worst = std::max({worst, std::abs(b(0, k)), std::abs(b(k, 0))});
  if (worst > kBlockStructureTolerance) {
    throw ValidationError("input is not g.d.s. relative to q (block deviation " + sci(worst) + ")");
  }
  return sub_block(b, 1, 1, n - 1, n - 1);
}

Matrix build_eig_gds(const EigSpec& spec, const Matrix& q) {
  spec.validate();
  const std::size_t n = spec.dimension();
  if (q.rows() != n || q.cols() != n) {
    throw DimensionError("build_eig_gds: spectrum needs n = r + p + 2m = " + std::to_string(n) +
                         " but Q is " + shape_string(q));
  }
  require_in_un("Q", q);

  std::vector<double> b(n * n, 0.0);
  std::size_t k = 0;
  for (; k < spec.plus_ones; ++k) b[k * n + k] = 1.0;
  for (std::size_t i = 0; i < spec.minus_ones; ++i, ++k) b[k * n + k] = -1.0;
  for (const auto& z : spec.pairs) {
    const double c = z.real();
    const double s = z.imag();
    b[k * n + k] = c;
    b[k * n + k + 1] = s;
    b[(k + 1) * n + k] = -s;
    b[(k + 1) * n + k + 1] = c;
    k += 2;
  }
  return conjugate(q, Matrix(n, n, std::move(b)));
}

std::vector<std::size_t> ybe_permutation(std::size_t n) {
  std::vector<std::size_t> p;
  p.reserve(n * n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) p.push_back(i * n + j);
  return p;
}

Matrix build_ybe_seed(const YbeSeedSpec& spec) {
  spec.validate();
  const std::size_t m = spec.n * spec.n;
  const auto p = ybe_permutation(spec.n);
  // Column k of diag(d) P is d[p_k] e_{p_k}.
  std::vector<double> x(m * m, 0.0);
  for (std::size_t k = 0; k < m; ++k) x[p[k] * m + k] = spec.d[p[k]];
  return Matrix(m, m, std::move(x));
}

Matrix build_ybe_gds(const Matrix& b, const Matrix& p) {
  if (!p.is_square() || !b.is_square() || b.rows() != p.rows() * p.rows()) {
    throw DimensionError("build_ybe_gds: wrong dimensions, B is " + shape_string(b) + " and P is " +
                         shape_string(p) + " (B must be n^2 x n^2)");
  }
  require_in_un("P", p);
  require_orthogonal("B", b);
  const double ybe = ybe_residual(b);
  if (ybe > kInputOrthogonalityTolerance) {
    throw ValidationError("B does not satisfy the Yang-Baxter equation (residual " + sci(ybe) + ")");
  }
  std::vector<double> e1(b.rows(), 0.0);
  e1[0] = 1.0;
  auto be = mat_vec(b, e1);
  auto bte = mat_t_vec(b, e1);
  be[0] -= 1.0;
  bte[0] -= 1.0;
  const double fixed = std::max(norm2(be), norm2(bte));
  if (fixed > kInputOrthogonalityTolerance) {
    throw ValidationError("B must satisfy B e_1 = e_1 and B' e_1 = e_1 (deviation " + sci(fixed) +
                          ")");
  }
  return conjugate(kron(p, p), b);
}

}  // namespace gds
