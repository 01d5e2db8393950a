#include "gds/verify.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gds/dense.hpp"
#include "gds/error.hpp"
#include "gds/householder.hpp"
#include "gds/norms.hpp"

namespace gds {

namespace {

double residual_from_ones(std::vector<double> v) {
  for (double& x : v) x -= 1.0;
  return norm2(v);
}

void require_square(const char* op, const Matrix& a) {
  if (!a.is_square()) {
    throw DimensionError(std::string(op) + ": expected a square matrix, got " + shape_string(a));
  }
}

}  // namespace

double orthogonality_error(const Matrix& a) {
  const Matrix g = gram(a);
  std::vector<double> e(g.data().begin(), g.data().end());
  const std::size_t n = g.rows();
  for (double& x : e) x = -x;
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] += 1.0;
  return spectral_norm(Matrix(n, n, std::move(e)));
}

double row_sum_error(const Matrix& a) {
  require_square("row_sum_error", a);
  return residual_from_ones(mat_vec(a, ones(a.cols())));
}

double column_sum_error(const Matrix& a) {
  require_square("column_sum_error", a);
  return residual_from_ones(mat_t_vec(a, ones(a.rows())));
}

double first_column_error(const Matrix& q) {
  const double target = 1.0 / std::sqrt(static_cast<double>(q.rows()));
  auto c = q.column(0);
  for (double& x : c) x -= target;
  return norm2(c);
}

GdsReport gds_report(const Matrix& a) {
  require_square("gds_report", a);
  return GdsReport{orthogonality_error(a), row_sum_error(a), column_sum_error(a), a.rows()};
}

bool is_gds(const Matrix& a, double tol) {
  if (!(tol > 0.0)) throw RangeError("is_gds: tolerance must be positive");
  if (!a.is_square()) return false;
  return row_sum_error(a) <= tol && column_sum_error(a) <= tol;
}

bool is_orthogonal(const Matrix& a, double tol) {
  if (!(tol > 0.0)) throw RangeError("is_orthogonal: tolerance must be positive");
  return a.is_square() && orthogonality_error(a) <= tol;
}

bool in_un(const Matrix& q, double tol) {
  return is_orthogonal(q, tol) && first_column_error(q) <= tol;
}

double ybe_residual(const Matrix& a) {
  require_square("ybe_residual", a);
  const std::size_t m = a.rows();
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(m))));
  if (n * n != m) {
    throw DimensionError("ybe_residual: dimension " + std::to_string(m) +
                         " is not a perfect square");
  }
  const Matrix id = Matrix::identity(n);
  const Matrix left = kron(a, id);   // A (x) I
  const Matrix right = kron(id, a);  // I (x) A
  const Matrix lhs = left * right * left;
  const Matrix rhs = right * left * right;
  return frobenius_norm(lhs - rhs);
}

double verify_eigenpairs(const Matrix& a, const EigSpec& spec, const Matrix& q) {
  spec.validate();
  const std::size_t n = spec.dimension();
  if (a.rows() != n || a.cols() != n || q.rows() != n || q.cols() != n) {
    throw DimensionError("verify_eigenpairs: spectrum needs n = " + std::to_string(n) +
                         " but A is " + shape_string(a) + " and Q is " + shape_string(q));
  }
  double worst = 0.0;
  std::size_t col = 0;
  auto real_residual = [&](std::size_t i, double lambda) {
    const auto qi = q.column(i);
    auto r = mat_vec(a, qi);
    for (std::size_t k = 0; k < n; ++k) r[k] -= lambda * qi[k];
    worst = std::max(worst, norm2(r));
  };
  for (std::size_t i = 0; i < spec.plus_ones; ++i) real_residual(col++, 1.0);
  for (std::size_t i = 0; i < spec.minus_ones; ++i) real_residual(col++, -1.0);

  for (const auto& z : spec.pairs) {
    const double c = z.real();
    const double s = z.imag();
    const auto qi = q.column(col);
    auto neg_qj = q.column(col + 1);
    for (double& x : neg_qj) x = -x;
    const ComplexVec v(qi, neg_qj);  // q_i - i q_j
    const ComplexVec av = mat_vec(a, v);
    // A v - (c - i s) v, with (c - i s)(x + i y) = (c x + s y) + i (c y - s x).
    std::vector<double> re(n), im(n);
    for (std::size_t k = 0; k < n; ++k) {
      re[k] = av.re()[k] - (c * v.re()[k] + s * v.im()[k]);
      im[k] = av.im()[k] - (c * v.im()[k] - s * v.re()[k]);
    }
    worst = std::max(worst, ComplexVec(std::move(re), std::move(im)).norm());
    col += 2;
  }
  return worst;
}

Matrix reorthogonalize(const Matrix& a) { return qr_householder(a).q; }

}  // namespace gds
