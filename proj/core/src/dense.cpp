#include "gds/dense.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gds/error.hpp"

namespace gds {

ComplexVec::ComplexVec(std::vector<double> re, std::vector<double> im)
    : re_(std::move(re)), im_(std::move(im)) {
  if (re_.size() != im_.size()) {
    throw DimensionError("complex vector parts differ in length: " + std::to_string(re_.size()) +
                         " vs " + std::to_string(im_.size()));
  }
}

double ComplexVec::norm() const {
  std::vector<double> both(re_);
  both.insert(both.end(), im_.begin(), im_.end());
  return norm2(both);
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: cannot multiply " + shape_string(a) + " by " + shape_string(b));
  }
  const std::size_t n = a.rows();
  const std::size_t inner = a.cols();
  const std::size_t m = b.cols();
  const double* pb = b.data().data();
  std::vector<double> c(n * m, 0.0);
  // i-k-j order keeps the innermost loop a contiguous axpy over rows of b.
  for (std::size_t i = 0; i < n; ++i) {
    double* ci = c.data() + i * m;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const double* bk = pb + k * m;
      for (std::size_t j = 0; j < m; ++j) ci[j] += aik * bk[j];
    }
  }
  return Matrix(n, m, std::move(c));
}

Matrix mat_mul_transposed(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("mat_mul_transposed: cannot multiply " + shape_string(a) +
                         " by transpose of " + shape_string(b));
  }
  return mat_mul(a, transpose(b));
}

Matrix gram(const Matrix& a) {
  const std::size_t n = a.cols();
  std::vector<double> g(n * n, 0.0);
  for (std::size_t k = 0; k < a.rows(); ++k) {
    const auto rk = a.row(k);
    for (std::size_t i = 0; i < n; ++i) {
      const double aki = rk[i];
      if (aki == 0.0) continue;
      double* gi = g.data() + i * n;
      for (std::size_t j = i; j < n; ++j) gi[j] += aki * rk[j];
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) g[i * n + j] = g[j * n + i];
  return Matrix(n, n, std::move(g));
}

Matrix transpose(const Matrix& a) {
  std::vector<double> t(a.size());
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) t[j * r + i] = a(i, j);
  return Matrix(c, r, std::move(t));
}

Matrix kron(const Matrix& a, const Matrix& b) {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  const std::size_t ar = a.rows(), ac = a.cols(), br = b.rows(), bc = b.cols();
  if (ar > kMax / br || ac > kMax / bc || (ar * br) > kMax / (ac * bc)) {
    throw DimensionError("kron: result of " + shape_string(a) + " (x) " + shape_string(b) +
                         " overflows the index type");
  }
  const std::size_t rows = ar * br;
  const std::size_t cols = ac * bc;
  std::vector<double> k(rows * cols);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t p = 0; p < br; ++p) {
      double* out = k.data() + (i * br + p) * cols;
      const auto brow = b.row(p);
      for (std::size_t j = 0; j < ac; ++j) {
        const double aij = a(i, j);
        for (std::size_t q = 0; q < bc; ++q) out[j * bc + q] = aij * brow[q];
      }
    }
  return Matrix(rows, cols, std::move(k));
}

namespace {

void require_same_shape(const char* op, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape_string(a) + " vs " +
                         shape_string(b));
  }
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_shape("add", a, b);
  std::vector<double> c(a.data().begin(), a.data().end());
  const auto bd = b.data();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += bd[i];
  return Matrix(a.rows(), a.cols(), std::move(c));
}

Matrix subtract(const Matrix& a, const Matrix& b) {
  require_same_shape("subtract", a, b);
  std::vector<double> c(a.data().begin(), a.data().end());
  const auto bd = b.data();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= bd[i];
  return Matrix(a.rows(), a.cols(), std::move(c));
}

Matrix scale(double s, const Matrix& a) {
  std::vector<double> c(a.data().begin(), a.data().end());
  for (double& v : c) v *= s;
  return Matrix(a.rows(), a.cols(), std::move(c));
}

Matrix block_diag(std::span<const Matrix> blocks) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  if (rows == 0) throw DimensionError("block_diag: no blocks");
  std::vector<double> out(rows * cols, 0.0);
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      std::copy(b.row(i).begin(), b.row(i).end(), out.begin() + (r0 + i) * cols + c0);
    r0 += b.rows();
    c0 += b.cols();
  }
  return Matrix(rows, cols, std::move(out));
}

Matrix sub_block(const Matrix& a, std::size_t row0, std::size_t col0, std::size_t rows,
                 std::size_t cols) {
  if (row0 + rows > a.rows() || col0 + cols > a.cols()) {
    throw DimensionError("sub_block: " + std::to_string(rows) + "x" + std::to_string(cols) +
                         " at (" + std::to_string(row0) + "," + std::to_string(col0) +
                         ") exceeds " + shape_string(a));
  }
  std::vector<double> out;
  out.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    const auto r = a.row(row0 + i).subspan(col0, cols);
    out.insert(out.end(), r.begin(), r.end());
  }
  return Matrix(rows, cols, std::move(out));
}

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.cols()) {
    throw DimensionError("mat_vec: " + shape_string(a) + " times vector of length " +
                         std::to_string(x.size()));
  }
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto r = a.row(i);
    double s = 0.0;
    for (std::size_t j = 0; j < r.size(); ++j) s += r[j] * x[j];
    y[i] = s;
  }
  return y;
}

std::vector<double> mat_t_vec(const Matrix& a, std::span<const double> x) {
  if (x.size() != a.rows()) {
    throw DimensionError("mat_t_vec: transpose of " + shape_string(a) +
                         " times vector of length " + std::to_string(x.size()));
  }
  std::vector<double> y(a.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const double xi = x[i];
    if (xi == 0.0) continue;
    const auto r = a.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) y[j] += xi * r[j];
  }
  return y;
}

ComplexVec mat_vec(const Matrix& a, const ComplexVec& x) {
  return ComplexVec(mat_vec(a, x.re()), mat_vec(a, x.im()));
}

std::vector<double> ones(std::size_t n) { return std::vector<double>(n, 1.0); }

double norm2(std::span<const double> x) {
  double scale = 0.0;
  for (double v : x) scale = std::max(scale, std::abs(v));
  if (scale == 0.0 || !std::isfinite(scale)) return scale;
  // Compensated (Neumaier) sum: inputs with many equal entries, like e / sqrt(n),
  // otherwise bias the plain recursive sum by O(n eps), which shows up directly
  // in the orthogonality of Householder reflectors built from the norm.
  double sum = 0.0;
  double carry = 0.0;
  for (double v : x) {
    const double t = v / scale;
    const double sq = t * t;
    const double next = sum + sq;
    carry += std::abs(sum) >= sq ? (sum - next) + sq : (sq - next) + sum;
    sum = next;
  }
  return scale * std::sqrt(sum + carry);
}

}  // namespace gds
