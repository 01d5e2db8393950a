#include "gds/householder.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "gds/dense.hpp"
#include "gds/error.hpp"

namespace gds {

Matrix householder_reflector(std::span<const double> z) {
  const std::size_t n = z.size();
  if (n == 0) throw DimensionError("householder_reflector: empty vector");
  double zmax = 0.0;
  for (double v : z) zmax = std::max(zmax, std::abs(v));
  if (zmax == 0.0) throw ValidationError("zero reflector vector");

  // H is invariant under scaling of z; normalizing by max|z_i| keeps z'z finite.
  std::vector<double> u(z.begin(), z.end());
  for (double& v : u) v /= zmax;
  double utu = 0.0;
  for (double v : u) utu += v * v;
  const double c = 2.0 / utu;

  std::vector<double> h(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      h[i * n + j] = (i == j ? 1.0 : 0.0) - c * (u[i] * u[j]);
  return Matrix(n, n, std::move(h));
}

namespace {

struct Reflector {
  std::size_t start;      // first row the reflector touches
  std::vector<double> v;  // length n - start
  double beta;            // 2 / v'v
};

// rows [start, n) of the row-major n x n block `a`, columns [col0, n):
// a <- (I - beta v v') a
void apply_reflector(std::vector<double>& a, std::size_t n, const Reflector& h, std::size_t col0,
                     std::vector<double>& work) {
  const std::size_t width = n - col0;
  work.assign(width, 0.0);
  for (std::size_t i = 0; i < h.v.size(); ++i) {
    const double vi = h.v[i];
    if (vi == 0.0) continue;
    const double* row = a.data() + (h.start + i) * n + col0;
    for (std::size_t j = 0; j < width; ++j) work[j] += vi * row[j];
  }
  for (std::size_t i = 0; i < h.v.size(); ++i) {
    const double f = h.beta * h.v[i];
    if (f == 0.0) continue;
    double* row = a.data() + (h.start + i) * n + col0;
    for (std::size_t j = 0; j < width; ++j) row[j] -= f * work[j];
  }
}

}  // namespace

QrResult qr_householder(const Matrix& x) {
  if (!x.is_square()) {
    throw DimensionError("qr_householder: expected a square matrix, got " + shape_string(x));
  }
  const std::size_t n = x.rows();
  std::vector<double> r(x.data().begin(), x.data().end());
  std::vector<Reflector> reflectors;
  reflectors.reserve(n);
  std::vector<double> work;

  for (std::size_t k = 0; k + 1 < n; ++k) {
    bool below_zero = true;
    for (std::size_t i = k + 1; i < n; ++i)
      if (r[i * n + k] != 0.0) {
        below_zero = false;
        break;
      }
    if (below_zero) continue;

    std::vector<double> v(n - k);
    for (std::size_t i = k; i < n; ++i) v[i - k] = r[i * n + k];
    const double norm_x = norm2(v);
    const double alpha = v[0] >= 0.0 ? -norm_x : norm_x;
    v[0] -= alpha;
    const double vnorm = norm2(v);
    // v is rescaled to unit length so beta == 2 and v'v cannot overflow.
    for (double& vi : v) vi /= vnorm;
    Reflector h{k, std::move(v), 2.0};

    apply_reflector(r, n, h, k + 1, work);
    r[k * n + k] = alpha;
    for (std::size_t i = k + 1; i < n; ++i) r[i * n + k] = 0.0;
    reflectors.push_back(std::move(h));
  }

  // Backward accumulation: q = H_0 H_1 ... applied to the identity. Rows and
  // columns before h.start are untouched by H_k and everything after it.
  std::vector<double> q(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) q[i * n + i] = 1.0;
  for (auto it = reflectors.rbegin(); it != reflectors.rend(); ++it)
    apply_reflector(q, n, *it, it->start, work);

  for (std::size_t k = 0; k < n; ++k) {
    if (r[k * n + k] >= 0.0) continue;
    for (std::size_t j = k; j < n; ++j) r[k * n + j] = -r[k * n + j];
    for (std::size_t i = 0; i < n; ++i) q[i * n + k] = -q[i * n + k];
  }

  return QrResult{Matrix(n, n, std::move(q)), Matrix(n, n, std::move(r))};
}

}  // namespace gds
