#include "gds/norms.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "gds/dense.hpp"

namespace gds {

namespace {

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (double v : a.data()) m = std::max(m, std::abs(v));
  return m;
}

// Runs the iteration from `v` (unit length). Returns the largest Rayleigh
// quotient observed. `at` is transpose(a): both products then run as
// row-wise axpy updates, which vectorize, instead of dot-product reductions.
double power_iterate(const Matrix& a, const Matrix& at, std::vector<double> v,
                     const PowerIterationOptions& opt) {
  double best = 0.0;
  std::optional<double> previous;
  for (int it = 0; it < opt.max_iterations; ++it) {
    const auto y = mat_t_vec(at, v);
    double rho = 0.0;
    for (double yi : y) rho += yi * yi;
    best = std::max(best, rho);
    if (previous && rho - *previous <= opt.relative_tolerance * rho) break;
    previous = rho;

    auto w = mat_t_vec(a, y);
    const double wn = norm2(w);
    if (wn == 0.0) break;
    for (double& wi : w) wi /= wn;
    v = std::move(w);
  }
  return best;
}

}  // namespace

double spectral_norm(const Matrix& a, const PowerIterationOptions& options) {
  const double amax = max_abs(a);
  if (amax == 0.0) return 0.0;

  // Entries far from unit magnitude would push ||a v||^2 out of range.
  const bool rescale = amax > 1e150 || amax < 1e-150;
  const Matrix scaled = rescale ? scale(1.0 / amax, a) : a;
  const double factor = rescale ? amax : 1.0;
  const Matrix scaled_t = transpose(scaled);

  const std::size_t n = a.cols();
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = 1.0 + 1.0 / static_cast<double>(i + 1);
  const double vn = norm2(v);
  for (double& vi : v) vi /= vn;

  double rho = power_iterate(scaled, scaled_t, std::move(v), options);
  if (rho == 0.0) {
    // The start vector fell in the null space; the column of largest norm
    // cannot, since a e_j is that column.
    std::size_t best_col = 0;
    double best_norm = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      const double cn = norm2(scaled.column(j));
      if (cn > best_norm) {
        best_norm = cn;
        best_col = j;
      }
    }
    std::vector<double> e(n, 0.0);
    e[best_col] = 1.0;
    rho = power_iterate(scaled, scaled_t, std::move(e), options);
  }
  return factor * std::sqrt(rho);
}

double frobenius_norm(const Matrix& a) { return norm2(a.data()); }

}  // namespace gds
