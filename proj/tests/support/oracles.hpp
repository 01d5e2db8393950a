#pragma once

// Reference computations for the test suites. None of them call the library's
// own kernels.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "gds/matrix.hpp"

namespace gds::testing {

inline constexpr double kEps = 0x1.0p-52;

/// Textbook i-j-k triple loop.
inline Matrix naive_mul(const Matrix& a, const Matrix& b) {
  std::vector<double> c(a.rows() * b.cols(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c[i * b.cols() + j] = s;
    }
  return Matrix(a.rows(), b.cols(), std::move(c));
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  return m;
}

/// Eigenvalues of a symmetric matrix by cyclic Jacobi rotations, run until the
/// off-diagonal mass is negligible.
inline std::vector<double> jacobi_eigenvalues(const Matrix& sym) {
  const std::size_t n = sym.rows();
  std::vector<double> a(sym.data().begin(), sym.data().end());
  auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, diag = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) (i == j ? diag : off) += at(i, j) * at(i, j);
    if (off <= 1e-32 * diag || off == 0.0) break;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = at(p, q);
        if (apq == 0.0) continue;
        const double theta = (at(q, q) - at(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = at(k, p), akq = at(k, q);
          at(k, p) = c * akp - s * akq;
          at(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk - s * aqk;
          at(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = at(i, i);
  return ev;
}

/// Largest singular value as sqrt of the largest Jacobi eigenvalue of a'a.
inline double jacobi_spectral_norm(const Matrix& a) {
  std::vector<double> g(a.cols() * a.cols(), 0.0);
  for (std::size_t i = 0; i < a.cols(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.rows(); ++k) s += a(k, i) * a(k, j);
      g[i * a.cols() + j] = s;
    }
  const auto ev = jacobi_eigenvalues(Matrix(a.cols(), a.cols(), std::move(g)));
  return std::sqrt(std::max(0.0, *std::max_element(ev.begin(), ev.end())));
}

/// Larger root of t^2 - (1 - z) t - z (1 - z) by bisection on [vertex, 2];
/// f(vertex) <= 0 < f(2) for every z in [-1/3, 1].
inline double bisect_larger_root(double z) {
  auto f = [z](double t) { return t * (t - (1.0 - z)) - z * (1.0 - z); };
  double lo = (1.0 - z) / 2.0;
  double hi = 2.0;
  for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid == lo || mid == hi) break;
    (f(mid) <= 0.0 ? lo : hi) = mid;
  }
  return lo + (hi - lo) / 2.0;
}

/// Uniform(-1, 1) entries from a private engine, independent of the library RNG.
inline Matrix uniform_matrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  std::vector<double> v(rows * cols);
  for (double& x : v) x = dist(rng);
  return Matrix(rows, cols, std::move(v));
}

}  // namespace gds::testing
