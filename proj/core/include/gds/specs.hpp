#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace gds {

/// Prescribed spectrum for an orthogonal generalized doubly stochastic matrix:
/// `plus_ones` eigenvalues equal to +1, `minus_ones` equal to -1, and for each
/// entry z of `pairs` the conjugate pair z, conj(z). Only one representative
/// per pair is listed.
struct EigSpec {
  std::size_t plus_ones = 1;
  std::size_t minus_ones = 0;
  std::vector<std::complex<double>> pairs;

  /// Total dimension r + p + 2m.
  std::size_t dimension() const noexcept { return plus_ones + minus_ones + 2 * pairs.size(); }

  /// Throws ValidationError unless r >= 1, every |z_k| is 1 to within 1e-12
  /// (checked on c^2 + s^2), and every z_k has a nonzero imaginary part.
  void validate() const;
};

/// Input to the Yang-Baxter seed: base dimension n and n^2 diagonal scalings.
struct YbeSeedSpec {
  std::size_t n = 2;
  std::vector<double> d;

  /// n >= 2 and d.size() == n^2.
  void validate() const;
  /// Additionally d[0] == 1 and |d[i]| == 1, which makes the seed orthogonal
  /// with first row and column e_1.
  void validate_orthogonal_mode() const;
};

}  // namespace gds
