#pragma once

#include "gds/matrix.hpp"

namespace gds {

/// Tuning knobs for spectral_norm. Defaults are what the rest of the library uses.
struct PowerIterationOptions {
  double relative_tolerance = 1e-14;
  int max_iterations = 100000;
};

/// Largest singular value of `a`, by power iteration on a'a.
///
/// Starts from the normalized vector v_i = 1 + 1/(i+1) and stops once the
/// Rayleigh quotient ||a v||^2 grows by less than `relative_tolerance` of its
/// value (a drop means rounding noise has taken over, which also stops), or
/// after `max_iterations`. Returns the best estimate seen. Zero matrix -> 0.
double spectral_norm(const Matrix& a, const PowerIterationOptions& options = {});

double frobenius_norm(const Matrix& a);

}  // namespace gds
