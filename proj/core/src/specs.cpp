#include "gds/specs.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "gds/error.hpp"

namespace gds {

void EigSpec::validate() const {
  if (plus_ones < 1) throw ValidationError("r must be at least 1");
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double c = pairs[k].real();
    const double s = pairs[k].imag();
    if (!std::isfinite(c) || !std::isfinite(s) || std::abs(c * c + s * s - 1.0) > 1e-12) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "eigenvalue off unit circle: pair " << k << " = " << c << (s < 0 ? "" : "+") << s
          << "i";
      throw ValidationError(msg.str());
    }
    if (s == 0.0) {
      throw ValidationError("eigenvalue pair " + std::to_string(k) +
                            " has zero imaginary part; declare real eigenvalues via r or p");
    }
  }
}

void YbeSeedSpec::validate() const {
  if (n < 2) throw ValidationError("ybe seed: n must be at least 2, got " + std::to_string(n));
  if (d.size() != n * n) {
    throw DimensionError("wrong dimensions: d has " + std::to_string(d.size()) +
                         " entries, expected n^2 = " + std::to_string(n * n));
  }
  for (double v : d)
    if (!std::isfinite(v)) throw ValidationError("ybe seed: d must be finite");
}

void YbeSeedSpec::validate_orthogonal_mode() const {
  validate();
  if (d[0] != 1.0) throw ValidationError("orthogonal ybe seed needs d_1 = 1");
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (std::abs(d[i]) != 1.0) {
      throw ValidationError("orthogonal ybe seed needs |d_i| = 1, but d_" + std::to_string(i + 1) +
                            " = " + std::to_string(d[i]));
    }
  }
}

}  // namespace gds
