#include "gds/random.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "gds/error.hpp"

namespace gds {

double NormalGenerator::operator()() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  constexpr double kScale = 0x1.0p-53;
  // u1 in (0, 1] keeps the logarithm finite; u2 in [0, 1).
  const double u1 = static_cast<double>((engine_() >> 11) + 1) * kScale;
  const double u2 = static_cast<double>(engine_() >> 11) * kScale;
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  return radius * std::cos(angle);
}

Matrix NormalGenerator::matrix(std::size_t rows, std::size_t cols) {
  std::vector<double> data(rows * cols);
  for (double& v : data) v = (*this)();
  return Matrix(rows, cols, std::move(data));
}

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DimensionError("random_matrix: n must be positive");
  return NormalGenerator(seed).matrix(n, n);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace gds
