#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "gds/matrix.hpp"

namespace gds {

/// Standard-normal variates from std::mt19937_64 through the Box-Muller
/// transform. Both the engine and the transform are fully specified, so a
/// given seed yields the same stream on every conforming platform up to the
/// last-bit behaviour of std::log / std::cos / std::sin.
class NormalGenerator {
 public:
  explicit NormalGenerator(std::uint64_t seed) : engine_(seed) {}

  double operator()();

  /// rows x cols matrix filled in row-major order.
  Matrix matrix(std::size_t rows, std::size_t cols);

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

/// n x n standard-normal matrix from a fresh generator seeded with `seed`.
Matrix random_matrix(std::size_t n, std::uint64_t seed);

/// Decorrelated seed for stream `index` under master seed `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace gds
