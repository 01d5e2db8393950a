#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "gds/matrix.hpp"

namespace gds {

/// Complex vector kept as separate real and imaginary parts of equal length.
class ComplexVec {
 public:
  ComplexVec(std::vector<double> re, std::vector<double> im);

  std::size_t size() const noexcept { return re_.size(); }
  std::span<const double> re() const noexcept { return re_; }
  std::span<const double> im() const noexcept { return im_; }

  /// Euclidean norm sqrt(sum |v_i|^2).
  double norm() const;

 private:
  std::vector<double> re_;
  std::vector<double> im_;
};

// Products. All throw DimensionError on incompatible shapes.
Matrix mat_mul(const Matrix& a, const Matrix& b);
/// a * transpose(b) without the caller forming the transpose.
Matrix mat_mul_transposed(const Matrix& a, const Matrix& b);
/// transpose(a) * a; the result is exactly symmetric.
Matrix gram(const Matrix& a);
Matrix transpose(const Matrix& a);

/// Block matrix whose (i,j) block is a(i,j) * b.
Matrix kron(const Matrix& a, const Matrix& b);

Matrix add(const Matrix& a, const Matrix& b);
Matrix subtract(const Matrix& a, const Matrix& b);
Matrix scale(double s, const Matrix& a);

/// Block-diagonal matrix with `blocks` along the diagonal.
Matrix block_diag(std::span<const Matrix> blocks);
/// Contiguous sub-block of `a` starting at (row0, col0).
Matrix sub_block(const Matrix& a, std::size_t row0, std::size_t col0, std::size_t rows,
                 std::size_t cols);

std::vector<double> mat_vec(const Matrix& a, std::span<const double> x);
/// transpose(a) * x.
std::vector<double> mat_t_vec(const Matrix& a, std::span<const double> x);
ComplexVec mat_vec(const Matrix& a, const ComplexVec& x);

std::vector<double> ones(std::size_t n);
/// Overflow-safe Euclidean norm.
double norm2(std::span<const double> x);

inline Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }
inline Matrix operator+(const Matrix& a, const Matrix& b) { return add(a, b); }
inline Matrix operator-(const Matrix& a, const Matrix& b) { return subtract(a, b); }
inline Matrix operator*(double s, const Matrix& a) { return scale(s, a); }

}  // namespace gds
