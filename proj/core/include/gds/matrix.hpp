#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace gds {

/// Dense real matrix stored row-major in double precision.
///
/// Every instance has at least one row and one column, and holds only finite
/// entries: constructors and `set` reject NaN and Inf. Element writes go
/// through `set`, so the invariant cannot be bypassed from outside.
class Matrix {
 public:
  /// Zero-filled rows x cols matrix.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes ownership of row-major `data`; its length must be rows * cols.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  /// Row-by-row literal, e.g. `Matrix{{1, 2}, {3, 4}}`.
  Matrix(std::initializer_list<std::initializer_list<double>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> entries);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }

  double operator()(std::size_t i, std::size_t j) const noexcept {
    return data_[i * cols_ + j];
  }
  double at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, double value);

  std::span<const double> data() const noexcept { return data_; }
  std::span<const double> row(std::size_t i) const noexcept {
    return std::span<const double>(data_).subspan(i * cols_, cols_);
  }
  std::vector<double> column(std::size_t j) const;

  /// Moves the row-major buffer out, leaving the matrix unusable.
  std::vector<double> take_data() && noexcept { return std::move(data_); }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

/// "RxC" formatting used in error messages.
std::string shape_string(const Matrix& m);

}  // namespace gds
