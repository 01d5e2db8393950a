#include "gds/matrix.hpp"

#include <algorithm>
#include <cmath>

#include "gds/error.hpp"

namespace gds {

namespace {

void require_positive_shape(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive, got " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
}

void require_finite(std::span<const double> data) {
  auto it = std::find_if(data.begin(), data.end(), [](double v) { return !std::isfinite(v); });
  if (it != data.end()) {
    throw NonFiniteError("non-finite matrix entry at flat index " +
                         std::to_string(it - data.begin()));
  }
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {
  require_positive_shape(rows, cols);
  data_.assign(rows * cols, 0.0);
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require_positive_shape(rows, cols);
  if (data_.size() != rows * cols) {
    throw DimensionError("data length " + std::to_string(data_.size()) + " does not match shape " +
                         std::to_string(rows) + "x" + std::to_string(cols));
  }
  require_finite(data_);
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  require_positive_shape(rows_, cols_);
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
  require_finite(data_);
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> entries) {
  const std::size_t n = entries.size();
  require_finite(entries);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = entries[i];
  return m;
}

double Matrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for " + shape_string(*this));
  }
  return data_[i * cols_ + j];
}

void Matrix::set(std::size_t i, std::size_t j, double value) {
  if (i >= rows_ || j >= cols_) {
    throw DimensionError("index (" + std::to_string(i) + "," + std::to_string(j) +
                         ") out of range for " + shape_string(*this));
  }
  if (!std::isfinite(value)) throw NonFiniteError("refusing to store a non-finite entry");
  data_[i * cols_ + j] = value;
}

std::vector<double> Matrix::column(std::size_t j) const {
  std::vector<double> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = data_[i * cols_ + j];
  return c;
}

std::string shape_string(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace gds
