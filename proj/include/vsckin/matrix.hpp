#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace vsckin {

/// Dense row-major matrix of doubles. Sized for master-equation generators
/// (tens of states), so everything is stored contiguously.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }
  std::span<double> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const double> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  /// Maximum absolute column sum.
  double norm1() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// C = A * B using the active SIMD kernel table.
Matrix multiply(const Matrix& a, const Matrix& b);
/// y = A * x using the active SIMD kernel table.
std::vector<double> multiply(const Matrix& a, std::span<const double> x);
/// Returns alpha * A.
Matrix scaled(const Matrix& a, double alpha);
/// Y += alpha * X (same shape).
void add_scaled(Matrix& y, const Matrix& x, double alpha);

/// Solves A X = B by LU with partial pivoting. Throws NumericalError if A is
/// singular to working precision.
Matrix solve(Matrix a, Matrix b);

}  // namespace vsckin
