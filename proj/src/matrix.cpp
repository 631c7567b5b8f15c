#include "vsckin/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "vsckin/error.hpp"
#include "vsckin/simd/kernels.hpp"

namespace vsckin {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

double Matrix::norm1() const {
  double best = 0.0;
  for (std::size_t c = 0; c < cols_; ++c) {
    double sum = 0.0;
    for (std::size_t r = 0; r < rows_; ++r) sum += std::abs((*this)(r, c));
    best = std::max(best, sum);
  }
  return best;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("multiply: shape mismatch");
  Matrix c(a.rows(), b.cols());
  simd::active_kernels().gemm(a.rows(), a.cols(), b.cols(), a.data().data(), b.data().data(),
                              c.data().data());
  return c;
}

std::vector<double> multiply(const Matrix& a, std::span<const double> x) {
  if (a.cols() != x.size()) throw std::invalid_argument("multiply: shape mismatch");
  std::vector<double> y(a.rows());
  simd::active_kernels().gemv(a.rows(), a.cols(), a.data().data(), x.data(), y.data());
  return y;
}

Matrix scaled(const Matrix& a, double alpha) {
  Matrix out(a.rows(), a.cols());
  simd::active_kernels().scale(a.data().size(), alpha, a.data().data(), out.data().data());
  return out;
}

void add_scaled(Matrix& y, const Matrix& x, double alpha) {
  if (y.rows() != x.rows() || y.cols() != x.cols()) {
    throw std::invalid_argument("add_scaled: shape mismatch");
  }
  simd::active_kernels().axpy(y.data().size(), alpha, x.data().data(), y.data().data());
}

Matrix solve(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  if (!a.square() || b.rows() != n) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t m = b.cols();
  const double scale = a.norm1();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    }
    if (!(std::abs(a(pivot, k)) > std::numeric_limits<double>::min() * scale)) {
      throw NumericalError("solve: matrix is singular to working precision");
    }
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      for (std::size_t c = 0; c < m; ++c) std::swap(b(k, c), b(pivot, c));
    }
    const double inv = 1.0 / a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const double f = a(r, k) * inv;
      if (f == 0.0) continue;
      a(r, k) = 0.0;
      for (std::size_t c = k + 1; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = 0; c < m; ++c) b(r, c) -= f * b(k, c);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    for (std::size_t c = 0; c < m; ++c) {
      double v = b(kk, c);
      for (std::size_t j = kk + 1; j < n; ++j) v -= a(kk, j) * b(j, c);
      b(kk, c) = v / a(kk, kk);
    }
  }
  return b;
}

}  // namespace vsckin
