// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include "vsckin/simd/kernels.hpp"

namespace vsckin::simd {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

void gemm_avx2(std::size_t rows, std::size_t inner, std::size_t cols, const double* a,
               const double* b, double* c) {
  for (std::size_t i = 0; i < rows * cols; ++i) c[i] = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double* ci = c + i * cols;
    for (std::size_t k = 0; k < inner; ++k) {
      const double aik = a[i * inner + k];
      if (aik == 0.0) continue;
      const __m256d av = _mm256_set1_pd(aik);
      const double* bk = b + k * cols;
      std::size_t j = 0;
      for (; j + 8 <= cols; j += 8) {
        __m256d c0 = _mm256_loadu_pd(ci + j);
        __m256d c1 = _mm256_loadu_pd(ci + j + 4);
        c0 = _mm256_fmadd_pd(av, _mm256_loadu_pd(bk + j), c0);
        c1 = _mm256_fmadd_pd(av, _mm256_loadu_pd(bk + j + 4), c1);
        _mm256_storeu_pd(ci + j, c0);
        _mm256_storeu_pd(ci + j + 4, c1);
      }
      for (; j + 4 <= cols; j += 4) {
        const __m256d cv = _mm256_fmadd_pd(av, _mm256_loadu_pd(bk + j), _mm256_loadu_pd(ci + j));
        _mm256_storeu_pd(ci + j, cv);
      }
      for (; j < cols; ++j) ci[j] += aik * bk[j];
    }
  }
}

void gemv_avx2(std::size_t rows, std::size_t cols, const double* a, const double* x,
               double* y) {
  for (std::size_t i = 0; i < rows; ++i) {
    const double* ai = a + i * cols;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 8 <= cols; j += 8) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(ai + j), _mm256_loadu_pd(x + j), acc0);
      acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(ai + j + 4), _mm256_loadu_pd(x + j + 4), acc1);
    }
    for (; j + 4 <= cols; j += 4) {
      acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(ai + j), _mm256_loadu_pd(x + j), acc0);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; j < cols; ++j) sum += ai[j] * x[j];
    y[i] = sum;
  }
}

void axpy_avx2(std::size_t n, double alpha, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(y + i, _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scale_avx2(std::size_t n, double alpha, const double* x, double* y) {
  const __m256d av = _mm256_set1_pd(alpha);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) _mm256_storeu_pd(y + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
  for (; i < n; ++i) y[i] = alpha * x[i];
}

}  // namespace

namespace detail {
const KernelTable kAvx2Kernels{Isa::kAvx2, gemm_avx2, gemv_avx2, axpy_avx2, scale_avx2};
}  // namespace detail

}  // namespace vsckin::simd
