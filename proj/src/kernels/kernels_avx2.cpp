// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "isingcc/kernels.hpp"

namespace isingcc::kernels::avx2 {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
// (ar + i ai)(br + i bi): fmaddsub(ar, b, ai * swap(b)) gives
// [ar*br - ai*bi, ar*bi + ai*br] in each lane pair.
inline __m256d cmul(__m256d ar, __m256d ai, __m256d b) {
  const __m256d b_swapped = _mm256_permute_pd(b, 0b0101);
  return _mm256_fmaddsub_pd(ar, b, _mm256_mul_pd(ai, b_swapped));
}

void matmul(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  const std::size_t pairs = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    double* crow = reinterpret_cast<double*>(c + i * n);
    for (std::size_t j = 0; j < 2 * n; ++j) crow[j] = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex(0.0, 0.0)) continue;
      const __m256d ar = _mm256_set1_pd(aik.real());
      const __m256d ai = _mm256_set1_pd(aik.imag());
      const double* brow = reinterpret_cast<const double*>(b + k * n);
      for (std::size_t p = 0; p < pairs; ++p) {
        const __m256d bv = _mm256_loadu_pd(brow + 4 * p);
        const __m256d cv = _mm256_loadu_pd(crow + 4 * p);
        _mm256_storeu_pd(crow + 4 * p, _mm256_add_pd(cv, cmul(ar, ai, bv)));
      }
      if (n % 2) {
        Complex* last = c + i * n + (n - 1);
        *last += aik * b[k * n + (n - 1)];
      }
    }
  }
}

Complex dot(const Complex* x, const Complex* y, std::size_t len) {
  __m256d acc = _mm256_setzero_pd();
  const double* xd = reinterpret_cast<const double*>(x);
  const double* yd = reinterpret_cast<const double*>(y);
  const std::size_t pairs = len / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
    const __m256d yv = _mm256_loadu_pd(yd + 4 * p);
    const __m256d xr = _mm256_movedup_pd(xv);
    const __m256d xi = _mm256_permute_pd(xv, 0b1111);
    acc = _mm256_add_pd(acc, cmul(xr, xi, yv));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  Complex sum(lanes[0] + lanes[2], lanes[1] + lanes[3]);
  if (len % 2) sum += x[len - 1] * y[len - 1];
  return sum;
}

void axpy(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  const double* xd = reinterpret_cast<const double*>(x);
  double* yd = reinterpret_cast<double*>(y);
  const std::size_t pairs = len / 2;
  for (std::size_t p = 0; p < pairs; ++p) {
    const __m256d xv = _mm256_loadu_pd(xd + 4 * p);
    const __m256d yv = _mm256_loadu_pd(yd + 4 * p);
    _mm256_storeu_pd(yd + 4 * p, _mm256_add_pd(yv, cmul(ar, ai, xv)));
  }
  if (len % 2) y[len - 1] += alpha * x[len - 1];
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"avx2", &matmul, &dot, &axpy};
  return t;
}

}  // namespace isingcc::kernels::avx2
