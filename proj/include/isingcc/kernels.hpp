#pragma once

#include <complex>
#include <cstddef>

namespace isingcc::kernels {

using Complex = std::complex<double>;

/// Dense complex inner loops. Every variant must agree with the scalar
/// reference to rounding (FMA contraction is the only difference).
struct KernelTable {
  const char* name;
  /// c = a * b for row-major n x n matrices; c must not alias a or b.
  void (*matmul)(const Complex* a, const Complex* b, Complex* c, std::size_t n);
  /// sum_k x[k] * y[k] (no conjugation).
  Complex (*dot)(const Complex* x, const Complex* y, std::size_t len);
  /// y += alpha * x.
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t len);
};

const KernelTable& scalar_table();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2+FMA.
const KernelTable* avx2_table();

/// The table selected at first use: AVX2 when available, unless the
/// ISINGCC_SIMD environment variable says "scalar".
const KernelTable& active();

bool cpu_supports_avx2();

}  // namespace isingcc::kernels
