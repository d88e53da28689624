#include "isingcc/kernels.hpp"

namespace isingcc::kernels {

namespace {

void matmul_scalar(const Complex* a, const Complex* b, Complex* c, std::size_t n) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    Complex* crow = c + i * n;
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex(0.0, 0.0)) continue;
      const Complex* brow = b + k * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += aik * brow[j];
    }
  }
}

Complex dot_scalar(const Complex* x, const Complex* y, std::size_t len) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < len; ++k) {
    re += x[k].real() * y[k].real() - x[k].imag() * y[k].imag();
    im += x[k].real() * y[k].imag() + x[k].imag() * y[k].real();
  }
  return {re, im};
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t len) {
  for (std::size_t k = 0; k < len; ++k) y[k] += alpha * x[k];
}

}  // namespace

const KernelTable& scalar_table() {
  static const KernelTable table{"scalar", &matmul_scalar, &dot_scalar, &axpy_scalar};
  return table;
}

}  // namespace isingcc::kernels
