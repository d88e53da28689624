#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "isingcc/kernels.hpp"

namespace isingcc {

/// Square row-major complex matrix.
class DenseMatrix {
 public:
  using Complex = std::complex<double>;

  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n) : n_(n), data_(n * n) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }
  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }

  DenseMatrix adjoint() const;
  DenseMatrix transpose() const;
  Complex trace() const;
  double max_abs() const;

  DenseMatrix& operator+=(const DenseMatrix& o);
  DenseMatrix& operator-=(const DenseMatrix& o);
  DenseMatrix& operator*=(Complex c);

  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
  friend DenseMatrix operator*(Complex c, DenseMatrix a) { return a *= c; }

 private:
  std::size_t n_ = 0;
  std::vector<Complex> data_;
};

/// Product through the given kernel table (defaults to the active one).
DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, const kernels::KernelTable& table = kernels::active());

/// Tr(a b) without forming the product.
std::complex<double> trace_of_product(const DenseMatrix& a, const DenseMatrix& b,
                                      const kernels::KernelTable& table = kernels::active());

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

}  // namespace isingcc
