#include "isingcc/dense.hpp"

#include <algorithm>
#include <cmath>

namespace isingcc {

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = std::conj((*this)(r, c));
  }
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix m(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) m(c, r) = (*this)(r, c);
  }
  return m;
}

std::complex<double> DenseMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
  return t;
}

double DenseMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& o) {
  kernels::active().axpy(1.0, o.data(), data(), data_.size());
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& o) {
  kernels::active().axpy(-1.0, o.data(), data(), data_.size());
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex c) {
  for (auto& z : data_) z *= c;
  return *this;
}

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, const kernels::KernelTable& table) {
  DenseMatrix c(a.size());
  table.matmul(a.data(), b.data(), c.data(), a.size());
  return c;
}

std::complex<double> trace_of_product(const DenseMatrix& a, const DenseMatrix& b, const kernels::KernelTable& table) {
  // Tr(ab) = sum_{i,k} a_ik b_ki: row i of a against column i of b.
  const DenseMatrix bt = b.transpose();
  std::complex<double> t = 0.0;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i < n; ++i) t += table.dot(a.data() + i * n, bt.data() + i * n, n);
  return t;
}

double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < a.size(); ++c) m = std::max(m, std::abs(a(r, c) - b(r, c)));
  }
  return m;
}

}  // namespace isingcc
