#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <string>
#include <vector>

namespace isingcc {

using Rational = boost::multiprecision::cpp_rational;

/// An element a0 + a1*pi + a2*pi^2 + ... of Q[pi]. pi is transcendental, so
/// equality is coefficient-wise. Coefficients are kept in lowest terms with
/// no trailing zeros.
class QPi {
 public:
  QPi() = default;
  QPi(const Rational& c);                 // NOLINT(google-explicit-constructor)
  QPi(long long c) : QPi(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  QPi(int c) : QPi(Rational(c)) {}        // NOLINT(google-explicit-constructor)

  static QPi pi();
  static QPi from_coefficients(std::vector<Rational> coeffs);
  static QPi ratio(long long num, long long den) { return QPi(Rational(num, den)); }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// -1 for zero.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_rational() const { return coeffs_.size() <= 1; }
  Rational constant() const { return coeffs_.empty() ? Rational(0) : coeffs_.front(); }

  double to_double() const;
  /// Sign of the real number, decided at 50 significant digits.
  int sign() const;

  /// Canonical text, e.g. "1/16-1/400*pi^2", "0", "pi".
  std::string to_string() const;

  QPi& operator+=(const QPi& o);
  QPi& operator-=(const QPi& o);
  QPi& operator*=(const QPi& o);
  /// Division by a rational constant only; throws kModeMismatch otherwise.
  QPi& operator/=(const QPi& o);

  friend QPi operator+(QPi a, const QPi& b) { return a += b; }
  friend QPi operator-(QPi a, const QPi& b) { return a -= b; }
  friend QPi operator*(QPi a, const QPi& b) { return a *= b; }
  friend QPi operator/(QPi a, const QPi& b) { return a /= b; }
  QPi operator-() const;

  friend bool operator==(const QPi& a, const QPi& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

std::string rational_to_string(const Rational& r);

/// Exact complex scalar re + i*im with re, im in Q[pi].
struct ExactComplex {
  QPi re;
  QPi im;

  ExactComplex() = default;
  ExactComplex(QPi r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(QPi r, QPi i) : re(std::move(r)), im(std::move(i)) {}
  ExactComplex(int r) : re(r) {}  // NOLINT(google-explicit-constructor)

  static ExactComplex i() { return {QPi(0), QPi(1)}; }

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  std::string to_string() const;

  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  ExactComplex operator-() const { return {-re, -im}; }
  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;
};

inline ExactComplex conj(const ExactComplex& z) { return {z.re, -z.im}; }

}  // namespace isingcc
