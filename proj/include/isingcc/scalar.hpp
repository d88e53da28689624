#pragma once

#include <cmath>
#include <complex>
#include <concepts>
#include <string>

#include "isingcc/qpi.hpp"

namespace isingcc {

using Complex = std::complex<double>;

/// Default tolerance for float-mode idempotence / commutation checks.
inline constexpr double kDefaultTolerance = 1e-10;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Complex> {
  using Real = double;
  static constexpr bool kExact = false;
  // Float-mode terms below this magnitude are dropped from operators.
  static constexpr double kDrop = 1e-14;

  static Complex zero() { return {0.0, 0.0}; }
  static Complex one() { return {1.0, 0.0}; }
  static Complex imag_unit() { return {0.0, 1.0}; }
  static Complex from_real(double r) { return {r, 0.0}; }
  static Complex from_ratio(long long num, long long den) {
    return {static_cast<double>(num) / static_cast<double>(den), 0.0};
  }
  static Complex conj(const Complex& z) { return std::conj(z); }
  static bool negligible(const Complex& z) { return std::abs(z) <= kDrop; }
  static bool is_zero(const Complex& z, double tol) { return std::abs(z) <= tol; }
  static double magnitude(const Complex& z) { return std::abs(z); }
  static Complex to_complex(const Complex& z) { return z; }
  static double real_part(const Complex& z) { return z.real(); }
  static bool real_is_zero(double r, double tol) { return std::abs(r) <= tol; }
  static int real_sign(double r, double tol) { return std::abs(r) <= tol ? 0 : (r > 0 ? 1 : -1); }
  static double real_to_double(double r) { return r; }
};

template <>
struct ScalarTraits<ExactComplex> {
  using Real = QPi;
  static constexpr bool kExact = true;

  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex imag_unit() { return ExactComplex::i(); }
  static ExactComplex from_real(const QPi& r) { return ExactComplex(r); }
  static ExactComplex from_ratio(long long num, long long den) { return ExactComplex(QPi::ratio(num, den)); }
  static ExactComplex conj(const ExactComplex& z) { return isingcc::conj(z); }
  static bool negligible(const ExactComplex& z) { return z.is_zero(); }
  static bool is_zero(const ExactComplex& z, double /*tol*/) { return z.is_zero(); }
  static double magnitude(const ExactComplex& z) { return std::abs(z.to_complex()); }
  static Complex to_complex(const ExactComplex& z) { return z.to_complex(); }
  static QPi real_part(const ExactComplex& z) { return z.re; }
  static bool real_is_zero(const QPi& r, double /*tol*/) { return r.is_zero(); }
  static int real_sign(const QPi& r, double /*tol*/) { return r.sign(); }
  static double real_to_double(const QPi& r) { return r.to_double(); }
};

template <class S>
concept ScalarType = requires { typename ScalarTraits<S>::Real; };

template <ScalarType S>
using RealOf = typename ScalarTraits<S>::Real;

/// Multiplies by i^k.
template <ScalarType S>
S times_i_power(S z, int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return z;
    case 1:
      return z * ScalarTraits<S>::imag_unit();
    case 2:
      return -z;
    default:
      return -(z * ScalarTraits<S>::imag_unit());
  }
}

inline std::string scalar_to_string(const ExactComplex& z) { return z.to_string(); }
std::string scalar_to_string(const Complex& z);
/// 17 significant digits, round-trippable.
std::string double_to_string(double v);

}  // namespace isingcc
