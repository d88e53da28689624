#include "isingcc/qpi.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

#include "isingcc/errors.hpp"

namespace isingcc {

namespace {

using Wide = boost::multiprecision::cpp_bin_float_50;

Wide evaluate_wide(const std::vector<Rational>& coeffs) {
  const Wide pi = boost::math::constants::pi<Wide>();
  Wide acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * pi + Wide(numerator(*it)) / Wide(denominator(*it));
  }
  return acc;
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

QPi::QPi(const Rational& c) {
  if (c != 0) coeffs_.push_back(c);
}

QPi QPi::pi() { return from_coefficients({Rational(0), Rational(1)}); }

QPi QPi::from_coefficients(std::vector<Rational> coeffs) {
  QPi q;
  q.coeffs_ = std::move(coeffs);
  q.trim();
  return q;
}

void QPi::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

double QPi::to_double() const { return static_cast<double>(evaluate_wide(coeffs_)); }

int QPi::sign() const {
  if (is_zero()) return 0;
  const Wide v = evaluate_wide(coeffs_);
  if (v == 0) {
    // Only possible if the polynomial has a root within 1e-50 of pi.
    throw Error(ErrorCode::kDomain, "sign of " + to_string() + " not decidable at 50 digits");
  }
  return v > 0 ? 1 : -1;
}

std::string QPi::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (k == 0) {
      out += rational_to_string(mag);
      continue;
    }
    if (mag != 1) out += rational_to_string(mag) + "*";
    out += "pi";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

QPi& QPi::operator+=(const QPi& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPi& QPi::operator-=(const QPi& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPi& QPi::operator*=(const QPi& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

QPi& QPi::operator/=(const QPi& o) {
  if (o.is_zero()) throw Error(ErrorCode::kZeroDenominator, "division of Q[pi] value by zero");
  if (!o.is_rational()) {
    throw Error(ErrorCode::kModeMismatch, "quotient by " + o.to_string() + " is not an element of Q[pi]");
  }
  const Rational d = o.constant();
  for (auto& c : coeffs_) c /= d;
  return *this;
}

QPi QPi::operator-() const {
  QPi q = *this;
  for (auto& c : q.coeffs_) c = -c;
  return q;
}

std::string ExactComplex::to_string() const {
  if (im.is_zero()) return re.to_string();
  const std::string imag = "(" + im.to_string() + ")*i";
  if (re.is_zero()) return imag;
  return "(" + re.to_string() + ")+" + imag;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  QPi r = re * o.re - im * o.im;
  QPi i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

}  // namespace isingcc
