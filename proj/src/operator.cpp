#include "isingcc/operator.hpp"

#include <cstdio>

namespace isingcc {

std::string double_to_string(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scalar_to_string(const Complex& z) {
  if (z.imag() == 0.0) return double_to_string(z.real());
  if (z.real() == 0.0) return "(" + double_to_string(z.imag()) + ")*i";
  return "(" + double_to_string(z.real()) + ")+(" + double_to_string(z.imag()) + ")*i";
}

Operator to_numeric(const ExactOperator& x) {
  Operator out;
  for (const auto& [sites, c] : x.terms()) out.add_term(sites, c.to_complex());
  return out.with_time_label(x.time_label());
}

namespace {

template <ScalarType S>
std::string render(const BasicOperator<S>& x) {
  std::string body;
  if (x.is_zero()) {
    body = "0";
  } else {
    for (const auto& [sites, c] : x.terms()) {
      if (!body.empty()) body += " + ";
      const std::string coeff = scalar_to_string(c);
      if (sites.empty()) {
        body += coeff;
      } else if (coeff == "1") {
        body += sites_to_string(sites);
      } else if (coeff.find_first_of("+-", 1) != std::string::npos) {
        body += "(" + coeff + ")*" + sites_to_string(sites);
      } else {
        body += coeff + "*" + sites_to_string(sites);
      }
    }
  }
  if (x.time_label() == 0) return body;
  return "beta^" + std::to_string(x.time_label()) + "(" + body + ")";
}

}  // namespace

std::string to_string(const Operator& x) { return render(x); }
std::string to_string(const ExactOperator& x) { return render(x); }

}  // namespace isingcc
