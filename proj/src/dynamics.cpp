#include "isingcc/dynamics.hpp"

#include <cmath>
#include <numbers>

namespace isingcc {

Angle Angle::zero() { return Angle(0.0, true); }
Angle Angle::half_pi() { return Angle(std::numbers::pi / 2, true); }

Angle Angle::radians(double value) {
  constexpr double kHalfPi = std::numbers::pi / 2;
  if (!(value > -kHalfPi && value <= kHalfPi)) {
    throw Error(ErrorCode::kDomain, "angle " + double_to_string(value) + " outside (-pi/2, pi/2]");
  }
  return Angle(value, false);
}

Angle Angle::parse(const std::string& text) {
  if (text == "0") return zero();
  if (text == "pi/2") return half_pi();
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size()) {
    throw Error(ErrorCode::kSchema, "malformed angle '" + text + "' (radians, \"0\" or \"pi/2\")");
  }
  return radians(v);
}

std::string Angle::to_string() const {
  if (exact_) return value_ == 0.0 ? "0" : "pi/2";
  return double_to_string(value_);
}

template <ScalarType S>
S Angle::sin_squared() const {
  if (exact_) return ScalarTraits<S>::from_ratio(value_ == 0.0 ? 0 : 1, 1);
  if constexpr (ScalarTraits<S>::kExact) {
    throw Error(ErrorCode::kModeMismatch, "angle " + to_string() + " has irrational sin^2");
  } else {
    const double s = std::sin(value_);
    return S(s * s);
  }
}

template <ScalarType S>
S Angle::cos_squared() const {
  if (exact_) return ScalarTraits<S>::from_ratio(value_ == 0.0 ? 1 : 0, 1);
  if constexpr (ScalarTraits<S>::kExact) {
    throw Error(ErrorCode::kModeMismatch, "angle " + to_string() + " has irrational cos^2");
  } else {
    const double c = std::cos(value_);
    return S(c * c);
  }
}

template <ScalarType S>
S Angle::sin_double() const {
  if (exact_) return ScalarTraits<S>::from_ratio(0, 1);
  if constexpr (ScalarTraits<S>::kExact) {
    throw Error(ErrorCode::kModeMismatch, "angle " + to_string() + " has irrational sin(2 theta)");
  } else {
    return S(std::sin(2.0 * value_));
  }
}

void DynamicsParams::validate() const {
  if ((eta1 != 1 && eta1 != -1) || (eta2 != 1 && eta2 != -1)) {
    throw Error(ErrorCode::kDomain, "eta1, eta2 must be +1 or -1");
  }
}

namespace {

template <ScalarType S>
BasicOperator<S> integer_image(const DynamicsParams& p, HalfInt site) {
  using Op = BasicOperator<S>;
  using T = ScalarTraits<S>;
  const Op u = Op::generator(site);
  const Op left = Op::generator(site - kHalf);
  const Op right = Op::generator(site + kHalf);
  const S eta = T::from_ratio(p.eta1, 1);
  const S half_i = T::imag_unit() * T::from_ratio(1, 2);
  Op out = op_scale(u, eta * p.theta1.sin_squared<S>());
  out = out + op_scale(left * u * right, eta * p.theta1.cos_squared<S>());
  out = out + op_scale(left * u - u * right, half_i * p.theta1.sin_double<S>());
  return out;
}

template <ScalarType S>
BasicOperator<S> half_image(const DynamicsParams& p, HalfInt site) {
  using Op = BasicOperator<S>;
  using T = ScalarTraits<S>;
  const Op u = Op::generator(site);
  const Op beta_left = integer_image<S>(p, site - kHalf);
  const Op beta_right = integer_image<S>(p, site + kHalf);
  const S eta = T::from_ratio(p.eta2, 1);
  const S half_i = T::imag_unit() * T::from_ratio(1, 2);
  Op out = op_scale(u, eta * p.theta2.sin_squared<S>());
  out = out + op_scale(beta_left * u * beta_right, eta * p.theta2.cos_squared<S>());
  out = out + op_scale(beta_left * u - u * beta_right, half_i * p.theta2.sin_double<S>());
  return out;
}

// beta(U_0) and beta(U_{1/2}); other generators are integer translates.
template <ScalarType S>
struct GeneratorImages {
  BasicOperator<S> integer_site;
  BasicOperator<S> half_site;

  explicit GeneratorImages(const DynamicsParams& p)
      : integer_site(integer_image<S>(p, HalfInt::integer(0))), half_site(half_image<S>(p, kHalf)) {}

  BasicOperator<S> image(int site_twice) const {
    const HalfInt s = HalfInt::from_twice(site_twice);
    return alpha_shift(s.is_integer() ? integer_site : half_site, s.floor());
  }
};

template <ScalarType S>
BasicOperator<S> step(const GeneratorImages<S>& images, const BasicOperator<S>& x) {
  BasicOperator<S> out;
  std::map<int, BasicOperator<S>> cache;
  for (const auto& [sites, c] : x.terms()) {
    auto product = BasicOperator<S>::scalar(c);
    for (int s : sites) {
      auto it = cache.find(s);
      if (it == cache.end()) it = cache.emplace(s, images.image(s)).first;
      product = product * it->second;
    }
    out = out + product;
  }
  return out;
}

}  // namespace

template <ScalarType S>
BasicOperator<S> beta_generator_image(const DynamicsParams& p, HalfInt site) {
  p.validate();
  return site.is_integer() ? integer_image<S>(p, site) : half_image<S>(p, site);
}

template <ScalarType S>
BasicOperator<S> apply_beta(const DynamicsParams& p, const BasicOperator<S>& x, int t) {
  if (t < 0) {
    throw Error(ErrorCode::kNegativeTime,
                "apply_beta with t = " + std::to_string(t) +
                    ": the inverse step is not computed; use localize_at to label an operator at an earlier time");
  }
  if (x.time_label() != 0) {
    throw Error(ErrorCode::kTimeLabel, "apply_beta needs a surface operator (time label 0)");
  }
  p.validate();
  if (t == 0) return x;
  const GeneratorImages<S> images(p);
  BasicOperator<S> out = x;
  for (int k = 0; k < t; ++k) out = step(images, out);
  return out;
}

template <ScalarType S>
BasicOperator<S> rebase(const DynamicsParams& p, const BasicOperator<S>& x, int target) {
  const int dt = x.time_label() - target;
  if (dt < 0) {
    throw Error(ErrorCode::kNegativeTime, "cannot move an operator at time " + std::to_string(x.time_label()) +
                                              " to later label " + std::to_string(target));
  }
  return apply_beta(p, x.with_time_label(0), dt).with_time_label(target);
}

DoubleCone primitive_causality_bound(HalfInt site) {
  const HalfInt reach = site.is_integer() ? kHalf : HalfInt::integer(1);
  return DoubleCone{0, site - reach, site + reach};
}

bool check_primitive_causality(const DynamicsParams& p, HalfInt site) {
  const DoubleCone bound = primitive_causality_bound(site);
  const auto image =
      p.is_exact() ? to_numeric(beta_generator_image<ExactComplex>(p, site)) : beta_generator_image<Complex>(p, site);
  const auto support = support_interval(image);
  if (!support) return true;
  return support->i >= bound.i && support->j <= bound.j;
}

#define ISINGCC_INSTANTIATE_DYNAMICS(S)                                                         \
  template S Angle::sin_squared<S>() const;                                                     \
  template S Angle::cos_squared<S>() const;                                                     \
  template S Angle::sin_double<S>() const;                                                      \
  template BasicOperator<S> beta_generator_image<S>(const DynamicsParams&, HalfInt);            \
  template BasicOperator<S> apply_beta<S>(const DynamicsParams&, const BasicOperator<S>&, int); \
  template BasicOperator<S> rebase<S>(const DynamicsParams&, const BasicOperator<S>&, int);

ISINGCC_INSTANTIATE_DYNAMICS(Complex)
ISINGCC_INSTANTIATE_DYNAMICS(ExactComplex)

#undef ISINGCC_INSTANTIATE_DYNAMICS

}  // namespace isingcc
