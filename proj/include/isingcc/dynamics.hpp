#pragma once

#include <map>
#include <string>

#include "isingcc/operator.hpp"

namespace isingcc {

/// Angle of the causal dynamics: either one of the exact tokens 0, pi/2
/// (usable in exact mode) or a float in radians.
class Angle {
 public:
  static Angle zero();
  static Angle half_pi();
  /// Throws kDomain outside (-pi/2, pi/2].
  static Angle radians(double value);
  /// "0", "pi/2" give exact angles; any other number is float radians.
  static Angle parse(const std::string& text);

  bool is_exact() const { return exact_; }
  double value() const { return value_; }
  std::string to_string() const;

  /// sin^2, cos^2 and sin(2 theta) in the scalar type; exact mode throws
  /// kModeMismatch for float angles.
  template <ScalarType S>
  S sin_squared() const;
  template <ScalarType S>
  S cos_squared() const;
  template <ScalarType S>
  S sin_double() const;

 private:
  Angle(double v, bool exact) : value_(v), exact_(exact) {}
  double value_ = 0.0;
  bool exact_ = true;
};

/// Parameters (theta1, theta2; eta1, eta2) of the unit causal time step beta.
struct DynamicsParams {
  Angle theta1 = Angle::zero();
  Angle theta2 = Angle::zero();
  int eta1 = 1;
  int eta2 = 1;

  /// Throws kDomain unless eta1, eta2 are +-1.
  void validate() const;
  bool is_exact() const { return theta1.is_exact() && theta2.is_exact(); }
};

/// beta(U_site): the three-term image for integer sites; half-integer sites
/// substitute the integer-site images as written, then canonicalize.
template <ScalarType S>
BasicOperator<S> beta_generator_image(const DynamicsParams& p, HalfInt site);

/// beta^t(x) for a surface operator x; each monomial maps to the ordered
/// product of generator images. Throws kNegativeTime for t < 0 and
/// kTimeLabel if x is not a surface operator.
template <ScalarType S>
BasicOperator<S> apply_beta(const DynamicsParams& p, const BasicOperator<S>& x, int t);

/// Marks x as beta^t of itself without expanding. Negative t is allowed as a label.
template <ScalarType S>
BasicOperator<S> localize_at(const BasicOperator<S>& x, int t) {
  return x.with_time_label(t);
}

/// Re-expresses a labelled operator at an earlier label by expanding the
/// difference forward (no inverse is ever taken). Throws kNegativeTime if
/// `target` is later than x's label.
template <ScalarType S>
BasicOperator<S> rebase(const DynamicsParams& p, const BasicOperator<S>& x, int target);

/// Integer space translation U_i -> U_{i+dx}.
template <ScalarType S>
BasicOperator<S> alpha_shift(const BasicOperator<S>& x, int dx) {
  BasicOperator<S> out;
  for (const auto& [sites, c] : x.terms()) {
    SiteSet shifted = sites;
    for (int& s : shifted) s += 2 * dx;
    out.add_term(shifted, c);
  }
  return out.with_time_label(x.time_label());
}

/// Commutation of two labelled operators, compared at the earlier label.
template <ScalarType S>
bool commutes_localized(const DynamicsParams& p, const BasicOperator<S>& x, const BasicOperator<S>& y,
                        double tol = kDefaultTolerance) {
  const int t = std::min(x.time_label(), y.time_label());
  return commutes(rebase(p, x, t).with_time_label(0), rebase(p, y, t).with_time_label(0), tol);
}

/// Support of beta(U_site) stays within [site - 1/2, site + 1/2] for integer
/// sites and [site - 1, site + 1] for half-integer sites.
bool check_primitive_causality(const DynamicsParams& p, HalfInt site);

/// The bound used by check_primitive_causality.
DoubleCone primitive_causality_bound(HalfInt site);

}  // namespace isingcc
