#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>

#include "isingcc/errors.hpp"
#include "isingcc/geometry.hpp"
#include "isingcc/monomial.hpp"
#include "isingcc/scalar.hpp"

namespace isingcc {

/// Finite linear combination of canonical generator monomials, optionally
/// carrying a time label t (meaning beta^t of the stored surface operator).
/// Monomial phases are folded into the coefficients; zero terms are absent.
template <ScalarType S>
class BasicOperator {
 public:
  using Scalar = S;
  using Traits = ScalarTraits<S>;
  using Terms = std::map<SiteSet, S>;

  BasicOperator() = default;

  static BasicOperator identity() { return scalar(Traits::one()); }
  static BasicOperator scalar(const S& c) {
    BasicOperator op;
    op.add_term({}, c);
    return op;
  }
  static BasicOperator generator(HalfInt site) {
    BasicOperator op;
    op.add_term({site.twice()}, Traits::one());
    return op;
  }
  static BasicOperator monomial(const GeneratorMonomial& m, const S& coeff = Traits::one()) {
    BasicOperator op;
    op.add_term(m.sites, times_i_power(coeff, m.phase.power()));
    return op;
  }

  /// Accumulates coeff * U_sites; `sites` must be canonical.
  void add_term(const SiteSet& sites, const S& coeff) {
    if (Traits::negligible(coeff)) return;
    auto [it, inserted] = terms_.try_emplace(sites, coeff);
    if (!inserted) {
      it->second += coeff;
      if (Traits::negligible(it->second)) terms_.erase(it);
    }
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// True if the operator is a multiple of the identity (including zero).
  bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }
  S coefficient(const SiteSet& sites) const {
    auto it = terms_.find(sites);
    return it == terms_.end() ? Traits::zero() : it->second;
  }

  int time_label() const { return time_label_; }
  bool operator==(const BasicOperator&) const = default;
  BasicOperator with_time_label(int t) const {
    BasicOperator op = *this;
    op.time_label_ = t;
    return op;
  }

 private:
  Terms terms_;
  int time_label_ = 0;
};

using Operator = BasicOperator<Complex>;
using ExactOperator = BasicOperator<ExactComplex>;

namespace detail {

template <ScalarType S>
int combined_label(const BasicOperator<S>& x, const BasicOperator<S>& y, const char* what) {
  if (x.time_label() == y.time_label()) return x.time_label();
  if (x.is_scalar()) return y.time_label();
  if (y.is_scalar()) return x.time_label();
  throw Error(ErrorCode::kTimeLabel, std::string(what) + " of operators at time labels " +
                                         std::to_string(x.time_label()) + " and " + std::to_string(y.time_label()));
}

}  // namespace detail

template <ScalarType S>
BasicOperator<S> op_add(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  BasicOperator<S> out = x.with_time_label(detail::combined_label(x, y, "sum"));
  for (const auto& [sites, c] : y.terms()) out.add_term(sites, c);
  return out;
}

template <ScalarType S>
BasicOperator<S> op_scale(const BasicOperator<S>& x, const S& c) {
  BasicOperator<S> out;
  for (const auto& [sites, coeff] : x.terms()) out.add_term(sites, coeff * c);
  return out.with_time_label(x.time_label());
}

template <ScalarType S>
BasicOperator<S> op_sub(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  return op_add(x, op_scale(y, -ScalarTraits<S>::one()));
}

template <ScalarType S>
BasicOperator<S> op_mul(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  BasicOperator<S> out;
  const int label = detail::combined_label(x, y, "product");
  for (const auto& [sa, ca] : x.terms()) {
    for (const auto& [sb, cb] : y.terms()) {
      const S c = ca * cb;
      out.add_term(site_product(sa, sb), merge_sign(sa, sb) < 0 ? -c : c);
    }
  }
  return out.with_time_label(label);
}

/// (c U_{s1}...U_{sk})^dagger = conj(c) U_{sk}...U_{s1}; reordering costs one
/// sign per nearest-neighbour pair in the set.
template <ScalarType S>
BasicOperator<S> op_adjoint(const BasicOperator<S>& x) {
  BasicOperator<S> out;
  for (const auto& [sites, c] : x.terms()) {
    const S cc = ScalarTraits<S>::conj(c);
    out.add_term(sites, internal_adjacent_pairs(sites) % 2 ? -cc : cc);
  }
  return out.with_time_label(x.time_label());
}

template <ScalarType S>
BasicOperator<S> operator+(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  return op_add(x, y);
}
template <ScalarType S>
BasicOperator<S> operator-(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  return op_sub(x, y);
}
template <ScalarType S>
BasicOperator<S> operator*(const BasicOperator<S>& x, const BasicOperator<S>& y) {
  return op_mul(x, y);
}
template <ScalarType S>
BasicOperator<S> operator*(const S& c, const BasicOperator<S>& x) {
  return op_scale(x, c);
}

/// Unique normalized trace: the identity coefficient.
template <ScalarType S>
S normalized_trace(const BasicOperator<S>& x) {
  return x.coefficient({});
}

/// Sup of coefficient magnitudes.
template <ScalarType S>
double coefficient_sup(const BasicOperator<S>& x) {
  double m = 0.0;
  for (const auto& [sites, c] : x.terms()) m = std::max(m, ScalarTraits<S>::magnitude(c));
  return m;
}

/// Exact mode: x == y. Float mode: sup |x - y| <= tol.
template <ScalarType S>
bool approx_equal(const BasicOperator<S>& x, const BasicOperator<S>& y, double tol = kDefaultTolerance) {
  const BasicOperator<S> d = op_sub(x, y);
  if constexpr (ScalarTraits<S>::kExact) {
    return d.is_zero();
  } else {
    return coefficient_sup(d) <= tol;
  }
}

template <ScalarType S>
bool commutes(const BasicOperator<S>& x, const BasicOperator<S>& y, double tol = kDefaultTolerance) {
  return approx_equal(op_mul(x, y), op_mul(y, x), tol);
}

template <ScalarType S>
bool is_projection(const BasicOperator<S>& x, double tol = kDefaultTolerance) {
  return approx_equal(x, op_adjoint(x), tol) && approx_equal(op_mul(x, x), x, tol);
}

/// Smallest interval containing every site, reported as the double cone at
/// the operator's time label. Identity (and scalars) -> nullopt. Throws on zero.
template <ScalarType S>
std::optional<DoubleCone> support_interval(const BasicOperator<S>& x) {
  if (x.is_zero()) throw Error(ErrorCode::kZeroOperator, "support of the zero operator");
  std::optional<int> lo;
  std::optional<int> hi;
  for (const auto& [sites, c] : x.terms()) {
    if (sites.empty()) continue;
    lo = lo ? std::min(*lo, sites.front()) : sites.front();
    hi = hi ? std::max(*hi, sites.back()) : sites.back();
  }
  if (!lo) return std::nullopt;
  return DoubleCone{x.time_label(), HalfInt::from_twice(*lo), HalfInt::from_twice(*hi)};
}

/// Explicit coercion from exact to float mode.
Operator to_numeric(const ExactOperator& x);

/// Compact text form, e.g. "1/2 + 1/2*U-1/2*U0*U1/2". Time labels print as "beta^t(...)".
std::string to_string(const Operator& x);
std::string to_string(const ExactOperator& x);

}  // namespace isingcc
