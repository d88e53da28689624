#pragma once

#include <random>

#include "isingcc/causal.hpp"
#include "isingcc/dynamics.hpp"
#include "isingcc/oracle.hpp"

namespace isingcc::testing {

inline constexpr std::uint64_t kSeed = 0x15196cc;

/// Random sum of `terms` monomials over the generators of `sites`.
inline Operator random_operator(std::mt19937_64& rng, const SiteSet& sites, int terms) {
  std::normal_distribution<double> normal;
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << sites.size()) - 1);
  Operator x;
  for (int k = 0; k < terms; ++k) {
    const std::uint64_t mask = pick(rng);
    SiteSet s;
    for (std::size_t b = 0; b < sites.size(); ++b) {
      if (mask >> b & 1U) s.push_back(sites[b]);
    }
    x.add_term(s, Complex(normal(rng), normal(rng)));
  }
  return x;
}

/// Random exact operator with small rational coefficients.
inline ExactOperator random_exact_operator(std::mt19937_64& rng, const SiteSet& sites, int terms) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 5);
  std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << sites.size()) - 1);
  ExactOperator x;
  for (int k = 0; k < terms; ++k) {
    const std::uint64_t mask = pick(rng);
    SiteSet s;
    for (std::size_t b = 0; b < sites.size(); ++b) {
      if (mask >> b & 1U) s.push_back(sites[b]);
    }
    x.add_term(s, ExactComplex(QPi::ratio(num(rng), den(rng)), QPi::ratio(num(rng), den(rng))));
  }
  return x;
}

inline DynamicsParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> angle(-1.5707, 1.5707);
  std::bernoulli_distribution coin;
  DynamicsParams p;
  p.theta1 = Angle::radians(angle(rng));
  p.theta2 = Angle::radians(angle(rng));
  p.eta1 = coin(rng) ? 1 : -1;
  p.eta2 = coin(rng) ? 1 : -1;
  return p;
}

inline SiteSet sites_between(int first_twice, int last_twice) {
  SiteSet s;
  for (int k = first_twice; k <= last_twice; ++k) s.push_back(k);
  return s;
}

inline Operator gen(double site) { return Operator::generator(HalfInt::from_twice(static_cast<int>(2 * site))); }
inline ExactOperator xgen(double site) {
  return ExactOperator::generator(HalfInt::from_twice(static_cast<int>(2 * site)));
}

/// A = beta(1/2 (1 + U_0)), B = beta(1/2 (1 + U_1)) with theta1 = 0, eta1 = 1.
template <ScalarType S>
BasicOperator<S> worked_a() {
  using Op = BasicOperator<S>;
  const Op u = Op::generator(HalfInt::from_twice(-1)) * Op::generator(HalfInt::integer(0)) * Op::generator(kHalf);
  return op_scale(Op::identity() + u, ScalarTraits<S>::from_ratio(1, 2));
}

template <ScalarType S>
BasicOperator<S> worked_b() {
  return alpha_shift(worked_a<S>(), 1);
}

/// (1/4, 1/4, 1/4 + pi/20, 1/4 - pi/20) in sector order AB, A'B', AB', A'B.
inline SectorWeights<ExactComplex> worked_lambda_exact() {
  const QPi q = QPi::ratio(1, 4);
  const QPi d = QPi::pi() / QPi(20);
  return {q, q, q + d, q - d};
}

inline SectorWeights<Complex> worked_lambda() {
  const auto e = worked_lambda_exact();
  return {e[0].to_double(), e[1].to_double(), e[2].to_double(), e[3].to_double()};
}

inline LambdaState<Complex> worked_state() {
  return build_lambda_state(worked_a<Complex>(), worked_b<Complex>(), worked_lambda());
}

inline LambdaState<ExactComplex> worked_state_exact() {
  return build_lambda_state(worked_a<ExactComplex>(), worked_b<ExactComplex>(), worked_lambda_exact());
}

/// Uniform draw from the unit sphere.
inline std::array<double, 3> random_unit(std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::array<double, 3> a{normal(rng), normal(rng), normal(rng)};
  const double n = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  for (double& v : a) v /= n;
  return a;
}

/// Positive weights summing to 1 (uniform on the simplex).
inline SectorWeights<Complex> random_lambda(std::mt19937_64& rng) {
  std::exponential_distribution<double> e;
  SectorWeights<Complex> w{};
  double sum = 0.0;
  for (double& v : w) sum += (v = e(rng) + 1e-3);
  for (double& v : w) v /= sum;
  return w;
}

}  // namespace isingcc::testing
