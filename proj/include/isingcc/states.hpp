#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "isingcc/dense.hpp"
#include "isingcc/operator.hpp"
#include "isingcc/oracle.hpp"

namespace isingcc {

/// The four joint sectors of a commuting pair A, B, in the fixed order used
/// for weights, ranks and sizes everywhere.
enum class Sector { kAB = 0, kAperpBperp = 1, kABperp = 2, kAperpB = 3 };

inline constexpr std::array<Sector, 4> kSectors = {Sector::kAB, Sector::kAperpBperp, Sector::kABperp, Sector::kAperpB};

const char* to_string(Sector s);

template <ScalarType S>
using SectorWeights = std::array<RealOf<S>, 4>;

/// phi_lambda(X) = sum_P lambda_P tr(P X) / tr(P) over the sector projections of A, B.
template <ScalarType S>
class LambdaState {
 public:
  using Op = BasicOperator<S>;
  using Real = RealOf<S>;
  using Traits = ScalarTraits<S>;

  const Op& a() const { return a_; }
  const Op& b() const { return b_; }
  const SectorWeights<S>& weights() const { return weights_; }
  const Real& weight(Sector s) const { return weights_[static_cast<int>(s)]; }
  const Op& sector(Sector s) const { return sectors_[static_cast<int>(s)]; }
  const Real& sector_trace(Sector s) const { return traces_[static_cast<int>(s)]; }
  /// Smallest qubit window holding A and B.
  const QubitWindow& window() const { return window_; }
  /// m_P = 2^n tr(P) on the state's window.
  const std::array<long long, 4>& sector_sizes() const { return sizes_; }

  /// Valid for any surface operator; the formula only involves traces.
  S evaluate(const Op& x) const {
    if (x.time_label() != 0) {
      throw Error(ErrorCode::kTimeLabel, "evaluate needs a surface operator; rebase it to time 0 first");
    }
    S total = Traits::zero();
    for (int k = 0; k < 4; ++k) {
      total += Traits::from_real(weights_[k] / traces_[k]) * normalized_trace(op_mul(sectors_[k], x));
    }
    return total;
  }

  /// sum_P lambda_P P / (dim tr(P)) on a window holding A and B.
  DenseMatrix density_matrix(const QubitWindow& w) const {
    DenseMatrix rho(w.dim());
    for (int k = 0; k < 4; ++k) {
      const double c = Traits::real_to_double(weights_[k] / traces_[k]) / static_cast<double>(w.dim());
      rho += Complex(c) * to_matrix(sectors_[k], w);
    }
    return rho;
  }
  DenseMatrix density_matrix() const { return density_matrix(window_); }

 private:
  template <ScalarType T>
  friend struct StateBuilder;

  Op a_;
  Op b_;
  SectorWeights<S> weights_{};
  std::array<Op, 4> sectors_;
  std::array<Real, 4> traces_{};
  std::array<long long, 4> sizes_{};
  QubitWindow window_;
};

template <ScalarType S>
struct StateBuilder {
  static LambdaState<S> build(const BasicOperator<S>& a, const BasicOperator<S>& b, const SectorWeights<S>& lambda,
                              double tol);
};

/// Throws kNonCommuting, kZeroSector or kWeights for the three ways the state
/// is undefined, and kDomain if A or B is not a projection.
template <ScalarType S>
LambdaState<S> build_lambda_state(const BasicOperator<S>& a, const BasicOperator<S>& b, const SectorWeights<S>& lambda,
                                  double tol = kDefaultTolerance) {
  return StateBuilder<S>::build(a, b, lambda, tol);
}

template <ScalarType S>
LambdaState<S> StateBuilder<S>::build(const BasicOperator<S>& a, const BasicOperator<S>& b,
                                      const SectorWeights<S>& lambda, double tol) {
  using Op = BasicOperator<S>;
  using T = ScalarTraits<S>;
  using Real = RealOf<S>;
  if (a.time_label() != 0 || b.time_label() != 0) {
    throw Error(ErrorCode::kTimeLabel, "state projections must be expanded surface operators");
  }
  if (!is_projection(a, tol)) throw Error(ErrorCode::kDomain, "A is not a projection");
  if (!is_projection(b, tol)) throw Error(ErrorCode::kDomain, "B is not a projection");
  if (!commutes(a, b, tol)) throw Error(ErrorCode::kNonCommuting, "A and B do not commute");

  LambdaState<S> s;
  s.a_ = a;
  s.b_ = b;
  const Op one = Op::identity();
  const Op ap = one - a;
  const Op bp = one - b;
  s.sectors_ = {a * b, ap * bp, a * bp, ap * b};

  const auto sa = support_interval(a);
  const auto sb = support_interval(b);
  if (sa && sb) {
    s.window_ = QubitWindow::covering(std::min(sa->i, sb->i), std::max(sa->j, sb->j));
  } else if (sa || sb) {
    s.window_ = QubitWindow::covering(sa ? *sa : *sb);
  } else {
    s.window_ = QubitWindow{0, 0};
  }

  Real sum = Real(0);
  for (int k = 0; k < 4; ++k) {
    const Sector sec = kSectors[k];
    if (s.sectors_[k].is_zero() || T::real_is_zero(T::real_part(normalized_trace(s.sectors_[k])), tol)) {
      throw Error(ErrorCode::kZeroSector, std::string("sector ") + to_string(sec) + " is zero");
    }
    s.traces_[k] = T::real_part(normalized_trace(s.sectors_[k]));
    const double m = T::real_to_double(s.traces_[k]) * static_cast<double>(s.window_.dim());
    s.sizes_[k] = std::llround(m);
    if (T::real_sign(lambda[k], tol) <= 0) {
      throw Error(ErrorCode::kWeights, std::string("weight of sector ") + to_string(sec) + " is not positive");
    }
    sum = sum + lambda[k];
  }
  if (!T::real_is_zero(sum - Real(1), tol)) {
    throw Error(ErrorCode::kWeights, "sector weights do not sum to 1");
  }
  s.weights_ = lambda;
  return s;
}

/// phi(AB) - phi(A) phi(B) and the equivalent sector form.
template <ScalarType S>
struct Correlation {
  S value;
  RealOf<S> sector_form;
};

template <ScalarType S>
Correlation<S> correlation(const LambdaState<S>& s) {
  const S ab = s.evaluate(s.a() * s.b());
  const S value = ab - s.evaluate(s.a()) * s.evaluate(s.b());
  const auto w = [&](Sector p) { return s.weight(p); };
  return {value, w(Sector::kAB) * w(Sector::kAperpBperp) - w(Sector::kABperp) * w(Sector::kAperpB)};
}

/// Mutually orthogonal projections summing to the identity.
template <ScalarType S>
class PartitionOfUnity {
 public:
  using Op = BasicOperator<S>;

  /// Throws kInvalidPartition naming the first violated condition.
  static PartitionOfUnity make(std::vector<Op> cells, double tol = kDefaultTolerance) {
    if (cells.empty()) throw Error(ErrorCode::kInvalidPartition, "empty partition");
    Op sum;
    for (std::size_t k = 0; k < cells.size(); ++k) {
      if (cells[k].time_label() != 0) {
        throw Error(ErrorCode::kInvalidPartition, "C_" + std::to_string(k) + " is not a surface operator");
      }
      if (!is_projection(cells[k], tol)) {
        throw Error(ErrorCode::kInvalidPartition, "C_" + std::to_string(k) + " is not a projection");
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (!approx_equal(cells[l] * cells[k], Op(), tol)) {
          throw Error(ErrorCode::kInvalidPartition,
                      "C_" + std::to_string(l) + " and C_" + std::to_string(k) + " are not orthogonal");
        }
      }
      sum = sum + cells[k];
    }
    if (!approx_equal(sum, Op::identity(), tol)) {
      throw Error(ErrorCode::kInvalidPartition, "cells do not sum to the identity");
    }
    PartitionOfUnity p;
    p.cells_ = std::move(cells);
    return p;
  }

  /// {C, 1 - C}.
  static PartitionOfUnity binary(const Op& c, double tol = kDefaultTolerance) {
    return make({c, Op::identity() - c}, tol);
  }

  const std::vector<Op>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }
  const Op& operator[](std::size_t k) const { return cells_[k]; }

 private:
  std::vector<Op> cells_;
};

/// E(x) = sum_k C_k x C_k.
template <ScalarType S>
BasicOperator<S> conditional_expectation(const PartitionOfUnity<S>& part, const BasicOperator<S>& x) {
  BasicOperator<S> out;
  for (const auto& c : part.cells()) out = out + c * x * c;
  return out;
}

}  // namespace isingcc
