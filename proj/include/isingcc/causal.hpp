#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isingcc/states.hpp"

namespace isingcc {

/// Result for one cell C_k of a candidate partition.
struct CellResult {
  double residual = 0.0;
  /// Canonical exact token; empty in float mode.
  std::string residual_exact;
  /// phi(C_k) = 0: the equation holds with both sides zero.
  bool vacuous = false;
  /// Subset of {"A", "Aperp", "B", "Bperp"} with C_k <= X.
  std::vector<std::string> below;
  bool trivial() const { return !below.empty(); }
};

struct CcsReport {
  std::string mode;  // classical | commuting | noncommuting
  std::vector<CellResult> cells;
  bool satisfies = false;
  /// Every cell lies under one of A, A-perp, B, B-perp.
  bool trivial = false;
  double correlation = 0.0;
  /// Positive statistical relevance, reported for classical two-cell partitions.
  std::optional<bool> relevance_a;
  std::optional<bool> relevance_b;
  std::string certificate;
};

/// Finite probability space; events are bit masks over at most 64 atoms.
struct ProbabilitySpace {
  std::vector<double> atoms;
};
using Event = std::uint64_t;

/// Screening-off residuals p(AB|C) - p(A|C) p(B|C) per cell. Throws
/// kInvalidPartition unless the cells are disjoint and cover every atom,
/// kDomain for a malformed distribution.
CcsReport classical_ccs_check(const ProbabilitySpace& space, Event a, Event b, const std::vector<Event>& partition,
                              double tol = 1e-12);

/// Per-sector ranks r_P of one cell, in Sector order.
using RankTuple = std::array<int, 4>;

/// Decides lambda_AB lambda_A'B' / (m_AB m_A'B') r_AB r_A'B' == lambda_AB' lambda_A'B / (m_AB' m_A'B) r_AB' r_A'B
/// in Q[pi]. Throws kDomain for ranks outside [0, m_P].
bool exact_wccp_decision(const std::array<QPi, 4>& lambda, const std::array<long long, 4>& m, const RankTuple& r);

/// Which of A, A-perp, B, B-perp dominate a cell with ranks r.
std::vector<std::string> rank_tuple_below(const RankTuple& r);

struct RankProfile {
  std::vector<RankTuple> cells;
  bool trivial = false;
};

struct EnumerationResult {
  std::vector<RankProfile> satisfying;
  std::size_t nontrivial = 0;
  std::uint64_t partitions_examined = 0;
  std::uint64_t bound = 0;
};

/// Default work budget; the ISINGCC_BUDGET environment variable overrides it.
inline constexpr std::uint64_t kDefaultBudget = 20'000'000;
std::uint64_t configured_budget();

/// prod_P C(m_P + K - 1, K - 1): ordered rank splits, an upper bound on the work.
std::uint64_t enumeration_bound(const std::array<long long, 4>& m, int k_size);

/// Every partition of the sector sizes into k_size nonzero rank tuples
/// (unordered) whose cells all pass exact_wccp_decision. Throws kBudget when
/// the bound exceeds `budget`.
EnumerationResult enumerate_commuting_tuples(const std::array<QPi, 4>& lambda, const std::array<long long, 4>& m,
                                             int k_size, std::uint64_t budget = configured_budget());

/// phi(C) = (phi(AB) phi(A'B') - phi(AB') phi(A'B)) / phi(A'B') for C < AB.
template <class Real>
struct WeightResult {
  Real value;
  /// 0 < phi(C) < phi(AB).
  bool certifies_correlation = false;
};

WeightResult<double> redei_summers_weight(double ab, double apbp, double abp, double apb);
/// Throws kModeMismatch when phi(A'B') is irrational.
WeightResult<QPi> redei_summers_weight(const QPi& ab, const QPi& apbp, const QPi& abp, const QPi& apb);

/// C = 1/2 (1 + a1 U_{1/2} + a2 U_1 + i a3 U_0 U_{1/2}). Throws kNormViolation
/// unless a1^2 + a2^2 + a3^2 = 1 (exactly in exact mode).
template <ScalarType S>
BasicOperator<S> family_projection(const RealOf<S>& a1, const RealOf<S>& a2, const RealOf<S>& a3,
                                         double tol = kDefaultTolerance) {
  using T = ScalarTraits<S>;
  using Op = BasicOperator<S>;
  const RealOf<S> norm = a1 * a1 + a2 * a2 + a3 * a3;
  if (!T::real_is_zero(norm - RealOf<S>(1), tol)) {
    throw Error(ErrorCode::kNormViolation,
                "a1^2 + a2^2 + a3^2 = " + double_to_string(T::real_to_double(norm)) + ", expected 1");
  }
  const HalfInt half = kHalf;
  const HalfInt one = HalfInt::integer(1);
  const HalfInt zero = HalfInt::integer(0);
  Op c = Op::identity();
  c = c + op_scale(Op::generator(half), T::from_real(a1));
  c = c + op_scale(Op::generator(one), T::from_real(a2));
  c = c + op_scale(Op::generator(zero) * Op::generator(half), T::imag_unit() * T::from_real(a3));
  return op_scale(c, T::from_ratio(1, 2));
}

namespace detail {

template <ScalarType S>
std::vector<std::string> cell_below(const LambdaState<S>& s, const BasicOperator<S>& c, double tol) {
  using Op = BasicOperator<S>;
  const Op one = Op::identity();
  const std::array<std::pair<const char*, Op>, 4> dominators = {
      std::pair<const char*, Op>{"A", s.a()}, {"Aperp", one - s.a()}, {"B", s.b()}, {"Bperp", one - s.b()}};
  std::vector<std::string> below;
  for (const auto& [name, x] : dominators) {
    if (approx_equal(c * x, c, tol)) below.emplace_back(name);
  }
  return below;
}

template <ScalarType S>
void fill_cell(CellResult& cell, const S& residual, const S& weight, double tol) {
  using T = ScalarTraits<S>;
  cell.residual = T::real_to_double(T::real_part(residual));
  if constexpr (T::kExact) cell.residual_exact = residual.im.is_zero() ? residual.re.to_string() : residual.to_string();
  cell.vacuous = T::is_zero(weight, tol);
}

template <ScalarType S>
CcsReport finish_report(CcsReport report, const LambdaState<S>& s, double tol) {
  using T = ScalarTraits<S>;
  report.satisfies = true;
  report.trivial = true;
  for (const auto& c : report.cells) {
    const bool zero = c.residual_exact.empty() ? std::abs(c.residual) <= tol : c.residual_exact == "0";
    report.satisfies = report.satisfies && zero;
    report.trivial = report.trivial && c.trivial();
  }
  report.correlation = T::real_to_double(correlation(s).sector_form);
  return report;
}

/// (phi o E)(X C_k) for the four sector products X; E(X C_k) = C_k X C_k up to phi.
template <ScalarType S>
std::array<S, 4> conditioned_sector_values(const LambdaState<S>& s, const BasicOperator<S>& c) {
  std::array<S, 4> out;
  for (int p = 0; p < 4; ++p) out[p] = s.evaluate(c * s.sector(kSectors[p]) * c);
  return out;
}

}  // namespace detail

/// phi(AB C_k) phi(A'B' C_k) - phi(AB' C_k) phi(A'B C_k) per cell. Throws
/// kNonCommuting naming the first cell that fails to commute with A or B.
template <ScalarType S>
CcsReport commuting_ccs_residuals(const LambdaState<S>& s, const PartitionOfUnity<S>& part,
                                  double tol = kDefaultTolerance) {
  CcsReport report;
  report.mode = "commuting";
  for (std::size_t k = 0; k < part.size(); ++k) {
    const auto& c = part[k];
    if (!commutes(c, s.a(), tol) || !commutes(c, s.b(), tol)) {
      throw Error(ErrorCode::kNonCommuting,
                  "C_" + std::to_string(k) + " does not commute with " + (commutes(c, s.a(), tol) ? "B" : "A"));
    }
    std::array<S, 4> v;
    for (int p = 0; p < 4; ++p) v[p] = s.evaluate(s.sector(kSectors[p]) * c);
    CellResult cell;
    detail::fill_cell(cell, v[0] * v[1] - v[2] * v[3], s.evaluate(c), tol);
    cell.below = detail::cell_below(s, c, tol);
    report.cells.push_back(std::move(cell));
  }
  return detail::finish_report(std::move(report), s, tol);
}

/// (phi o E)(AB C_k) (phi o E)(A'B' C_k) - (phi o E)(AB' C_k) (phi o E)(A'B C_k)
/// with E the conditional expectation of the partition.
template <ScalarType S>
CcsReport noncommuting_ccs_residuals(const LambdaState<S>& s, const PartitionOfUnity<S>& part,
                                     double tol = kDefaultTolerance) {
  CcsReport report;
  report.mode = "noncommuting";
  for (std::size_t k = 0; k < part.size(); ++k) {
    const auto& c = part[k];
    const std::array<S, 4> v = detail::conditioned_sector_values(s, c);
    CellResult cell;
    detail::fill_cell(cell, v[0] * v[1] - v[2] * v[3], s.evaluate(c), tol);
    cell.below = detail::cell_below(s, c, tol);
    report.cells.push_back(std::move(cell));
  }
  return detail::finish_report(std::move(report), s, tol);
}

/// (phi o E)(P C) for all four sectors P, by expanding E through the partition
/// explicitly (no shortcut through C X C).
template <ScalarType S>
std::array<S, 4> expectation_sector_values(const LambdaState<S>& s, const PartitionOfUnity<S>& part, std::size_t k) {
  std::array<S, 4> out;
  for (int p = 0; p < 4; ++p) {
    out[p] = s.evaluate(conditional_expectation(part, s.sector(kSectors[p]) * part[k]));
  }
  return out;
}

/// Residual of cell k via Tr(AB rho_k) Tr(A'B' rho_k) - Tr(AB' rho_k) Tr(A'B rho_k),
/// rho_k = C_k rho C_k, on a window holding A, B and the partition.
double dense_noncommuting_residual(const LambdaState<Complex>& s, const PartitionOfUnity<Complex>& part, std::size_t k,
                                   const QubitWindow& w);

}  // namespace isingcc
