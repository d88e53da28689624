#include "isingcc/causal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdlib>
#include <map>

namespace isingcc {

CcsReport classical_ccs_check(const ProbabilitySpace& space, Event a, Event b, const std::vector<Event>& partition,
                              double tol) {
  const std::size_t n = space.atoms.size();
  if (n == 0 || n > 64) throw Error(ErrorCode::kDomain, "probability space needs 1..64 atoms");
  double total = 0.0;
  for (double p : space.atoms) {
    if (!(p >= 0.0)) throw Error(ErrorCode::kDomain, "negative atom probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Error(ErrorCode::kDomain, "atom probabilities do not sum to 1");
  const Event all = n == 64 ? ~Event{0} : (Event{1} << n) - 1;
  if (((a | b) & ~all) != 0) throw Error(ErrorCode::kDomain, "event outside the sample space");

  Event covered = 0;
  for (std::size_t k = 0; k < partition.size(); ++k) {
    if ((partition[k] & covered) != 0 || (partition[k] & ~all) != 0) {
      throw Error(ErrorCode::kInvalidPartition, "cell " + std::to_string(k) + " overlaps or leaves the space");
    }
    covered |= partition[k];
  }
  if (partition.empty() || covered != all) throw Error(ErrorCode::kInvalidPartition, "cells do not cover the space");

  auto prob = [&](Event e) {
    double p = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e >> i & 1U) p += space.atoms[i];
    }
    return p;
  };

  CcsReport report;
  report.mode = "classical";
  report.correlation = prob(a & b) - prob(a) * prob(b);
  report.satisfies = true;
  report.trivial = true;
  const Event ap = all & ~a;
  const Event bp = all & ~b;
  for (Event c : partition) {
    CellResult cell;
    const double pc = prob(c);
    cell.vacuous = pc <= tol;
    if (!cell.vacuous) {
      cell.residual = prob(a & b & c) / pc - (prob(a & c) / pc) * (prob(b & c) / pc);
    }
    const std::array<std::pair<const char*, Event>, 4> dominators = {
        std::pair<const char*, Event>{"A", a}, {"Aperp", ap}, {"B", b}, {"Bperp", bp}};
    for (const auto& [name, x] : dominators) {
      if ((c & ~x) == 0) cell.below.emplace_back(name);
    }
    report.satisfies = report.satisfies && std::abs(cell.residual) <= tol;
    report.trivial = report.trivial && cell.trivial();
    report.cells.push_back(std::move(cell));
  }
  if (partition.size() == 2) {
    const double p0 = prob(partition[0]);
    const double p1 = prob(partition[1]);
    if (p0 > tol && p1 > tol) {
      report.relevance_a = prob(a & partition[0]) / p0 > prob(a & partition[1]) / p1 + tol;
      report.relevance_b = prob(b & partition[0]) / p0 > prob(b & partition[1]) / p1 + tol;
    } else {
      report.relevance_a = false;
      report.relevance_b = false;
    }
  }
  return report;
}

bool exact_wccp_decision(const std::array<QPi, 4>& lambda, const std::array<long long, 4>& m, const RankTuple& r) {
  for (int p = 0; p < 4; ++p) {
    if (m[p] <= 0) throw Error(ErrorCode::kDomain, "sector sizes must be positive");
    if (r[p] < 0 || r[p] > m[p]) {
      throw Error(ErrorCode::kDomain, "rank " + std::to_string(r[p]) + " outside [0, " + std::to_string(m[p]) + "]");
    }
  }
  const QPi lhs = lambda[0] * lambda[1] * QPi(Rational(static_cast<long long>(r[0]) * r[1], m[0] * m[1]));
  const QPi rhs = lambda[2] * lambda[3] * QPi(Rational(static_cast<long long>(r[2]) * r[3], m[2] * m[3]));
  return lhs == rhs;
}

std::vector<std::string> rank_tuple_below(const RankTuple& r) {
  // sectors: 0 AB, 1 A'B', 2 AB', 3 A'B
  std::vector<std::string> below;
  if (r[1] == 0 && r[3] == 0) below.emplace_back("A");
  if (r[0] == 0 && r[2] == 0) below.emplace_back("Aperp");
  if (r[1] == 0 && r[2] == 0) below.emplace_back("B");
  if (r[0] == 0 && r[3] == 0) below.emplace_back("Bperp");
  return below;
}

std::uint64_t configured_budget() {
  if (const char* env = std::getenv("ISINGCC_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kDefaultBudget;
}

std::uint64_t enumeration_bound(const std::array<long long, 4>& m, int k_size) {
  auto binom = [](std::uint64_t n, std::uint64_t k) {
    // saturating at 2^63
    long double v = 1.0L;
    for (std::uint64_t i = 1; i <= k; ++i) v = v * static_cast<long double>(n - k + i) / static_cast<long double>(i);
    return v;
  };
  long double bound = 1.0L;
  for (long long mp : m)
    bound *= binom(static_cast<std::uint64_t>(mp + k_size - 1), static_cast<std::uint64_t>(k_size - 1));
  constexpr long double kCap = 9.2e18L;
  return bound >= kCap ? static_cast<std::uint64_t>(kCap) : static_cast<std::uint64_t>(std::llround(bound));
}

namespace {

class TupleEnumerator {
 public:
  TupleEnumerator(const std::array<QPi, 4>& lambda, const std::array<long long, 4>& m, int k_size,
                  EnumerationResult& out)
      : lambda_(lambda), m_(m), k_size_(k_size), out_(out) {}

  void run() {
    RankTuple remaining;
    for (int p = 0; p < 4; ++p) remaining[p] = static_cast<int>(m_[p]);
    RankTuple top = remaining;
    recurse(remaining, top, k_size_);
  }

 private:
  bool passes(const RankTuple& r) {
    auto [it, inserted] = cache_.try_emplace(r, false);
    if (inserted) it->second = exact_wccp_decision(lambda_, m_, r);
    return it->second;
  }

  // Cells are emitted in lexicographically non-increasing order, so each
  // unordered partition is visited once.
  void recurse(const RankTuple& remaining, const RankTuple& upper, int cells_left) {
    if (cells_left == 1) {
      ++out_.partitions_examined;
      if (remaining == RankTuple{} || remaining > upper) return;
      if (!passes(remaining)) return;
      current_.push_back(remaining);
      record();
      current_.pop_back();
      return;
    }
    RankTuple r{};
    for (r[0] = 0; r[0] <= remaining[0]; ++r[0]) {
      for (r[1] = 0; r[1] <= remaining[1]; ++r[1]) {
        for (r[2] = 0; r[2] <= remaining[2]; ++r[2]) {
          for (r[3] = 0; r[3] <= remaining[3]; ++r[3]) {
            if (r == RankTuple{} || r > upper) continue;
            if (!passes(r)) continue;
            RankTuple rest;
            for (int p = 0; p < 4; ++p) rest[p] = remaining[p] - r[p];
            current_.push_back(r);
            recurse(rest, r, cells_left - 1);
            current_.pop_back();
          }
        }
      }
    }
  }

  void record() {
    RankProfile profile;
    profile.cells = current_;
    profile.trivial =
        std::all_of(current_.begin(), current_.end(), [](const RankTuple& r) { return !rank_tuple_below(r).empty(); });
    if (!profile.trivial) ++out_.nontrivial;
    out_.satisfying.push_back(std::move(profile));
  }

  const std::array<QPi, 4>& lambda_;
  const std::array<long long, 4>& m_;
  int k_size_;
  EnumerationResult& out_;
  std::map<RankTuple, bool> cache_;
  std::vector<RankTuple> current_;
};

}  // namespace

EnumerationResult enumerate_commuting_tuples(const std::array<QPi, 4>& lambda, const std::array<long long, 4>& m,
                                             int k_size, std::uint64_t budget) {
  if (k_size < 1) throw Error(ErrorCode::kDomain, "partition size must be at least 1");
  for (long long mp : m) {
    if (mp <= 0) throw Error(ErrorCode::kDomain, "sector sizes must be positive");
  }
  EnumerationResult result;
  result.bound = enumeration_bound(m, k_size);
  if (result.bound > budget) {
    throw Error(ErrorCode::kBudget, "enumeration bound " + std::to_string(result.bound) + " exceeds budget " +
                                        std::to_string(budget) + " (set ISINGCC_BUDGET to raise it)");
  }
  TupleEnumerator(lambda, m, k_size, result).run();
  return result;
}

WeightResult<double> redei_summers_weight(double ab, double apbp, double abp, double apb) {
  if (apbp == 0.0) throw Error(ErrorCode::kZeroDenominator, "phi(AperpBperp) = 0");
  const double v = (ab * apbp - abp * apb) / apbp;
  return {v, v > 0.0 && v < ab};
}

WeightResult<QPi> redei_summers_weight(const QPi& ab, const QPi& apbp, const QPi& abp, const QPi& apb) {
  if (apbp.is_zero()) throw Error(ErrorCode::kZeroDenominator, "phi(AperpBperp) = 0");
  const QPi v = (ab * apbp - abp * apb) / apbp;
  return {v, v.sign() > 0 && (ab - v).sign() > 0};
}

double dense_noncommuting_residual(const LambdaState<Complex>& s, const PartitionOfUnity<Complex>& part, std::size_t k,
                                   const QubitWindow& w) {
  const DenseMatrix rho = s.density_matrix(w);
  const DenseMatrix c = to_matrix(part[k], w);
  const DenseMatrix rho_k = matmul(matmul(c, rho), c);
  std::array<double, 4> v{};
  for (int p = 0; p < 4; ++p) v[p] = trace_of_product(to_matrix(s.sector(kSectors[p]), w), rho_k).real();
  return v[0] * v[1] - v[2] * v[3];
}

}  // namespace isingcc
