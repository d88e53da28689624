#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isingcc/causal.hpp"

namespace isingcc {

struct SolverConfig {
  std::uint64_t seed = 1;
  int restarts = 20;
  int max_iters = 200;
  /// Candidates need max_k |residual_k| below this.
  double tol = 1e-8;
  /// Rank of C in the search window's representation; 0 means half the dimension.
  int rank = 0;
  /// Restrict C to the commutant of A and B inside the window.
  bool commuting_constraint = false;
  /// Also evaluate {A, A'} and {B, B'} when they fit in the window.
  bool include_trivial = true;
  /// Largest qubit count of the window holding A, B and the search window.
  int max_qubits = 8;
};

struct Candidate {
  Operator c;
  std::array<double, 2> residuals{};
  double residual = 0.0;
  std::optional<DoubleCone> support;
  std::vector<std::string> below_c;
  std::vector<std::string> below_c_perp;
  bool trivial = false;
  bool commutes_with_ab = false;
  bool in_weak_past = false;
  bool in_common_past = false;
  bool in_strong_past = false;
  /// Restart index, or -1 for the trivial partitions.
  int restart = -1;
};

struct SolverResult {
  std::vector<Candidate> candidates;
  /// Smallest residual reached by each restart, in restart order.
  std::vector<double> restart_residuals;
  int basis_size = 0;
  int rank = 0;
};

/// Searches projections C of the given rank in the algebra of `window` (a
/// surface interval) for which {C, 1 - C} satisfies the noncommuting
/// screening-off equations in `s`. `loc_a`, `loc_b` are the localization
/// cones of A and B used for the past-membership verdicts. Throws kDomain for
/// a window off the surface and kBudget for an oversized window.
SolverResult solve_noncommuting_cc(const LambdaState<Complex>& s, const DoubleCone& window, const SolverConfig& cfg,
                                   const DoubleCone& loc_a, const DoubleCone& loc_b);

/// Localization cones default to the surface supports of A and B.
SolverResult solve_noncommuting_cc(const LambdaState<Complex>& s, const DoubleCone& window, const SolverConfig& cfg);

/// Per-restart seed, a fixed function of the master seed and restart index.
std::uint64_t restart_seed(std::uint64_t master, int restart);

}  // namespace isingcc
