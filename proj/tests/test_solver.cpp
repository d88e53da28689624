#include <gtest/gtest.h>

#include "isingcc/solver.hpp"
#include "support.hpp"

namespace isingcc {
namespace {

const DoubleCone kWindow01{0, HalfInt::integer(0), HalfInt::integer(1)};
const DoubleCone kLocA = DoubleCone::minimal(HalfInt::integer(1), HalfInt::integer(0));
const DoubleCone kLocB = DoubleCone::minimal(HalfInt::integer(1), HalfInt::integer(1));

TEST(Solver, FindsNoncommutingCausesInTheSurfaceInterval) {
  SolverConfig cfg;
  cfg.restarts = 5;
  const SolverResult r = solve_noncommuting_cc(testing::worked_state(), kWindow01, cfg, kLocA, kLocB);
  EXPECT_EQ(r.rank, 2);
  EXPECT_EQ(r.basis_size, 7);
  ASSERT_FALSE(r.candidates.empty());
  for (const Candidate& c : r.candidates) {
    EXPECT_LT(c.residual, 1e-8);
    EXPECT_TRUE(is_projection(c.c, 1e-8));
    EXPECT_FALSE(c.trivial);
    EXPECT_TRUE(c.in_common_past);
    EXPECT_TRUE(c.in_strong_past);
    EXPECT_TRUE(c.in_weak_past);
    const auto part = PartitionOfUnity<Complex>::binary(c.c, 1e-8);
    const CcsReport check = noncommuting_ccs_residuals(testing::worked_state(), part, 1e-8);
    EXPECT_TRUE(check.satisfies);
  }
}

TEST(Solver, CommutingConstraintLeavesNothing) {
  SolverConfig cfg;
  cfg.restarts = 5;
  cfg.commuting_constraint = true;
  const SolverResult r = solve_noncommuting_cc(testing::worked_state(), kWindow01, cfg, kLocA, kLocB);
  EXPECT_EQ(r.basis_size, 1);
  EXPECT_TRUE(r.candidates.empty());
  for (double res : r.restart_residuals) EXPECT_GT(res, 1e-4);
}

TEST(Solver, UncorrelatedStateOffersTheTrivialPartition) {
  const auto s =
      build_lambda_state(testing::worked_a<Complex>(), testing::worked_b<Complex>(), {0.25, 0.25, 0.25, 0.25});
  SolverConfig cfg;
  cfg.restarts = 1;
  cfg.max_iters = 20;
  const DoubleCone wide{0, HalfInt::from_twice(-1), HalfInt::from_twice(3)};
  const SolverResult r = solve_noncommuting_cc(s, wide, cfg);
  ASSERT_GE(r.candidates.size(), 2U);
  EXPECT_EQ(r.candidates[0].restart, -1);
  EXPECT_TRUE(r.candidates[0].trivial);
  EXPECT_EQ(r.candidates[0].below_c, std::vector<std::string>{"A"});
}

TEST(Solver, DeterministicForAFixedSeed) {
  SolverConfig cfg;
  cfg.restarts = 3;
  const auto r1 = solve_noncommuting_cc(testing::worked_state(), kWindow01, cfg);
  const auto r2 = solve_noncommuting_cc(testing::worked_state(), kWindow01, cfg);
  ASSERT_EQ(r1.candidates.size(), r2.candidates.size());
  for (std::size_t k = 0; k < r1.candidates.size(); ++k) EXPECT_EQ(r1.candidates[k].c, r2.candidates[k].c);
  EXPECT_NE(restart_seed(1, 0), restart_seed(1, 1));
}

TEST(Solver, RejectsBadWindows) {
  SolverConfig cfg;
  EXPECT_THROW(
      solve_noncommuting_cc(testing::worked_state(), DoubleCone{1, HalfInt::integer(0), HalfInt::integer(1)}, cfg),
      Error);
  cfg.max_qubits = 4;
  try {
    solve_noncommuting_cc(testing::worked_state(), DoubleCone{0, HalfInt::integer(0), HalfInt::integer(4)}, cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBudget);
  }
}

}  // namespace
}  // namespace isingcc
