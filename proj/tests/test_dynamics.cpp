#include <gtest/gtest.h>

#include <random>

#include "isingcc/dynamics.hpp"
#include "isingcc/errors.hpp"
#include "isingcc/oracle.hpp"
#include "support.hpp"

namespace isingcc {
namespace {

using testing::gen;
using testing::xgen;

DynamicsParams exact_params(bool theta1_half_pi, bool theta2_half_pi, int eta1, int eta2) {
  DynamicsParams p;
  p.theta1 = theta1_half_pi ? Angle::half_pi() : Angle::zero();
  p.theta2 = theta2_half_pi ? Angle::half_pi() : Angle::zero();
  p.eta1 = eta1;
  p.eta2 = eta2;
  return p;
}

TEST(Angle, DomainAndParsing) {
  EXPECT_THROW(Angle::radians(-1.5707963267948966), Error);
  EXPECT_THROW(Angle::radians(2.0), Error);
  EXPECT_NO_THROW(Angle::radians(1.5707963267948966));
  EXPECT_TRUE(Angle::parse("pi/2").is_exact());
  EXPECT_FALSE(Angle::parse("0.3").is_exact());
  EXPECT_THROW(Angle::parse("abc"), Error);
}

TEST(Beta, ImageOfU0) {
  const DynamicsParams p = exact_params(false, false, 1, 1);
  EXPECT_EQ(beta_generator_image<ExactComplex>(p, HalfInt::integer(0)), xgen(-0.5) * xgen(0) * xgen(0.5));
  const ExactComplex half(QPi::ratio(1, 2));
  const ExactOperator a = apply_beta(p, half * (ExactOperator::identity() + xgen(0)), 1);
  EXPECT_EQ(a, half * (ExactOperator::identity() + xgen(-0.5) * xgen(0) * xgen(0.5)));
}

TEST(Beta, HalfPiFixesIntegerGenerators) {
  const DynamicsParams p = exact_params(true, false, 1, 1);
  EXPECT_EQ(beta_generator_image<ExactComplex>(p, HalfInt::integer(3)), xgen(3));
}

TEST(Beta, ExactModeRejectsFloatAngles) {
  DynamicsParams p;
  p.theta1 = Angle::radians(0.3);
  try {
    beta_generator_image<ExactComplex>(p, HalfInt::integer(0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kModeMismatch);
  }
}

TEST(Beta, NegativeTimeIsRejected) {
  try {
    apply_beta(DynamicsParams{}, gen(0), -1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNegativeTime);
  }
  EXPECT_EQ(localize_at(gen(0), -1).time_label(), -1);
}

TEST(Beta, UnitalAndTracePreserving) {
  std::mt19937_64 rng(testing::kSeed + 10);
  const QubitWindow w = QubitWindow::covering(HalfInt::integer(-2), HalfInt::integer(3));
  const SiteSet inner = testing::sites_between(-1, 3);
  for (int n = 0; n < 40; ++n) {
    const DynamicsParams p = testing::random_params(rng);
    EXPECT_EQ(apply_beta(p, Operator::identity(), 2), Operator::identity());
    const Operator x = testing::random_operator(rng, inner, 5);
    const Operator y = testing::random_operator(rng, inner, 5);
    const Operator bx = apply_beta(p, x, 1);
    const Operator by = apply_beta(p, y, 1);
    EXPECT_LT(std::abs(normalized_trace(bx) - normalized_trace(x)), 1e-10);
    EXPECT_TRUE(approx_equal(apply_beta(p, x * y, 1), bx * by, 1e-10));
    EXPECT_TRUE(approx_equal(apply_beta(p, op_adjoint(x), 1), op_adjoint(bx), 1e-10));
    const DenseMatrix m = to_matrix(bx, w);
    EXPECT_LT(std::abs(m.trace() / double(w.dim()) - normalized_trace(x)), 1e-10);
  }
}

TEST(Beta, ImagesAreSelfadjointUnitariesPreservingRelations) {
  std::mt19937_64 rng(testing::kSeed + 11);
  const QubitWindow w = QubitWindow::covering(HalfInt::integer(-1), HalfInt::integer(3));
  const int first = 0;
  const int last = 4;
  for (int n = 0; n < 30; ++n) {
    const DynamicsParams p = testing::random_params(rng);
    std::vector<DenseMatrix> images;
    for (int s = first; s <= last; ++s) {
      images.push_back(to_matrix(beta_generator_image<Complex>(p, HalfInt::from_twice(s)), w));
    }
    const DenseMatrix id = DenseMatrix::identity(w.dim());
    for (std::size_t u = 0; u < images.size(); ++u) {
      EXPECT_LT(max_abs_diff(images[u], images[u].adjoint()), 1e-10);
      EXPECT_LT(max_abs_diff(matmul(images[u], images[u]), id), 1e-10);
      for (std::size_t v = u + 1; v < images.size(); ++v) {
        const DenseMatrix uv = matmul(images[u], images[v]);
        const DenseMatrix vu = matmul(images[v], images[u]);
        const double sign = v - u == 1 ? -1.0 : 1.0;
        EXPECT_LT(max_abs_diff(uv, Complex(sign) * vu), 1e-10) << u << " " << v;
      }
    }
  }
}

TEST(Beta, PrimitiveCausality) {
  std::mt19937_64 rng(testing::kSeed + 12);
  for (int n = 0; n < 30; ++n) {
    const DynamicsParams p = testing::random_params(rng);
    for (int s = -2; s <= 2; ++s) EXPECT_TRUE(check_primitive_causality(p, HalfInt::from_twice(s)));
  }
  const DynamicsParams fixed = exact_params(true, false, 1, 1);
  EXPECT_EQ(*support_interval(beta_generator_image<ExactComplex>(fixed, HalfInt::integer(0))),
            (DoubleCone{0, HalfInt::integer(0), HalfInt::integer(0)}));
  const DynamicsParams zero = exact_params(false, false, 1, 1);
  EXPECT_TRUE(check_primitive_causality(zero, kHalf));
  const auto half_support = support_interval(beta_generator_image<ExactComplex>(zero, kHalf));
  EXPECT_EQ(half_support->i, HalfInt::from_twice(-1));
  EXPECT_EQ(half_support->j, HalfInt::from_twice(3));
}

TEST(Alpha, CommutesWithBetaAndProducts) {
  std::mt19937_64 rng(testing::kSeed + 13);
  const SiteSet inner = testing::sites_between(-2, 2);
  for (int n = 0; n < 20; ++n) {
    const DynamicsParams p = testing::random_params(rng);
    const Operator x = testing::random_operator(rng, inner, 4);
    const Operator y = testing::random_operator(rng, inner, 4);
    EXPECT_TRUE(approx_equal(alpha_shift(apply_beta(p, x, 1), 1), apply_beta(p, alpha_shift(x, 1), 1), 1e-10));
    EXPECT_TRUE(approx_equal(alpha_shift(x * y, 2), alpha_shift(x, 2) * alpha_shift(y, 2), 1e-12));
  }
  EXPECT_EQ(alpha_shift(gen(0), 1), gen(1));
}

TEST(Rebase, ExpandsForwardOnly) {
  const DynamicsParams p = exact_params(false, false, 1, 1);
  const ExactOperator x = localize_at(xgen(0), 1);
  EXPECT_EQ(rebase(p, x, 0), xgen(-0.5) * xgen(0) * xgen(0.5));
  EXPECT_THROW(rebase(p, xgen(0), 1), Error);
  EXPECT_TRUE(commutes_localized(p, x, localize_at(xgen(1), 1)));
}

TEST(EinsteinCausality, SpacelikeSupportsCommuteAfterEvolution) {
  std::mt19937_64 rng(testing::kSeed + 14);
  std::uniform_int_distribution<int> start(-4, 0);
  std::uniform_int_distribution<int> len(0, 2);
  std::uniform_int_distribution<int> gap(2, 4);
  std::uniform_int_distribution<int> steps(0, 2);
  for (int n = 0; n < 40; ++n) {
    const int i1 = start(rng);
    const int j1 = i1 + len(rng);
    const int i2 = j1 + gap(rng);
    const int j2 = i2 + len(rng);
    const int t = steps(rng);
    const DoubleCone ca{t, HalfInt::from_twice(i1), HalfInt::from_twice(j1)};
    const DoubleCone cb{t, HalfInt::from_twice(i2), HalfInt::from_twice(j2)};
    ASSERT_TRUE(spacelike_separated(ca, cb));
    const DynamicsParams p = testing::random_params(rng);
    const Operator x = apply_beta(p, testing::random_operator(rng, testing::sites_between(i1, j1), 3), t);
    const Operator y = apply_beta(p, testing::random_operator(rng, testing::sites_between(i2, j2), 3), t);
    EXPECT_TRUE(commutes(x, y, 1e-12));
  }
}

}  // namespace
}  // namespace isingcc
