#include <gtest/gtest.h>

#include "oracles.hpp"
#include "purecubic/field_context.hpp"

using namespace purecubic;

namespace {

Factorization factor(std::int64_t m) { return std::get<Factorization>(validate_and_factor(m)); }
Rejection reject(std::int64_t m) { return std::get<Rejection>(validate_and_factor(m)); }

}  // namespace

TEST(ValidateAndFactor, Squarefree) {
  EXPECT_EQ(factor(2).h, 2);
  EXPECT_EQ(factor(2).k, 1);
}

TEST(ValidateAndFactor, PerfectCubes) {
  EXPECT_EQ(reject(8).kind, RejectionKind::PerfectCube);
  EXPECT_EQ(reject(1).kind, RejectionKind::PerfectCube);
  EXPECT_EQ(reject(8).message(), "m = 8  is a perfect cube");
}

TEST(ValidateAndFactor, NotCubeFree) {
  const Rejection r = reject(24);
  EXPECT_EQ(r.kind, RejectionKind::NotCubeFree);
  EXPECT_EQ(r.equivalent, 3);
  EXPECT_EQ(r.message(), "m = 24  is not cube-free. See m = 3");
  // 54 = 2 * 3^3 reduces to 2
  EXPECT_EQ(reject(54).equivalent, 2);
  // 3 * 2^2 * 2^3 = 96 reduces to 12 = min(3*2^2, 3^2*2)
  EXPECT_EQ(reject(96).equivalent, 12);
}

TEST(ValidateAndFactor, RedundantWhenHBelowK) {
  // 12 = 3 * 2^2 has h = 3 > k = 2
  EXPECT_EQ(factor(12).h, 3);
  EXPECT_EQ(factor(12).k, 2);
  // 18 = 2 * 3^2 has h = 2 < k = 3 and names the same field as 3^2 * 2 = ... h^2 k = 12
  const Rejection r = reject(18);
  EXPECT_EQ(r.kind, RejectionKind::RedundantGenerator);
  EXPECT_EQ(r.equivalent, 12);
  EXPECT_EQ(r.message(), "m = 18  is redundant with m = 12");
  EXPECT_EQ(reject(4).equivalent, 2);
}

TEST(ValidateAndFactor, NonPositiveThrows) {
  EXPECT_THROW(validate_and_factor(0), std::invalid_argument);
  EXPECT_THROW(validate_and_factor(-5), std::invalid_argument);
}

TEST(ValidateAndFactor, AgreesWithTrialDivision) {
  for (std::int64_t m = 1; m <= 2000; ++m) {
    const oracle::TrialFactor t = oracle::trial_factor(m);
    const auto v = validate_and_factor(m);
    if (t.perfect_cube) {
      ASSERT_EQ(std::get<Rejection>(v).kind, RejectionKind::PerfectCube) << m;
    } else if (t.cube_free != m) {
      ASSERT_EQ(std::get<Rejection>(v).kind, RejectionKind::NotCubeFree) << m;
      ASSERT_EQ(std::get<Rejection>(v).equivalent, std::min(t.h * t.h * t.k, t.h * t.k * t.k)) << m;
    } else if (t.h < t.k) {
      ASSERT_EQ(std::get<Rejection>(v).kind, RejectionKind::RedundantGenerator) << m;
      ASSERT_EQ(std::get<Rejection>(v).equivalent, t.h * t.h * t.k) << m;
    } else {
      ASSERT_EQ(std::get<Factorization>(v).h, t.h) << m;
      ASSERT_EQ(std::get<Factorization>(v).k, t.k) << m;
    }
  }
}

TEST(BuildContext, MTwo) {
  const FieldContext ctx = build_context(2);
  EXPECT_EQ(ctx.sigma(), 1);
  EXPECT_EQ(ctx.sign(), 1);
  EXPECT_EQ(ctx.p(), 1);
  EXPECT_EQ(ctx.q(), 0);
  EXPECT_EQ(ctx.r(), -2);
  EXPECT_EQ(ctx.s(), 1);
  EXPECT_EQ(ctx.t(), 3);
}

TEST(BuildContext, MTen) {
  const FieldContext ctx = build_context(10);
  EXPECT_EQ(ctx.h(), 10);
  EXPECT_EQ(ctx.k(), 1);
  EXPECT_EQ(ctx.sigma(), 3);
  EXPECT_EQ(ctx.sign(), 1);
  EXPECT_EQ((std::array<Integer, 5>{ctx.p(), ctx.q(), ctx.r(), ctx.s(), ctx.t()}),
            (std::array<Integer, 5>{3, 0, -2, 1, 1}));
}

TEST(BuildContext, MSeventeen) {
  const FieldContext ctx = build_context(17);
  EXPECT_EQ(ctx.sigma(), 3);
  EXPECT_EQ(ctx.sign(), -1);
  EXPECT_EQ((std::array<Integer, 5>{ctx.p(), ctx.q(), ctx.r(), ctx.s(), ctx.t()}),
            (std::array<Integer, 5>{6, 0, 4, 2, 1}));
}

TEST(BuildContext, RejectionsPropagate) {
  try {
    build_context(8);
    FAIL() << "expected InvalidModulus";
  } catch (const InvalidModulus& e) {
    EXPECT_EQ(e.rejection().kind, RejectionKind::PerfectCube);
    EXPECT_NE(std::string(e.what()).find("is a perfect cube"), std::string::npos);
  }
  EXPECT_THROW(build_context(18), InvalidModulus);
}

TEST(BuildContext, MultiplicationMatricesMatchDefinitions) {
  for (std::int64_t m : {2, 3, 10, 12, 17, 20, 28, 45, 99}) {
    const FieldContext ctx = build_context(m);
    // column j of P1 is alpha * e_j, column j of P2 is theta * e_j, in the basis {1, alpha, theta}
    for (std::size_t j = 0; j < 3; ++j) {
      const Rational ej[3] = {j == 0, j == 1, j == 2};
      const auto basis = oracle::power_coordinates(ctx, ej[0], ej[1], ej[2]);
      const auto theta = oracle::power_coordinates(ctx, 0, 0, 1);
      // alpha * (c0 + c1 a + c2 a^2) = m c2 + c0 a + c1 a^2
      const std::array<Rational, 3> alpha_times{m * basis[2], basis[0], basis[1]};
      const auto col1 = oracle::power_coordinates(ctx, ctx.P1()[0][j], ctx.P1()[1][j], ctx.P1()[2][j]);
      EXPECT_EQ(col1, alpha_times) << m << " column " << j;
      std::array<Rational, 3> theta_times{};
      for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) {
          const std::size_t e = a + b;
          const Rational term = basis[a] * theta[b];
          if (e < 3) {
            theta_times[e] += term;
          } else {
            theta_times[e - 3] += m * term;
          }
        }
      const auto col2 = oracle::power_coordinates(ctx, ctx.P2()[0][j], ctx.P2()[1][j], ctx.P2()[2][j]);
      EXPECT_EQ(col2, theta_times) << m << " column " << j;
    }
  }
}

TEST(BuildContext, MatrixIdentities) {
  for (std::int64_t m : {2, 3, 5, 6, 7, 10, 17, 19, 28}) {
    const FieldContext ctx = build_context(m);
    Matrix3 mI = identity_matrix();
    for (std::size_t i = 0; i < 3; ++i) mI[i][i] = m;
    EXPECT_EQ(multiply(ctx.P1(), multiply(ctx.P1(), ctx.P1())), mI);
    EXPECT_EQ(characteristic_polynomial(ctx.P1()), (std::array<Integer, 3>{-m, 0, 0}));
    EXPECT_EQ(multiply(ctx.P1(), ctx.P2()), multiply(ctx.P2(), ctx.P1()));
    // Cayley-Hamilton for P2
    const auto c = characteristic_polynomial(ctx.P2());
    const Matrix3 p2 = ctx.P2();
    const Matrix3 p2sq = multiply(p2, p2);
    const Matrix3 p2cube = multiply(p2sq, p2);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        EXPECT_EQ(p2cube[i][j] + c[2] * p2sq[i][j] + c[1] * p2[i][j] + (i == j ? c[0] : Integer(0)), 0);
  }
}

TEST(RefineAlpha, MTwo) {
  const FieldContext ctx = build_context(2);
  const auto [alpha, alpha_hat] = ctx.refine_alpha(pow2(-20));
  EXPECT_LE(alpha.width(), pow2(-20));
  EXPECT_LE(alpha_hat.width(), pow2(-20));
  // alpha = 1.25992104989..., alpha_hat = 1.58740105196...
  EXPECT_LT(alpha.lower, Rational(12599211, 10000000));
  EXPECT_GT(alpha.upper, Rational(12599210, 10000000));
  EXPECT_LT(alpha_hat.lower, Rational(15874011, 10000000));
  EXPECT_GT(alpha_hat.upper, Rational(15874010, 10000000));
  const Interval reference = oracle::bisect_cbrt(Integer(2), 40);
  EXPECT_LE(alpha.lower, reference.upper);
  EXPECT_GE(alpha.upper, reference.lower);
  const auto [finer, finer_hat] = ctx.refine_alpha(pow2(-60));
  EXPECT_TRUE(alpha.contains(finer));
  EXPECT_TRUE(alpha_hat.contains(finer_hat));
}

TEST(RefineAlpha, ContextsShareCachedRoots) {
  const FieldContext ctx = build_context(17);
  const FieldContext copy = ctx;
  ctx.refine_alpha(pow2(-300));
  EXPECT_LE(copy.alpha().enclosure().width(), pow2(-300));
}
