#include <gtest/gtest.h>

#include "oracles.hpp"
#include "purecubic/real_embedding.hpp"

using namespace purecubic;

namespace {

FieldElement el(Rational x, Rational y, Rational z) { return {x, y, z}; }

bool encloses(const Interval& i, const Rational& lo, const Rational& hi) { return i.lower < hi && i.upper > lo; }

}  // namespace

TEST(Tilde, Examples) {
  EXPECT_EQ(tilde(build_context(2), el(0, 0, 1)), (TildeCoords{1, 1, 1}));
  EXPECT_EQ(tilde(build_context(10), el(0, 0, 3)), (TildeCoords{1, 1, 1}));
  EXPECT_EQ(tilde(build_context(17), el(0, 0, 3)), (TildeCoords{1, -1, 1}));
  const FieldContext ctx = build_context(28);
  const FieldElement e = el(Rational(1, 3), -2, Rational(5, 7));
  EXPECT_EQ(untilde(ctx, tilde(ctx, e)), e);
}

TEST(Tilde, PowerBasisRoundTrip) {
  const FieldContext ctx = build_context(12);
  const FieldElement e = el(3, -1, 4);
  EXPECT_EQ(from_power(ctx, to_power(ctx, e)), e);
}

TEST(Val, Examples) {
  const FieldContext ctx = build_context(2);
  CertifiedReal one = val(ctx, el(1, 0, 0));
  EXPECT_TRUE(one.is_exact());
  EXPECT_EQ(one.enclosure().lower, Rational(1));
  EXPECT_TRUE(encloses(val(ctx, el(0, 1, 0)).refine_to(pow2(-40)), Rational(1259921, 1000000),
                       Rational(1259922, 1000000)));
  EXPECT_EQ(val(ctx, el(0, 0, 1)).to_decimal(4), "3.8473");
}

TEST(Shadow, RationalElements) {
  const FieldContext ctx = build_context(5);
  CertifiedReal s = shadow_real(ctx, el(Rational(3, 2), 0, 0));
  EXPECT_TRUE(s.refine_to(pow2(-60)).contains(Rational(9, 4)));
  EXPECT_EQ(shadow_exact(ctx, el(Rational(3, 2), 0, 0)), el(Rational(9, 4), 0, 0));
}

TEST(Shadow, AlphaSquared) {
  const FieldContext ctx = build_context(2);
  const Interval s = shadow_real(ctx, el(0, 1, 0)).refine_to(pow2(-80));
  const Interval reference = oracle::shadow_enclosure(ctx, Vector3{0, 1, 0}, 128);
  EXPECT_LE(s.lower, reference.upper);
  EXPECT_GE(s.upper, reference.lower);
  EXPECT_TRUE(encloses(s, Rational(15874, 10000), Rational(15875, 10000)));
  // Sh(alpha) = alpha^2 = k alpha_hat: coordinates of alpha^2 in {1, alpha, theta}
  EXPECT_EQ(to_power(ctx, shadow_exact(ctx, el(0, 1, 0))), PowerElement(2, 0, 0, 1));
}

TEST(Shadow, ExactTimesElementIsNorm) {
  const FieldContext ctx = build_context(17);
  const FieldElement e = el(4, -3, 5);
  const FieldElement product = multiply(ctx, shadow_exact(ctx, e), e);
  EXPECT_EQ(product, el(norm_exact(ctx, e), 0, 0));
  EXPECT_THROW(shadow_exact(ctx, el(0, 0, 0)), ZeroElement);
}

TEST(Norm, Examples) {
  const FieldContext ctx = build_context(2);
  EXPECT_EQ(norm_exact(ctx, el(1, 0, 0)), 1);
  EXPECT_EQ(norm_exact(ctx, el(0, 0, 1)), 1);
  EXPECT_EQ(norm_exact(ctx, el(-1, 1, 0)), 1);
  EXPECT_EQ(norm_exact(ctx, el(0, 1, 0)), 2);
  EXPECT_EQ(norm_exact(ctx, el(Rational(1, 2), 0, 0)), Rational(1, 8));
}

TEST(Invert, Examples) {
  const FieldContext ctx = build_context(2);
  EXPECT_EQ(invert(ctx, el(1, 0, 0)), el(1, 0, 0));
  EXPECT_EQ(invert(ctx, el(0, 0, 1)), el(-1, 1, 0));
  EXPECT_EQ(invert(ctx, el(2, 0, 0)), el(Rational(1, 2), 0, 0));
  EXPECT_THROW(invert(ctx, el(0, 0, 0)), ZeroElement);
  const FieldContext c17 = build_context(17);
  const FieldElement e = el(2, 7, -1);
  EXPECT_EQ(multiply(c17, e, invert(c17, e)), el(1, 0, 0));
}

TEST(Compare, Examples) {
  for (std::int64_t m : {2, 12, 17, 28}) {
    const FieldContext ctx = build_context(m);
    const PowerElement alpha = PowerElement::alpha(m);
    const PowerElement alpha_hat(m, 0, 0, Rational(1, ctx.k()));
    EXPECT_EQ(compare(ctx, alpha * alpha_hat, constant(ctx, Rational(ctx.h() * ctx.k()))), Comparison::ExactEqual);
    EXPECT_EQ(compare(ctx, alpha * alpha, alpha_hat * Rational(ctx.k())), Comparison::ExactEqual);
  }
  const FieldContext ctx = build_context(2);
  EXPECT_EQ(compare(ctx, PowerElement::alpha(2), constant(ctx, 1)), Comparison::Greater);
  EXPECT_EQ(compare(ctx, constant(ctx, 1), PowerElement::alpha(2)), Comparison::Less);
}

TEST(Compare, SurdsNeedingTheExactStage) {
  const FieldContext ctx = build_context(2);
  const PowerElement alpha = PowerElement::alpha(2);
  // sqrt(alpha^2) - alpha == 0 only symbolically
  const Surd root{PowerElement(2), PowerElement(2, 1), alpha * alpha};
  EXPECT_EQ(compare(ctx, root, Surd::of(alpha)), Comparison::ExactEqual);
  CompareOptions tight;
  tight.precision_cap = 64;
  const Surd close{constant(ctx, Rational(1)), PowerElement(2, 1), PowerElement(2, Rational(1, 1) + pow2(-200))};
  EXPECT_EQ(compare(ctx, close, constant_surd(ctx, 2), tight), Comparison::Greater);
}

TEST(Compare, DistinctRadicands) {
  const FieldContext ctx = build_context(2);
  const Surd root2{PowerElement(2), PowerElement(2, 1), PowerElement(2, 2)};
  const Surd root3{PowerElement(2), PowerElement(2, 1), PowerElement(2, 3)};
  EXPECT_EQ(compare(ctx, root2, root3), Comparison::Less);
  EXPECT_EQ(compare(ctx, root2, root2), Comparison::ExactEqual);
  // sqrt 8 = 2 sqrt 2 never separates and has two different radicands
  const Surd root8{PowerElement(2), PowerElement(2, 1), PowerElement(2, 8)};
  const Surd twice_root2{PowerElement(2), PowerElement(2, 2), PowerElement(2, 2)};
  CompareOptions quick;
  quick.precision_cap = 128;
  EXPECT_THROW(compare(ctx, root8, twice_root2, quick), PrecisionExhausted);
}

TEST(Floors, ExactAndStrict) {
  const FieldContext ctx = build_context(2);
  EXPECT_EQ(certified_floor(ctx, constant_surd(ctx, 3)), 3);
  EXPECT_EQ(strict_floor(ctx, constant_surd(ctx, 3)), 2);
  EXPECT_EQ(certified_ceil(ctx, constant_surd(ctx, 3)), 3);
  EXPECT_EQ(certified_floor(ctx, Surd::of(PowerElement::alpha(2))), 1);
  EXPECT_EQ(certified_ceil(ctx, Surd::of(PowerElement::alpha(2))), 2);
  EXPECT_EQ(strict_floor(ctx, Surd::of(PowerElement::alpha(2))), 1);
  EXPECT_EQ(certified_floor(ctx, Surd::of(-PowerElement::alpha(2))), -2);
  // sqrt(alpha^2 * 4) = 2 alpha, floor 2
  const Surd s{PowerElement(2), PowerElement(2, 1), PowerElement(2, 0, 0, 4)};
  EXPECT_EQ(certified_floor(ctx, s), 2);
  // sqrt(9) computed through the radical
  EXPECT_EQ(strict_floor(ctx, Surd{PowerElement(2), PowerElement(2, 1), PowerElement(2, 9)}), 2);
}

TEST(PrecisionCap, DefaultIsConfigurable) {
  const unsigned before = default_precision_cap();
  EXPECT_EQ(before, 1024u);
  set_default_precision_cap(256);
  EXPECT_EQ(default_precision_cap(), 256u);
  set_default_precision_cap(before);
}

TEST(MultiplicationMatrix, MatchesMultiply) {
  const FieldContext ctx = build_context(19);
  const FieldElement a = el(1, 2, 3);
  const FieldElement b = el(-4, 0, 5);
  const auto M = multiplication_matrix(ctx, a);
  const FieldElement ab = multiply(ctx, a, b);
  const Rational v[3] = {b.x, b.y, b.z};
  Rational out[3];
  for (std::size_t i = 0; i < 3; ++i) out[i] = M[i][0] * v[0] + M[i][1] * v[1] + M[i][2] * v[2];
  EXPECT_EQ(ab, el(out[0], out[1], out[2]));
}
