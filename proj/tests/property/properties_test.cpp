#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "purecubic/ideals.hpp"
#include "purecubic/real_embedding.hpp"

using namespace purecubic;

namespace {

const std::vector<std::int64_t> kFields{2, 3, 5, 6, 7, 10, 17, 19, 28};

std::array<Rational, 3> rational_point(const Vector3& v) { return {v[0], v[1], v[2]}; }

Vector3 random_point(std::mt19937_64& rng, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  Vector3 v;
  do {
    v = {d(rng), d(rng), d(rng)};
  } while (v[0] == 0 && v[1] == 0 && v[2] == 0);
  return v;
}

}  // namespace

TEST(Factorization, AgreesWithTrialDivision) {
  for (std::int64_t m = 1; m <= 10'000; ++m) {
    const oracle::TrialFactor t = oracle::trial_factor(m);
    const auto result = validate_and_factor(m);
    if (t.perfect_cube) {
      ASSERT_TRUE(std::holds_alternative<Rejection>(result)) << m;
      EXPECT_EQ(std::get<Rejection>(result).kind, RejectionKind::PerfectCube) << m;
    } else if (t.cube_free != m) {
      ASSERT_TRUE(std::holds_alternative<Rejection>(result)) << m;
      EXPECT_EQ(std::get<Rejection>(result).kind, RejectionKind::NotCubeFree) << m;
      EXPECT_EQ(std::get<Rejection>(result).equivalent, std::min(t.h * t.h * t.k, t.h * t.k * t.k)) << m;
    } else if (t.h < t.k) {
      ASSERT_TRUE(std::holds_alternative<Rejection>(result)) << m;
      EXPECT_EQ(std::get<Rejection>(result).kind, RejectionKind::RedundantGenerator) << m;
      EXPECT_EQ(std::get<Rejection>(result).equivalent, t.h * t.h * t.k) << m;
    } else {
      ASSERT_TRUE(std::holds_alternative<Factorization>(result)) << m;
      EXPECT_EQ(std::get<Factorization>(result).h, t.h);
      EXPECT_EQ(std::get<Factorization>(result).k, t.k);
    }
  }
}

TEST(Pqrst, NumeratorsDivisibleUpTo10000) {
  for (std::int64_t m = 2; m <= 10'000; ++m) {
    if (!std::holds_alternative<Factorization>(validate_and_factor(m))) continue;
    const FieldContext ctx = build_context(m);
    const PqrstNumerators pn = ctx.pqrst_numerators();
    for (std::size_t i = 0; i < 5; ++i) ASSERT_TRUE(divides(pn.divisors[i], pn.numerators[i])) << m << " " << i;
  }
}

TEST(Pqrst, BasisProductsIntegral) {
  for (std::int64_t m = 2; m <= 10'000; ++m) {
    if (!std::holds_alternative<Factorization>(validate_and_factor(m))) continue;
    const FieldContext ctx = build_context(m);
    const std::array<Rational, 3> alpha{0, 1, 0}, theta{0, 0, 1};
    for (const auto& p : {oracle::product(ctx, alpha, theta), oracle::product(ctx, theta, theta)})
      for (const Rational& c : p) ASSERT_EQ(c.get_den(), 1) << m;
  }
}

TEST(Sigma, InvariantUnderSwap) {
  // m = h k^2 and m' = h^2 k generate the same field and share sigma.
  for (std::int64_t m = 2; m <= 3000; ++m) {
    const auto result = validate_and_factor(m);
    if (!std::holds_alternative<Factorization>(result)) continue;
    const auto [h, k] = std::get<Factorization>(result);
    const std::int64_t swapped = h * h * k;
    const std::int64_t r = m % 9, rs = swapped % 9;
    EXPECT_EQ(r == 1 || r == 8, rs == 1 || rs == 8) << m;
  }
}

TEST(Hnf, UniqueUnderUnimodularTransforms) {
  std::mt19937_64 rng(20261014);
  for (int lattice = 0; lattice < 10; ++lattice) {
    const auto rows = oracle::random_full_rank(rng, 20);
    const IdealForm expected = canonicalize(rows);
    EXPECT_EQ(abs(oracle::determinant(rows)), expected.norm());
    for (int trial = 0; trial < 1000; ++trial) {
      const auto transformed = oracle::multiply_rows(oracle::random_unimodular(rng, 6), rows);
      ASSERT_EQ(canonicalize(transformed), expected);
    }
  }
}

TEST(Shadow, Identities) {
  std::mt19937_64 rng(7);
  for (std::int64_t m : kFields) {
    const FieldContext ctx = build_context(m);
    for (int i = 0; i < 200; ++i) {
      const Vector3 p = random_point(rng, 30);
      const FieldElement el = FieldElement::from_integers(p);
      const FieldElement sh = shadow_exact(ctx, el);
      ASSERT_TRUE(sh.is_integral());
      EXPECT_EQ(multiply(ctx, sh, el), (FieldElement{norm_exact(ctx, el), 0, 0}));
      const Interval lib = shadow_real(ctx, el).refine_bits(128);
      const Interval ref = oracle::shadow_enclosure(ctx, p, 128);
      EXPECT_TRUE(lib.lower <= ref.upper && ref.lower <= lib.upper) << m;
      EXPECT_TRUE((lib * val(ctx, el).refine_bits(128)).contains(norm_exact(ctx, el))) << m;
      EXPECT_GT(certified_sign(ctx, Surd::of(to_power(ctx, sh))), 0) << m;
    }
  }
}

TEST(Norm, Multiplicative) {
  std::mt19937_64 rng(11);
  for (std::int64_t m : kFields) {
    const FieldContext ctx = build_context(m);
    for (int i = 0; i < 200; ++i) {
      const FieldElement a = FieldElement::from_integers(random_point(rng, 15));
      const FieldElement b = FieldElement::from_integers(random_point(rng, 15));
      const FieldElement ab = multiply(ctx, a, b);
      EXPECT_EQ(norm_exact(ctx, ab), norm_exact(ctx, a) * norm_exact(ctx, b));
      const auto o = oracle::product(ctx, {a.x, a.y, a.z}, {b.x, b.y, b.z});
      EXPECT_EQ(ab, (FieldElement{o[0], o[1], o[2]}));
    }
  }
}

TEST(Tilde, RoundTrip) {
  std::mt19937_64 rng(13);
  for (std::int64_t m : kFields) {
    const FieldContext ctx = build_context(m);
    for (int i = 0; i < 200; ++i) {
      const FieldElement el = scale(Rational(1, 1 + i % 5), FieldElement::from_integers(random_point(rng, 50)));
      EXPECT_EQ(untilde(ctx, tilde(ctx, el)), el);
      EXPECT_EQ(from_power(ctx, to_power(ctx, el)), el);
    }
  }
}

TEST(PrincipalIdeals, NormEqualsAbsoluteNorm) {
  std::mt19937_64 rng(17);
  for (std::int64_t m : kFields) {
    const FieldContext ctx = build_context(m);
    for (int i = 0; i < 50; ++i) {
      const Vector3 g = random_point(rng, 6);
      const IdealForm I = principal_ideal(ctx, g);
      ASSERT_TRUE(is_ideal(I, ctx));
      EXPECT_EQ(Rational(I.norm()), abs(norm_exact(ctx, FieldElement::from_integers(g))));
    }
  }
}

TEST(PrimitiveIdeals, StructuralBounds) {
  for (std::int64_t m : kFields) {
    const FieldContext ctx = build_context(m);
    const Integer sk = ctx.sigma() * ctx.k();
    for (Integer L = 1; L <= 40; ++L)
      for (const IdealForm& g : enumerate_primitive_ideals(ctx, L)) {
        ASSERT_TRUE(divides(g.f, sk)) << m << " " << g.to_text();
        ASSERT_LE(g.norm(), sk * L * L) << m << " " << g.to_text();
        ASSERT_TRUE(is_ideal_by_closure(g, ctx));
      }
  }
}
