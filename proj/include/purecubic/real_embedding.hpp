#pragma once

#include "purecubic/certified_real.hpp"
#include "purecubic/field_context.hpp"
#include "purecubic/integer.hpp"
#include "purecubic/power_element.hpp"

namespace purecubic {

/// x + y*alpha + z*theta with exact rational coordinates.
struct FieldElement {
  Rational x;
  Rational y;
  Rational z;

  static FieldElement from_integers(const Vector3& v) { return {v[0], v[1], v[2]}; }
  bool is_zero() const { return x == 0 && y == 0 && z == 0; }
  /// Algebraic integer iff all three coordinates are integers.
  bool is_integral() const;
  Vector3 integer_coordinates() const;  // requires is_integral()

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// Coordinates with respect to {1, alpha, alpha_hat}: beta = xt + yt*alpha + zt*alpha_hat.
struct TildeCoords {
  Rational xt;
  Rational yt;
  Rational zt;

  friend bool operator==(const TildeCoords&, const TildeCoords&) = default;
};

TildeCoords tilde(const FieldContext& ctx, const FieldElement& el);
FieldElement untilde(const FieldContext& ctx, const TildeCoords& tc);

PowerElement to_power(const FieldContext& ctx, const FieldElement& el);
FieldElement from_power(const FieldContext& ctx, const PowerElement& pe);

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement negate(const FieldElement& a);
FieldElement scale(const Rational& s, const FieldElement& a);
FieldElement multiply(const FieldContext& ctx, const FieldElement& a, const FieldElement& b);

/// Val(x, y, z) = x + alpha*y + theta*z as a certified real.
CertifiedReal val(const FieldContext& ctx, const FieldElement& el);
/// Shadow via the displacement form
/// (xt - ah*zt)^2 - alpha*(xt - ah*zt)*(yt - ah/alpha*zt) + alpha^2*(yt - ah/alpha*zt)^2.
CertifiedReal shadow_real(const FieldContext& ctx, const FieldElement& el);
/// N(el)/el as a field element; throws ZeroElement for zero.
FieldElement shadow_exact(const FieldContext& ctx, const FieldElement& el);
/// xt^3 + h k^2 yt^3 + h^2 k zt^3 - 3 h k xt yt zt.
Rational norm_exact(const FieldContext& ctx, const FieldElement& el);
/// Solves the regular-representation system; throws ZeroElement for zero.
FieldElement invert(const FieldContext& ctx, const FieldElement& el);
/// Matrix of multiplication by el: x I + y P1 + z P2 (rational entries).
std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldContext& ctx,
                                                             const FieldElement& el);

enum class Comparison { Less, ExactEqual, Greater };

struct CompareOptions {
  unsigned initial_bits = 64;
  unsigned precision_cap = 0;  // 0: use default_precision_cap()
};

/// Process-wide cap (bits) for the interval stage before the symbolic fallback.
unsigned default_precision_cap();
void set_default_precision_cap(unsigned bits);

/// Certified sign of a surd: interval refinement with doubling precision up to
/// the cap, then exact symbolic sign determination.
int certified_sign(const FieldContext& ctx, const Surd& x, CompareOptions options = {});

/// Compare two surds. Distinct radicands are only separated by interval
/// refinement; PrecisionExhausted if the cap is reached first.
Comparison compare(const FieldContext& ctx, const Surd& lhs, const Surd& rhs,
                   CompareOptions options = {});
Comparison compare(const FieldContext& ctx, const PowerElement& lhs, const PowerElement& rhs,
                   CompareOptions options = {});

Surd negate(const Surd& x);
Surd constant_surd(const FieldContext& ctx, const Rational& q);
PowerElement constant(const FieldContext& ctx, const Rational& q);

/// Greatest integer <= x; an exact integer value is its own floor.
Integer certified_floor(const FieldContext& ctx, const Surd& x);
Integer certified_ceil(const FieldContext& ctx, const Surd& x);
/// Greatest integer strictly less than x.
Integer strict_floor(const FieldContext& ctx, const Surd& x);

Interval enclose(const FieldContext& ctx, const Surd& x, unsigned bits);
Interval enclose(const FieldContext& ctx, const PowerElement& x, unsigned bits);

}  // namespace purecubic
