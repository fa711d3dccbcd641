#include "purecubic/real_embedding.hpp"

#include <atomic>
#include <stdexcept>

#include "purecubic/errors.hpp"

namespace purecubic {

bool FieldElement::is_integral() const {
  return x.get_den() == 1 && y.get_den() == 1 && z.get_den() == 1;
}

Vector3 FieldElement::integer_coordinates() const {
  if (!is_integral()) throw std::invalid_argument("element is not an algebraic integer");
  return {x.get_num(), y.get_num(), z.get_num()};
}

TildeCoords tilde(const FieldContext& ctx, const FieldElement& el) {
  const Rational k_over_sigma(Integer(ctx.k()), Integer(ctx.sigma()));
  return {el.x + el.z * k_over_sigma, el.y + ctx.sign() * el.z * k_over_sigma,
          el.z / Rational(ctx.sigma())};
}

FieldElement untilde(const FieldContext& ctx, const TildeCoords& tc) {
  const Rational z = tc.zt * Rational(ctx.sigma());
  const Rational k_over_sigma(Integer(ctx.k()), Integer(ctx.sigma()));
  return {tc.xt - z * k_over_sigma, tc.yt - ctx.sign() * z * k_over_sigma, z};
}

PowerElement to_power(const FieldContext& ctx, const FieldElement& el) {
  const TildeCoords tc = tilde(ctx, el);
  return PowerElement(ctx.m(), tc.xt, tc.yt, tc.zt / Rational(ctx.k()));
}

FieldElement from_power(const FieldContext& ctx, const PowerElement& pe) {
  return untilde(ctx, TildeCoords{pe[0], pe[1], pe[2] * Rational(ctx.k())});
}

FieldElement add(const FieldElement& a, const FieldElement& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}

FieldElement negate(const FieldElement& a) { return {-a.x, -a.y, -a.z}; }

FieldElement scale(const Rational& s, const FieldElement& a) { return {s * a.x, s * a.y, s * a.z}; }

FieldElement multiply(const FieldContext& ctx, const FieldElement& a, const FieldElement& b) {
  return from_power(ctx, to_power(ctx, a) * to_power(ctx, b));
}

CertifiedReal val(const FieldContext& ctx, const FieldElement& el) {
  const PowerElement pe = to_power(ctx, el);
  if (pe.is_rational()) return CertifiedReal(pe[0]);
  const std::int64_t m = ctx.m();
  return CertifiedReal([pe, m](unsigned bits) { return pe.enclose(cbrt_enclosure(Integer(m), bits)); });
}

CertifiedReal shadow_real(const FieldContext& ctx, const FieldElement& el) {
  const TildeCoords tc = tilde(ctx, el);
  if (tc.yt == 0 && tc.zt == 0) return CertifiedReal(tc.xt * tc.xt);
  const Integer m = ctx.m();
  const Integer m_hat = ctx.m_hat();
  return CertifiedReal([tc, m, m_hat](unsigned bits) {
    const Interval a = cbrt_enclosure(m, bits);
    const Interval ah = cbrt_enclosure(m_hat, bits);
    const Interval dx = tc.xt + (-tc.zt) * ah;
    const Interval dy = tc.yt + (-tc.zt) * (ah / a);
    return square(dx) - a * dx * dy + square(a) * square(dy);
  });
}

FieldElement shadow_exact(const FieldContext& ctx, const FieldElement& el) {
  if (el.is_zero()) throw ZeroElement("shadow_exact");
  return from_power(ctx, to_power(ctx, el).adjugate());
}

Rational norm_exact(const FieldContext& ctx, const FieldElement& el) {
  const TildeCoords tc = tilde(ctx, el);
  const Rational h = Rational(Integer(ctx.h()));
  const Rational k = Rational(Integer(ctx.k()));
  const auto& [x, y, z] = tc;
  return x * x * x + h * k * k * y * y * y + h * h * k * z * z * z - 3 * h * k * x * y * z;
}

std::array<std::array<Rational, 3>, 3> multiplication_matrix(const FieldContext& ctx,
                                                             const FieldElement& el) {
  std::array<std::array<Rational, 3>, 3> out{};
  const Matrix3& P1 = ctx.P1();
  const Matrix3& P2 = ctx.P2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      out[i][j] = el.y * Rational(P1[i][j]) + el.z * Rational(P2[i][j]);
      if (i == j) out[i][j] += el.x;
    }
  return out;
}

FieldElement invert(const FieldContext& ctx, const FieldElement& el) {
  if (el.is_zero()) throw ZeroElement("invert");
  auto a = multiplication_matrix(ctx, el);
  std::array<Rational, 3> rhs{1, 0, 0};
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    while (pivot < 3 && a[pivot][col] == 0) ++pivot;
    if (pivot == 3) throw InternalError("singular multiplication matrix for nonzero element");
    std::swap(a[pivot], a[col]);
    std::swap(rhs[pivot], rhs[col]);
    for (std::size_t row = 0; row < 3; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Rational factor = a[row][col] / a[col][col];
      for (std::size_t j = col; j < 3; ++j) a[row][j] -= factor * a[col][j];
      rhs[row] -= factor * rhs[col];
    }
  }
  return {rhs[0] / a[0][0], rhs[1] / a[1][1], rhs[2] / a[2][2]};
}

namespace {

std::atomic<unsigned> g_precision_cap{1024};

}  // namespace

unsigned default_precision_cap() { return g_precision_cap.load(); }

void set_default_precision_cap(unsigned bits) {
  if (bits < 64) throw std::invalid_argument("precision cap must be at least 64 bits");
  g_precision_cap.store(bits);
}

Interval enclose(const FieldContext& ctx, const Surd& x, unsigned bits) {
  return enclose(x, ctx.alpha_at(bits), bits);
}

Interval enclose(const FieldContext& ctx, const PowerElement& x, unsigned bits) {
  return x.enclose(ctx.alpha_at(bits));
}

int certified_sign(const FieldContext& ctx, const Surd& x, CompareOptions options) {
  if (x.u.is_zero() && !x.has_root()) return 0;
  const unsigned cap = options.precision_cap ? options.precision_cap : default_precision_cap();
  for (unsigned bits = options.initial_bits; bits <= cap; bits *= 2) {
    const Interval e = enclose(ctx, x, bits);
    if (e.positive()) return 1;
    if (e.negative()) return -1;
  }
  return exact_sign(x);
}

Surd negate(const Surd& x) { return Surd{-x.u, -x.v, x.w}; }

PowerElement constant(const FieldContext& ctx, const Rational& q) {
  return PowerElement(ctx.m(), q);
}

Surd constant_surd(const FieldContext& ctx, const Rational& q) {
  return Surd::of(constant(ctx, q));
}

namespace {

Surd difference(const Surd& a, const Surd& b) {
  if (!b.has_root()) return Surd{a.u - b.u, a.v, a.w};
  if (!a.has_root()) return Surd{a.u - b.u, -b.v, b.w};
  if (a.w == b.w) return Surd{a.u - b.u, a.v - b.v, a.w};
  throw PrecisionExhausted("comparison of two distinct radicals is outside the expression grammar");
}

Comparison from_sign(int s) {
  if (s < 0) return Comparison::Less;
  if (s > 0) return Comparison::Greater;
  return Comparison::ExactEqual;
}

}  // namespace

Comparison compare(const FieldContext& ctx, const Surd& lhs, const Surd& rhs, CompareOptions options) {
  if (lhs.has_root() && rhs.has_root() && lhs.w != rhs.w) {
    const unsigned cap = options.precision_cap ? options.precision_cap : default_precision_cap();
    for (unsigned bits = options.initial_bits; bits <= cap; bits *= 2) {
      const Interval d = enclose(ctx, lhs, bits) - enclose(ctx, rhs, bits);
      if (d.negative()) return Comparison::Less;
      if (d.positive()) return Comparison::Greater;
    }
  }
  return from_sign(certified_sign(ctx, difference(lhs, rhs), options));
}

Comparison compare(const FieldContext& ctx, const PowerElement& lhs, const PowerElement& rhs,
                   CompareOptions options) {
  return from_sign(certified_sign(ctx, Surd::of(lhs - rhs), options));
}

Integer certified_floor(const FieldContext& ctx, const Surd& x) {
  Integer n = floor_of(enclose(ctx, x, 64).midpoint());
  while (compare(ctx, x, constant_surd(ctx, Rational(n))) == Comparison::Less) n -= 1;
  while (compare(ctx, x, constant_surd(ctx, Rational(n + 1))) != Comparison::Less) n += 1;
  return n;
}

Integer certified_ceil(const FieldContext& ctx, const Surd& x) {
  return -certified_floor(ctx, negate(x));
}

Integer strict_floor(const FieldContext& ctx, const Surd& x) {
  Integer n = certified_floor(ctx, x);
  if (compare(ctx, x, constant_surd(ctx, Rational(n))) == Comparison::ExactEqual) n -= 1;
  return n;
}

}  // namespace purecubic
