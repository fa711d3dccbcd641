#include "purecubic/reduced.hpp"

#include <functional>

#include "purecubic/errors.hpp"
#include "purecubic/ideals.hpp"
#include "purecubic/real_embedding.hpp"

namespace purecubic {

namespace {

// Sign of a real given by interval evaluators; used for comparisons that involve
// pi, where equality is impossible.
int transcendental_sign(const std::function<Interval(unsigned)>& eval, const char* what) {
  const unsigned cap = std::max(default_precision_cap(), 64u);
  for (unsigned bits = 64; bits <= cap; bits *= 2) {
    const Interval e = eval(bits);
    if (e.positive()) return 1;
    if (e.negative()) return -1;
  }
  throw PrecisionExhausted(what);
}

Interval sqrt3(unsigned bits) { return sqrt_enclosure(Rational(3), bits); }

Surd scaled(const Surd& x, const Rational& factor, const Rational& shift) {
  return Surd{x.u * factor + shift, x.v * factor, x.w};
}

}  // namespace

CertifiedReal region_volume(const FieldContext& ctx, const Integer& length) {
  const Rational numerator = Rational(4 * Integer(ctx.sigma()) * length * length * length);
  const Rational hk = Rational(Integer(ctx.h()) * ctx.k());
  return CertifiedReal([numerator, hk](unsigned bits) {
    const Interval pi = pi_enclosure(bits);
    return (numerator * pi) / (Rational(3) * hk * sqrt3(bits));
  });
}

Integer upper_bound_length(const FieldContext& ctx) {
  const Rational six_m = Rational(6 * Integer(ctx.m()));
  for (unsigned bits = 64;; bits *= 2) {
    const Interval bound = (six_m * sqrt3(bits)) / pi_enclosure(bits);
    const Integer lo = floor_of(bound.lower);
    if (lo == floor_of(bound.upper)) return lo;
    if (bits > (1u << 16)) throw PrecisionExhausted("upper_bound_length");
  }
}

bool exceeds_upper_bound(const FieldContext& ctx, const Integer& length) {
  const Rational L(length);
  const Rational six_m = Rational(6 * Integer(ctx.m()));
  return transcendental_sign(
             [&](unsigned bits) { return L * pi_enclosure(bits) - six_m * sqrt3(bits); },
             "upper bound comparison") > 0;
}

bool below_lower_bound(const FieldContext& ctx, const Integer& length) {
  const PowerElement L = constant(ctx, Rational(length));
  const PowerElement alpha = PowerElement::alpha(ctx.m());
  const PowerElement alpha_hat_over_sigma(ctx.m(), 0, 0, Rational(Integer(1), Integer(ctx.k()) * ctx.sigma()));
  return compare(ctx, L, alpha) == Comparison::Less &&
         compare(ctx, L, alpha_hat_over_sigma) == Comparison::Less;
}

namespace {

struct LineGeometry {
  const FieldContext& ctx;
  const IdealForm& form;
  Rational sigma, k, eps, L;
  PowerElement alpha, alpha_hat;

  LineGeometry(const FieldContext& c, const IdealForm& g)
      : ctx(c),
        form(g),
        sigma(c.sigma()),
        k(Integer(c.k())),
        eps(c.sign()),
        L(g.a),
        alpha(PowerElement::alpha(c.m())),
        alpha_hat(c.m(), 0, 0, Rational(Integer(1), Integer(c.k()))) {}

  PowerElement inverse_alpha() const { return PowerElement(ctx.m(), 0, 0, Rational(Integer(1), Integer(ctx.m()))); }

  // (alpha_hat/alpha - eps*k) z/sigma - 2L/(sqrt(3) alpha)
  Surd y_lower(const Rational& z) const {
    PowerElement u = (alpha * (1 / k) - eps * k) * (z / sigma);
    PowerElement v = inverse_alpha() * (-2 * L / 3);
    return Surd{u, v, constant(ctx, 3)};
  }

  // (sigma L - ah z + sqrt((sigma L - ah z)(sigma L + 3 ah z))) / (2 sigma alpha) - eps k z / sigma
  Surd y_upper(const Rational& z) const {
    const PowerElement left = constant(ctx, sigma * L) - alpha_hat * z;
    const PowerElement right = constant(ctx, sigma * L) + alpha_hat * (3 * z);
    const PowerElement scale = inverse_alpha() * (1 / (2 * sigma));
    return Surd{left * scale - eps * k * z / sigma, scale, left * right};
  }

  // true if some lattice point of the ideal on the line (., y, z) lies strictly inside R.
  bool line_has_interior_point(const Integer& y_int, const Integer& z_int) const {
    const Rational y(y_int);
    const Rational z(z_int);
    const Integer& b = form.b;
    const Integer& c = form.c;
    const Integer& d = form.d;
    const Integer& e = form.e;
    const Integer& f = form.f;
    const Integer shift_num = y_int * b * f + z_int * c * d - z_int * b * e;
    if (!divides(c * f, shift_num)) throw InternalError("lattice abscissa shift is not integral");
    const Rational S(shift_num / (c * f));

    const PowerElement slab = alpha * (sigma * y + eps * k * z) + alpha_hat * z;
    const PowerElement P1 = (constant(ctx, -sigma * L - k * z) - slab) * (1 / sigma);
    const PowerElement Q1 = (constant(ctx, sigma * L - k * z) - slab) * (1 / sigma);

    const PowerElement tilt = alpha * (sigma * y + eps * k * z) - alpha_hat * z;
    const PowerElement D = constant(ctx, 4 * sigma * sigma * L * L) - tilt * tilt * 3;
    if (certified_sign(ctx, Surd::of(D)) < 0) return false;  // the line misses the cylinder
    const PowerElement centre =
        (alpha * (sigma * y + eps * k * z) + alpha_hat * z - 2 * k * z) * (1 / (2 * sigma));
    const Surd P2{centre, constant(ctx, -1 / (2 * sigma)), D};
    const Surd Q2{centre, constant(ctx, 1 / (2 * sigma)), D};

    const Surd Q = compare(ctx, Surd::of(Q1), Q2) == Comparison::Less ? Surd::of(Q1) : Q2;
    const Rational inv_L = 1 / L;
    const Surd upper_edge = scaled(Q, inv_L, -S * inv_L);
    const Integer n = strict_floor(ctx, upper_edge);
    const Surd n_surd = constant_surd(ctx, Rational(n));
    // n must also clear both lower edges
    return compare(ctx, n_surd, scaled(Surd::of(P1), inv_L, -S * inv_L)) == Comparison::Greater &&
           compare(ctx, n_surd, scaled(P2, inv_L, -S * inv_L)) == Comparison::Greater;
  }
};

void require_primitive_ideal(const IdealForm& form, const FieldContext& ctx) {
  if (!is_canonical(form) || !is_ideal(form, ctx)) throw NotAnIdeal();
  if (!is_primitive(form)) throw NotPrimitive();
}

}  // namespace

bool is_reduced(const IdealForm& form, const FieldContext& ctx) {
  require_primitive_ideal(form, ctx);
  const Integer& L = form.a;
  if (below_lower_bound(ctx, L)) return true;
  if (exceeds_upper_bound(ctx, L)) return false;

  const LineGeometry geo(ctx, form);
  const Integer sigma_L = Integer(ctx.sigma()) * L;
  const Integer m_hat = ctx.m_hat();
  // z * alpha_hat < sigma * L  <=>  z^3 * m_hat < (sigma L)^3
  for (Integer z = 0; z * z * z * m_hat < sigma_L * sigma_L * sigma_L; z += form.f) {
    const Rational zq(z);
    Integer y = certified_ceil(ctx, geo.y_lower(zq));
    const Integer residue = form.e * (z / form.f);
    y += mod_floor(residue - y, form.c);
    const Surd upper = geo.y_upper(zq);
    for (; compare(ctx, constant_surd(ctx, Rational(y)), upper) != Comparison::Greater; y += form.c) {
      if (y == 0 && z == 0) continue;
      if (geo.line_has_interior_point(y, z)) return false;
    }
  }
  return true;
}

std::optional<Vector3> find_interior_point(const IdealForm& form, const FieldContext& ctx) {
  require_primitive_ideal(form, ctx);
  constexpr unsigned kBits = 64;
  const Integer& L = form.a;
  const Rational Lq(L);
  const Rational sigma(ctx.sigma());
  const Rational k_over_sigma(Integer(ctx.k()), Integer(ctx.sigma()));
  const Interval alpha = ctx.alpha_at(kBits);
  const Interval alpha_hat = ctx.alpha_hat_at(kBits);
  // 2/sqrt(3) < 2887/2500
  const Rational cylinder_radius = Rational(2887, 2500) * Lq;

  // Sh < L^2 and |Val| < L force |alpha_hat * z / sigma| < L.
  const Integer z_max = floor_of(((sigma * Lq) * Interval(1 / alpha_hat.upper, 1 / alpha_hat.lower)).upper);
  const Integer z_start = -(z_max - mod_floor(z_max, form.f));

  const PowerElement L_el = constant(ctx, Lq);
  const PowerElement L2_el = constant(ctx, Lq * Lq);

  for (Integer z = z_start; z <= z_max; z += form.f) {
    const Rational zq(z);
    const Interval w = (zq / sigma) * alpha_hat;
    // |alpha*yt - w| < 2L/sqrt(3) from the shadow inequality
    const Interval yt_range = (w + Interval(-cylinder_radius, cylinder_radius)) / alpha;
    const Rational y_offset = ctx.sign() * zq * k_over_sigma;
    const Integer y_lo = floor_of(yt_range.lower - y_offset);
    const Integer y_hi = ceil_of(yt_range.upper - y_offset);
    const Integer residue = form.e * (z / form.f);
    Integer y = y_lo + mod_floor(residue - y_lo, form.c);
    for (; y <= y_hi; y += form.c) {
      const Rational yt = Rational(y) + y_offset;
      // |xt + alpha*yt + w| < L from the slab inequality
      const Interval xt_range = Interval(-Lq, Lq) - (yt * alpha + w);
      const Rational x_offset = zq * k_over_sigma;
      const Integer x_lo = floor_of(xt_range.lower - x_offset);
      const Integer x_hi = ceil_of(xt_range.upper - x_offset);
      const Integer shift = (y * form.b * form.f + z * form.c * form.d - z * form.b * form.e) / (form.c * form.f);
      Integer x = x_lo + mod_floor(shift - x_lo, L);
      for (; x <= x_hi; x += L) {
        if (x == 0 && y == 0 && z == 0) continue;
        const FieldElement el{Rational(x), Rational(y), zq};
        const PowerElement value = to_power(ctx, el);
        if (exact_sign(L2_el - value.adjugate()) <= 0) continue;
        if (exact_sign(L_el - value) <= 0 || exact_sign(L_el + value) <= 0) continue;
        return Vector3{x, y, z};
      }
    }
  }
  return std::nullopt;
}

bool oracle_is_reduced(const IdealForm& form, const FieldContext& ctx) {
  return !find_interior_point(form, ctx).has_value();
}

bool minkowski_prune(const IdealForm& form, const FieldContext& ctx) {
  const Rational L(form.a);
  const Rational c(form.c);
  const Rational cf(form.c * form.f);
  const Rational m(Integer(ctx.m()));
  // z = 0 cross-section: area L^2 (9 + 2 sqrt(3) pi) / (9 alpha) against 4 L c
  const int planar = transcendental_sign(
      [&](unsigned bits) {
        return (9 * L + (2 * L) * (sqrt3(bits) * pi_enclosure(bits))) - (36 * c) * ctx.alpha_at(bits);
      },
      "planar Minkowski screen");
  if (planar > 0) return false;
  const int spatial = transcendental_sign(
      [&](unsigned bits) { return (L * L) * pi_enclosure(bits) - (6 * m * cf) * sqrt3(bits); },
      "spatial Minkowski screen");
  return spatial <= 0;
}

std::vector<IdealForm> enumerate_reduced(const FieldContext& ctx, EnumerateReducedOptions options) {
  std::vector<IdealForm> out;
  const Integer max_length = upper_bound_length(ctx);
  for (Integer L = 1; L <= max_length; ++L) {
    for (const IdealForm& form : enumerate_primitive_ideals(ctx, L)) {
      if (options.use_minkowski_prune && !minkowski_prune(form, ctx)) continue;
      if (is_reduced(form, ctx)) out.push_back(form);
    }
  }
  return out;
}

}  // namespace purecubic
