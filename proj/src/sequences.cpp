#include "purecubic/sequences.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include "purecubic/errors.hpp"
#include "purecubic/ideals.hpp"
#include "purecubic/reduced.hpp"

namespace purecubic {

namespace {

constexpr unsigned kSearchBits = 128;

SequenceState make_state(const FieldContext& ctx, long n, const Vector3& point) {
  SequenceState s;
  s.n = n;
  s.point = point;
  const FieldElement el = FieldElement::from_integers(point);
  s.value = to_power(ctx, el);
  s.shadow = s.value.adjugate();
  const Rational norm = norm_exact(ctx, el);
  if (norm.get_den() != 1) throw InternalError("norm of an algebraic integer is not an integer");
  s.norm = norm.get_num();
  return s;
}

struct Candidate {
  Vector3 point;
  PowerElement value;
};

// Orders candidates by Val; exact ties fall back to lexicographic (z, y, x).
class BestCandidate {
 public:
  void offer(const Candidate& c, std::vector<std::string>& diagnostics) {
    if (!best_) {
      replace(c);
      return;
    }
    const int s = exact_sign(c.value - best_->value);
    if (s < 0) {
      replace(c);
    } else if (s == 0 && c.point != best_->point) {
      diagnostics.push_back("distinct lattice points with equal Val");
      auto key = [](const Vector3& p) { return std::tie(p[2], p[1], p[0]); };
      if (key(c.point) < key(best_->point)) replace(c);
    }
  }
  const std::optional<Candidate>& get() const { return best_; }
  long version() const { return version_; }

 private:
  void replace(const Candidate& c) {
    best_ = c;
    ++version_;
  }
  std::optional<Candidate> best_;
  long version_ = 0;
};

// Double-precision filter: with every magnitude below 2^40 the accumulated
// rounding error stays below kRelativeError * (magnitudes) < 1/10, so ranges
// widened by one lattice step on each side lose no candidate. Candidates are
// always decided exactly.
constexpr double kRelativeError = 1e-14;
constexpr double kFastLimit = 1099511627776.0;  // 2^40

double upper_double(const Rational& q) {
  const double d = q.get_d();
  return d + kRelativeError * (std::fabs(d) + 1);
}

class Search {
 public:
  Search(const FieldContext& ctx, const SequenceState& state)
      : ctx_(ctx),
        state_(state),
        alpha_(ctx.alpha_at(kSearchBits)),
        alpha_hat_(ctx.alpha_hat_at(kSearchBits)),
        sigma_(ctx.sigma()),
        k_over_sigma_(Integer(ctx.k()), Integer(ctx.sigma())),
        eps_(ctx.sign()) {
    const Interval b = state.shadow.enclose(alpha_);
    shadow_bound_ = b;
    root_b_ = sqrt(b, kSearchBits);
    // |B| < 2 sqrt(b/3) on the cylinder Sh < b
    radius_ = Rational(2) * sqrt(Rational(1, 3) * b, kSearchBits);
    value_ = state.value.enclose(alpha_);
    alpha_d_ = alpha_.midpoint().get_d();
    alpha_hat_d_ = alpha_hat_.midpoint().get_d();
    k_over_sigma_d_ = k_over_sigma_.get_d();
    radius_d_ = upper_double(radius_.upper);
    shadow_d_ = upper_double(shadow_bound_.upper);
  }

  // Smallest z whose points can still have Val > a_n: Val < 3w + 2 sqrt(b).
  Integer first_height() const {
    const Interval w = Rational(1, 3) * (value_ - Rational(2) * root_b_);
    return floor_of((sigma_ * w / alpha_hat_).lower);
  }

  // Beyond this height Minkowski's theorem would be violated.
  Integer guard_height() const {
    const Interval pi = pi_enclosure(kSearchBits);
    const Interval sqrt3 = sqrt_enclosure(Rational(3), kSearchBits);
    const Rational hk(Integer(ctx_.h()) * ctx_.k());
    const Interval bound = (Rational(6) * hk * sqrt3) / (sigma_ * pi * shadow_bound_);
    const Interval w = Rational(1, 3) * (bound + Rational(2) * root_b_);
    return ceil_of((sigma_ * w / alpha_hat_).upper) + 1;
  }

  // Every point at height >= the result has Val > 3 w(z) - 2 sqrt(b) >= Val(best).
  Integer stop_height(const Candidate& best) const {
    const Interval target = best.value.enclose(alpha_) + Rational(2) * root_b_;
    return ceil_of(sigma_ * target.upper / (3 * alpha_hat_.lower));
  }

  void exhaustive_at(const Integer& z, BestCandidate& best, std::vector<std::string>& diags) const {
    const double zd = z.get_d();
    if (std::fabs(alpha_hat_d_ * zd) < kFastLimit) {
      exhaustive_fast(z, zd, best, diags);
    } else {
      exhaustive_exact(z, best, diags);
    }
  }

  void four_corner_at(const Integer& z, BestCandidate& best, std::vector<std::string>& diags) const {
    const Rational zq(z);
    const Rational k(Integer(ctx_.k()));
    const Rational scale = zq / sigma_;
    const PowerElement alpha = PowerElement::alpha(ctx_.m());
    const PowerElement alpha_hat(ctx_.m(), 0, 0, 1 / k);
    const double zd = z.get_d() / sigma_.get_d();
    const double kd = k.get_d();
    const Integer x0 = axis_floor((alpha_hat_d_ - kd) * zd, [&] {
      return std::pair((alpha_hat_ - k) * scale, (alpha_hat - k) * scale);
    });
    const Integer y0 = axis_floor((alpha_d_ / kd - eps_.get_d() * kd) * zd, [&] {
      return std::pair((alpha_ / k - eps_ * k) * scale, (alpha * (1 / k) - eps_ * k) * scale);
    });
    for (int dx = 0; dx <= 1; ++dx)
      for (int dy = 0; dy <= 1; ++dy) {
        const Vector3 p{x0 + dx, y0 + dy, z};
        if (may_lie_inside(p)) consider(p, best, diags);
      }
  }

 private:
  void exhaustive_fast(const Integer& z, double zd, BestCandidate& best, std::vector<std::string>& diags) const {
    const double w = alpha_hat_d_ * zd / sigma_.get_d();
    const double y_offset = eps_.get_d() * zd * k_over_sigma_d_;
    const double x_offset = zd * k_over_sigma_d_;
    const auto y_lo = static_cast<long>(std::floor((w - radius_d_) / alpha_d_ - y_offset)) - 1;
    const auto y_hi = static_cast<long>(std::ceil((w + radius_d_) / alpha_d_ - y_offset)) + 1;
    for (long y = y_lo; y <= y_hi; ++y) {
      const double yt = static_cast<double>(y) + y_offset;
      const double B = alpha_d_ * yt - w;
      const double error = kRelativeError * (std::fabs(alpha_d_ * yt) + std::fabs(w) + std::fabs(B) + 1);
      const double B_min = std::max(0.0, std::fabs(B) - error);
      if (B_min > radius_d_) continue;
      const double chord = std::sqrt(std::max(0.0, shadow_d_ - 0.75 * B_min * B_min)) * (1 + kRelativeError);
      const double centre = w + 0.5 * B - x_offset;
      const auto x_lo = static_cast<long>(std::floor(centre - chord)) - 1;
      const auto x_hi = static_cast<long>(std::ceil(centre + chord)) + 1;
      for (long x = x_lo; x <= x_hi; ++x) consider({Integer(x), Integer(y), z}, best, diags);
    }
  }

  void exhaustive_exact(const Integer& z, BestCandidate& best, std::vector<std::string>& diags) const {
    const Rational zq(z);
    const Interval w = (zq / sigma_) * alpha_hat_;
    const Rational y_offset = eps_ * zq * k_over_sigma_;
    const Rational x_offset = zq * k_over_sigma_;
    const Interval yt_range = (w + Interval(-radius_.upper, radius_.upper)) / alpha_;
    const Integer y_hi = ceil_of(yt_range.upper - y_offset);
    for (Integer y = floor_of(yt_range.lower - y_offset); y <= y_hi; ++y) {
      const Rational yt = Rational(y) + y_offset;
      const Interval B = yt * alpha_ - w;
      const Interval disc = shadow_bound_ - Rational(3, 4) * square(B);
      if (disc.upper < 0) continue;
      const Interval half_chord = sqrt(disc, kSearchBits);
      const Interval xt_lo = Rational(1, 2) * B - half_chord + w;
      const Interval xt_hi = Rational(1, 2) * B + half_chord + w;
      const Integer x_hi = ceil_of(xt_hi.upper - x_offset);
      for (Integer x = floor_of(xt_lo.lower - x_offset); x <= x_hi; ++x) consider({x, y, z}, best, diags);
    }
  }

  // false only when the point is certainly outside the cylinder Sh < b.
  bool may_lie_inside(const Vector3& p) const {
    const double zd = p[2].get_d();
    const double w = alpha_hat_d_ * zd / sigma_.get_d();
    const double xt = p[0].get_d() + zd * k_over_sigma_d_;
    const double yt = p[1].get_d() + eps_.get_d() * zd * k_over_sigma_d_;
    if (std::fabs(w) >= kFastLimit || std::fabs(xt) >= kFastLimit || std::fabs(alpha_d_ * yt) >= kFastLimit)
      return true;
    const double B = alpha_d_ * yt - w;
    const double A = xt - w;
    const double error = kRelativeError * (std::fabs(alpha_d_ * yt) + std::fabs(xt) + 2 * std::fabs(w) + 1);
    const double B_min = std::max(0.0, std::fabs(B) - error);
    if (B_min > radius_d_) return false;
    const double chord = std::sqrt(std::max(0.0, shadow_d_ - 0.75 * B_min * B_min)) * (1 + kRelativeError);
    return std::fabs(A - 0.5 * B) <= chord + 2 * error + kRelativeError;
  }

  template <class Exact>
  Integer axis_floor(double approx, Exact&& exact) const {
    if (std::fabs(approx) < kFastLimit) {
      const double nearest = std::round(approx);
      if (std::fabs(approx - nearest) > kRelativeError * (std::fabs(approx) + 1))
        return Integer(static_cast<long>(std::floor(approx)));
    }
    const auto [enclosure, value] = exact();
    const Integer lo = floor_of(enclosure.lower);
    if (lo == floor_of(enclosure.upper)) return lo;
    return certified_floor(ctx_, Surd::of(value));
  }

  void consider(const Vector3& p, BestCandidate& best, std::vector<std::string>& diags) const {
    if (p[0] == 0 && p[1] == 0 && p[2] == 0) return;
    const PowerElement value = to_power(ctx_, FieldElement::from_integers(p));
    if (exact_sign(value - state_.value) <= 0) return;
    if (exact_sign(state_.shadow - value.adjugate()) <= 0) return;
    best.offer(Candidate{p, value}, diags);
  }

  const FieldContext& ctx_;
  const SequenceState& state_;
  Interval alpha_, alpha_hat_;
  Rational sigma_, k_over_sigma_, eps_;
  Interval shadow_bound_, root_b_, radius_, value_;
  double alpha_d_, alpha_hat_d_, k_over_sigma_d_, radius_d_, shadow_d_;
};

}  // namespace

SequenceState initial_state(const FieldContext& ctx) { return make_state(ctx, 0, Vector3{1, 0, 0}); }

SequenceState next_minimal(const FieldContext& ctx, const SequenceState& state, SearchMode mode) {
  Search search(ctx, state);
  BestCandidate best;
  std::vector<std::string> diagnostics;
  const Integer guard = search.guard_height();
  std::optional<Integer> stop;
  long seen = 0;
  for (Integer z = search.first_height();; ++z) {
    if (stop && z >= *stop) break;
    if (z > guard) {
      if (best.get()) break;
      throw InternalError("no lattice point below the Minkowski bound");
    }
    if (mode == SearchMode::Exhaustive) {
      search.exhaustive_at(z, best, diagnostics);
    } else {
      search.four_corner_at(z, best, diagnostics);
    }
    if (best.version() != seen) {
      seen = best.version();
      stop = search.stop_height(*best.get());
    }
  }
  SequenceState next = make_state(ctx, state.n + 1, best.get()->point);
  next.diagnostics = std::move(diagnostics);
  return next;
}

std::vector<SequenceState> minimal_sequence(const FieldContext& ctx, long count, SequenceOptions options) {
  std::vector<SequenceState> out;
  if (count < 1) return out;
  if (count > options.iteration_cap) throw IterationCapExceeded(options.iteration_cap);
  out.push_back(initial_state(ctx));
  while (static_cast<long>(out.size()) < count) out.push_back(next_minimal(ctx, out.back(), options.mode));
  return out;
}

std::vector<Integer> norm_sequence(const FieldContext& ctx, long count, SequenceOptions options) {
  std::vector<Integer> out;
  for (const auto& s : minimal_sequence(ctx, count, options)) out.push_back(s.norm);
  return out;
}

std::vector<SequenceState> minimal_sequence_below(const FieldContext& ctx, const Integer& max_z,
                                                  SequenceOptions options) {
  std::vector<SequenceState> out;
  SequenceState s = initial_state(ctx);
  while (s.point[2] < max_z) {
    out.push_back(s);
    if (static_cast<long>(out.size()) > options.iteration_cap) throw IterationCapExceeded(options.iteration_cap);
    s = next_minimal(ctx, s, options.mode);
  }
  return out;
}

SequenceResult detect_period(const FieldContext& ctx, SequenceOptions options) {
  SequenceResult result;
  result.states.push_back(initial_state(ctx));
  long period = 0;
  while (period == 0) {
    if (static_cast<long>(result.states.size()) > options.iteration_cap)
      throw IterationCapExceeded(options.iteration_cap);
    result.states.push_back(next_minimal(ctx, result.states.back(), options.mode));
    if (result.states.back().norm == 1) period = result.states.back().n;
  }
  result.period = period;
  result.fundamental_unit = result.states.back().element();
  for (long i = 0; i < period; ++i) {
    result.states.push_back(next_minimal(ctx, result.states.back(), options.mode));
  }
  for (long i = 0; i < period; ++i) {
    result.minimal_elements.push_back(result.states[static_cast<std::size_t>(i)].element());
    result.norm_period.push_back(result.states[static_cast<std::size_t>(i)].norm);
  }
  for (long i = 0; i <= period; ++i) {
    const FieldElement shifted =
        multiply(ctx, result.fundamental_unit, result.states[static_cast<std::size_t>(i)].element());
    if (shifted != result.states[static_cast<std::size_t>(i + period)].element())
      throw InternalError("minimal sequence is not epsilon0-periodic at index " + std::to_string(i));
  }
  return result;
}

Integer denominator_length(const FieldContext& ctx, const FieldElement& gamma) {
  const auto inverse_matrix = multiplication_matrix(ctx, invert(ctx, gamma));
  Integer L = 1;
  for (const auto& row : inverse_matrix)
    for (const Rational& q : row) L = lcm(L, q.get_den());
  return L;
}

IdealForm map_F(const FieldContext& ctx, const SequenceResult& result, const FieldElement& gamma) {
  if (std::find(result.minimal_elements.begin(), result.minimal_elements.end(), gamma) ==
      result.minimal_elements.end())
    throw NotMinimalElement();
  const Integer L = denominator_length(ctx, gamma);
  const FieldElement generator = scale(Rational(L), invert(ctx, gamma));
  return principal_ideal(ctx, generator.integer_coordinates());
}

FieldElement map_G(const FieldContext& ctx, const SequenceResult& result, const IdealForm& ideal,
                   const FieldElement& generator) {
  if (!generator.is_integral() || generator.is_zero() ||
      principal_ideal(ctx, generator.integer_coordinates()) != ideal)
    throw GeneratorMismatch();
  bool reduced = false;
  try {
    reduced = is_reduced(ideal, ctx);
  } catch (const NotPrimitive&) {
    reduced = false;
  }
  if (!reduced) throw NotReduced();

  FieldElement gamma = scale(Rational(ideal.a), invert(ctx, generator));
  if (exact_sign(to_power(ctx, gamma)) < 0) gamma = negate(gamma);
  const FieldElement& unit = result.fundamental_unit;
  const FieldElement unit_inverse = invert(ctx, unit);
  const PowerElement unit_value = to_power(ctx, unit);
  while (exact_sign(to_power(ctx, gamma) - Rational(1)) < 0) gamma = multiply(ctx, gamma, unit);
  while (exact_sign(to_power(ctx, gamma) - unit_value) >= 0) gamma = multiply(ctx, gamma, unit_inverse);
  return gamma;
}

}  // namespace purecubic
