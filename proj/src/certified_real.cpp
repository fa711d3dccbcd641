#include "purecubic/certified_real.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace purecubic {

Interval::Interval(Rational lo, Rational hi) : lower(std::move(lo)), upper(std::move(hi)) {
  if (upper < lower) throw std::invalid_argument("interval with upper < lower");
}

Interval operator+(const Interval& a, const Interval& b) {
  return Interval(a.lower + b.lower, a.upper + b.upper);
}

Interval operator-(const Interval& a, const Interval& b) {
  return Interval(a.lower - b.upper, a.upper - b.lower);
}

Interval operator-(const Interval& a) { return Interval(-a.upper, -a.lower); }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lower >= 0 && b.lower >= 0) return Interval(a.lower * b.lower, a.upper * b.upper);
  Rational p1 = a.lower * b.lower;
  Rational p2 = a.lower * b.upper;
  Rational p3 = a.upper * b.lower;
  Rational p4 = a.upper * b.upper;
  return Interval(std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4}));
}

Interval operator*(const Rational& s, const Interval& a) {
  if (s >= 0) return Interval(s * a.lower, s * a.upper);
  return Interval(s * a.upper, s * a.lower);
}

Interval operator+(const Rational& s, const Interval& a) {
  return Interval(s + a.lower, s + a.upper);
}

Interval operator/(const Interval& a, const Rational& s) {
  if (s == 0) throw std::domain_error("interval division by zero");
  return Rational(1 / s) * a;
}

Interval operator/(const Interval& a, const Interval& b) {
  if (!b.excludes_zero()) throw std::domain_error("interval division by an interval containing 0");
  return a * Interval(1 / b.upper, 1 / b.lower);
}

Interval square(const Interval& a) {
  if (a.lower >= 0) return Interval(a.lower * a.lower, a.upper * a.upper);
  if (a.upper <= 0) return Interval(a.upper * a.upper, a.lower * a.lower);
  Rational hi = std::max(a.lower * a.lower, a.upper * a.upper);
  return Interval(Rational(0), hi);
}

namespace {

Rational dyadic(const Integer& mantissa, unsigned bits) {
  Rational q(mantissa, Integer(1));
  Integer den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), bits);
  q /= Rational(den);
  return q;
}

Integer scaled_floor(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  return floor_div(num, q.get_den());
}

Integer scaled_ceil(const Rational& q, unsigned bits) {
  Integer num = q.get_num();
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
  return r;
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  Integer scaled = scaled_floor(q, 2 * bits);
  return dyadic(sqrt_floor(scaled), bits);
}

Rational sqrt_upper(const Rational& q, unsigned bits) {
  if (q <= 0) return 0;
  Integer scaled = scaled_ceil(q, 2 * bits);
  Integer r = sqrt_floor(scaled);
  if (r * r != scaled) r += 1;
  return dyadic(r, bits);
}

}  // namespace

Interval sqrt(const Interval& a, unsigned bits) {
  if (a.upper < 0) throw std::domain_error("sqrt of a negative interval");
  return Interval(sqrt_lower(a.lower, bits), sqrt_upper(a.upper, bits));
}

Interval intersect(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lower, b.lower), std::min(a.upper, b.upper));
}

Interval round_outward(const Interval& a, unsigned bits) {
  return Interval(dyadic(scaled_floor(a.lower, bits), bits), dyadic(scaled_ceil(a.upper, bits), bits));
}

Interval cbrt_enclosure(const Integer& n, unsigned bits) {
  if (n < 0) throw std::domain_error("cbrt_enclosure of negative integer");
  Integer scaled = n;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 3 * bits);
  Integer r = cbrt_floor(scaled);
  if (r * r * r == scaled) return Interval::point(dyadic(r, bits));
  return Interval(dyadic(r, bits), dyadic(r + 1, bits));
}

Interval sqrt_enclosure(const Rational& q, unsigned bits) {
  if (q < 0) throw std::domain_error("sqrt_enclosure of negative rational");
  return Interval(sqrt_lower(q, bits), sqrt_upper(q, bits));
}

namespace {

// arctan(1/x) for integer x >= 2 by its alternating series; the tail is
// bounded by the first omitted term.
Interval arctan_inverse(long x, unsigned bits) {
  const Rational tolerance = pow2(-static_cast<long>(bits) - 4);
  const Integer x2 = Integer(x) * x;
  Integer power = x;  // x^(2n+1)
  Rational sum = 0;
  for (long n = 0;; ++n) {
    Rational term(Integer(1), power * (2 * n + 1));
    if (term < tolerance) return Interval(sum - term, sum + term);
    if (n % 2 == 0) {
      sum += term;
    } else {
      sum -= term;
    }
    power *= x2;
  }
}

}  // namespace

Interval pi_enclosure(unsigned bits) {
  static std::mutex mutex;
  static std::map<unsigned, Interval> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
  }
  // Machin: pi = 16 arctan(1/5) - 4 arctan(1/239)
  Interval value = Rational(16) * arctan_inverse(5, bits + 6) - Rational(4) * arctan_inverse(239, bits + 6);
  value = round_outward(value, bits + 2);
  std::lock_guard lock(mutex);
  cache.emplace(bits, value);
  return value;
}

CertifiedReal::CertifiedReal() : CertifiedReal(Rational(0)) {}

CertifiedReal::CertifiedReal(const Rational& exact) : state_(std::make_shared<State>()) {
  state_->evaluator = [exact](unsigned) { return Interval::point(exact); };
  state_->bits = 0;
  state_->current = Interval::point(exact);
}

CertifiedReal::CertifiedReal(Evaluator evaluator, unsigned initial_bits)
    : state_(std::make_shared<State>()) {
  state_->evaluator = std::move(evaluator);
  state_->bits = initial_bits;
  state_->current = state_->evaluator(initial_bits);
}

Interval CertifiedReal::enclosure() const {
  std::lock_guard lock(state_->mutex);
  return state_->current;
}

unsigned CertifiedReal::bits() const {
  std::lock_guard lock(state_->mutex);
  return state_->bits;
}

bool CertifiedReal::is_exact() const {
  std::lock_guard lock(state_->mutex);
  return state_->current.lower == state_->current.upper;
}

Interval CertifiedReal::refine_bits(unsigned bits) {
  std::lock_guard lock(state_->mutex);
  if (bits > state_->bits) {
    Interval next = state_->evaluator(bits);
    state_->current = intersect(state_->current, next);
    state_->bits = bits;
  }
  return state_->current;
}

Interval CertifiedReal::refine_to(const Rational& accuracy) {
  if (accuracy <= 0) throw std::invalid_argument("refine_to requires a positive accuracy");
  constexpr unsigned kMaxBits = 1u << 20;
  Interval current = enclosure();
  unsigned b = std::max(bits(), 32u);
  while (current.width() > accuracy) {
    if (b > kMaxBits) throw std::runtime_error("refine_to: evaluator does not converge");
    b *= 2;
    current = refine_bits(b);
  }
  return current;
}

std::string format_decimal(const Rational& value, int digits) {
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Rational scaled = abs(value) * Rational(scale);
  // half away from zero
  Integer rounded = floor_of(scaled + Rational(1, 2));
  std::string s = rounded.get_str();
  if (digits > 0) {
    if (static_cast<int>(s.size()) <= digits) s.insert(0, static_cast<std::size_t>(digits + 1) - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (value < 0 && rounded != 0) s.insert(0, "-");
  return s;
}

std::string CertifiedReal::to_decimal(int digits) {
  Rational accuracy(1);
  for (int i = 0; i < digits + 3; ++i) accuracy /= 10;
  Interval e = is_exact() ? enclosure() : refine_to(accuracy);
  return format_decimal(e.midpoint(), digits);
}

}  // namespace purecubic
