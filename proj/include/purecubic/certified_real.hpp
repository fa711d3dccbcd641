#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>

#include "purecubic/integer.hpp"

namespace purecubic {

/// Closed interval with exact rational endpoints, lower <= upper.
struct Interval {
  Rational lower;
  Rational upper;

  Interval() = default;
  Interval(Rational lo, Rational hi);
  static Interval point(const Rational& q) { return Interval(q, q); }

  Rational width() const { return upper - lower; }
  Rational midpoint() const { return (lower + upper) / 2; }
  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
  bool contains(const Interval& other) const {
    return lower <= other.lower && other.upper <= upper;
  }
  bool positive() const { return lower > 0; }
  bool negative() const { return upper < 0; }
  bool excludes_zero() const { return positive() || negative(); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
Interval operator*(const Rational& s, const Interval& a);
Interval operator+(const Rational& s, const Interval& a);
inline Interval operator*(const Interval& a, const Rational& s) { return s * a; }
inline Interval operator+(const Interval& a, const Rational& s) { return s + a; }
inline Interval operator-(const Interval& a, const Rational& s) { return Rational(-s) + a; }
/// Throws std::domain_error if s is zero.
Interval operator/(const Interval& a, const Rational& s);
/// Throws std::domain_error if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval square(const Interval& a);
/// Enclosure of sqrt over the nonnegative part of a; throws if a is entirely negative.
Interval sqrt(const Interval& a, unsigned bits);
Interval intersect(const Interval& a, const Interval& b);
/// Widen to dyadic endpoints with 2^-bits resolution.
Interval round_outward(const Interval& a, unsigned bits);

/// Dyadic enclosure of the real cube root of n >= 0, width <= 2^-bits.
Interval cbrt_enclosure(const Integer& n, unsigned bits);
/// Dyadic enclosure of sqrt(q) for rational q >= 0, width <= 2^-(bits-1).
Interval sqrt_enclosure(const Rational& q, unsigned bits);
/// Enclosure of pi with width <= 2^-bits. Results are cached.
Interval pi_enclosure(unsigned bits);

/// A real number known through refinable interval enclosures.
///
/// The evaluator maps a working precision in bits to an enclosure; any
/// enclosure it returns must contain the true value, and widths must tend to
/// zero as bits grow. Copies share refinement state; every reader sees a valid
/// enclosure, possibly wider than the latest one.
class CertifiedReal {
 public:
  using Evaluator = std::function<Interval(unsigned bits)>;

  CertifiedReal();
  explicit CertifiedReal(const Rational& exact);
  explicit CertifiedReal(Evaluator evaluator, unsigned initial_bits = 64);

  Interval enclosure() const;
  unsigned bits() const;
  bool is_exact() const;

  /// Refine until the enclosure width is <= accuracy (accuracy > 0).
  Interval refine_to(const Rational& accuracy);
  /// Refine to at least the given working precision.
  Interval refine_bits(unsigned bits);

  /// Decimal rendering rounded to the given number of fractional digits.
  std::string to_decimal(int digits);

 private:
  struct State {
    std::mutex mutex;
    Evaluator evaluator;
    unsigned bits = 0;
    Interval current;
  };
  std::shared_ptr<State> state_;
};

/// Format a rational rounded half-away-from-zero to `digits` fractional digits.
std::string format_decimal(const Rational& value, int digits);

}  // namespace purecubic
