#pragma once

#include <array>
#include <cstdint>

#include "purecubic/certified_real.hpp"
#include "purecubic/integer.hpp"

namespace purecubic {

/// Element c0 + c1*alpha + c2*alpha^2 of Q(alpha), alpha^3 = m, with exact
/// rational coefficients. This is the symbolic layer behind every certified
/// comparison: alpha_hat is represented as alpha^2 / k, never as a separate root.
class PowerElement {
 public:
  PowerElement() = default;
  explicit PowerElement(std::int64_t m, Rational c0 = 0, Rational c1 = 0, Rational c2 = 0);

  static PowerElement alpha(std::int64_t m) { return PowerElement(m, 0, 1, 0); }

  std::int64_t m() const { return m_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  const std::array<Rational, 3>& coefficients() const { return c_; }
  bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
  bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

  /// Product of the three conjugates: c0^3 + m c1^3 + m^2 c2^3 - 3 m c0 c1 c2.
  Rational norm() const;
  /// The product of the two non-real conjugates; adjugate() * (*this) == norm().
  PowerElement adjugate() const;
  /// Throws ZeroElement for zero.
  PowerElement inverse() const;

  Interval enclose(const Interval& alpha) const;

  PowerElement& operator+=(const PowerElement& o);
  PowerElement& operator-=(const PowerElement& o);
  PowerElement& operator*=(const PowerElement& o);
  PowerElement& operator*=(const Rational& s);

  friend PowerElement operator+(PowerElement a, const PowerElement& b) { return a += b; }
  friend PowerElement operator-(PowerElement a, const PowerElement& b) { return a -= b; }
  friend PowerElement operator*(PowerElement a, const PowerElement& b) { return a *= b; }
  friend PowerElement operator*(const Rational& s, PowerElement a) { return a *= s; }
  friend PowerElement operator*(PowerElement a, const Rational& s) { return a *= s; }
  friend PowerElement operator+(PowerElement a, const Rational& s) {
    a.c_[0] += s;
    return a;
  }
  friend PowerElement operator-(PowerElement a, const Rational& s) {
    a.c_[0] -= s;
    return a;
  }
  PowerElement operator-() const;

  friend bool operator==(const PowerElement& a, const PowerElement& b) {
    return a.c_ == b.c_;
  }

 private:
  void check_same_field(const PowerElement& o) const;

  std::int64_t m_ = 0;
  std::array<Rational, 3> c_{};
};

/// Exact sign of an element of Q(alpha), in {-1, 0, 1}. The non-real conjugates
/// pair up into a positive real, so the sign of a nonzero element is the sign
/// of its norm.
int exact_sign(const PowerElement& x);

/// Exact sign of n0 + n1*alpha + n2*alpha^2 for integers.
int exact_sign(const Integer& n0, const Integer& n1, const Integer& n2, std::int64_t m);

/// Real number u + v*sqrt(w) with u, v, w in Q(alpha), w >= 0.
struct Surd {
  PowerElement u;
  PowerElement v;
  PowerElement w;

  static Surd of(const PowerElement& x) {
    return Surd{x, PowerElement(x.m()), PowerElement(x.m())};
  }
  bool has_root() const { return !v.is_zero() && !w.is_zero(); }
};

/// Exact sign of a surd; throws std::domain_error if w < 0.
int exact_sign(const Surd& x);

Interval enclose(const Surd& x, const Interval& alpha, unsigned bits);

}  // namespace purecubic
