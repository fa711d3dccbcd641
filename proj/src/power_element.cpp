#include "purecubic/power_element.hpp"

#include <algorithm>
#include <stdexcept>

#include "purecubic/errors.hpp"

namespace purecubic {

PowerElement::PowerElement(std::int64_t m, Rational c0, Rational c1, Rational c2)
    : m_(m), c_{std::move(c0), std::move(c1), std::move(c2)} {}

void PowerElement::check_same_field(const PowerElement& o) const {
  if (m_ != o.m_ && m_ != 0 && o.m_ != 0) throw std::invalid_argument("elements of different fields");
}

PowerElement& PowerElement::operator+=(const PowerElement& o) {
  check_same_field(o);
  if (m_ == 0) m_ = o.m_;
  for (std::size_t i = 0; i < 3; ++i) c_[i] += o.c_[i];
  return *this;
}

PowerElement& PowerElement::operator-=(const PowerElement& o) {
  check_same_field(o);
  if (m_ == 0) m_ = o.m_;
  for (std::size_t i = 0; i < 3; ++i) c_[i] -= o.c_[i];
  return *this;
}

PowerElement& PowerElement::operator*=(const PowerElement& o) {
  check_same_field(o);
  if (m_ == 0) m_ = o.m_;
  const Rational m = Rational(Integer(m_));
  const auto& a = c_;
  const auto& b = o.c_;
  std::array<Rational, 3> r;
  r[0] = a[0] * b[0] + m * (a[1] * b[2] + a[2] * b[1]);
  r[1] = a[0] * b[1] + a[1] * b[0] + m * a[2] * b[2];
  r[2] = a[0] * b[2] + a[1] * b[1] + a[2] * b[0];
  c_ = std::move(r);
  return *this;
}

PowerElement& PowerElement::operator*=(const Rational& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

PowerElement PowerElement::operator-() const {
  return PowerElement(m_, -c_[0], -c_[1], -c_[2]);
}

Rational PowerElement::norm() const {
  const Rational m = Rational(Integer(m_));
  const auto& [a, b, c] = c_;
  return a * a * a + m * b * b * b + m * m * c * c * c - 3 * m * a * b * c;
}

PowerElement PowerElement::adjugate() const {
  const Rational m = Rational(Integer(m_));
  const auto& [a, b, c] = c_;
  return PowerElement(m_, a * a - m * b * c, m * c * c - a * b, b * b - a * c);
}

PowerElement PowerElement::inverse() const {
  if (is_zero()) throw ZeroElement("PowerElement::inverse");
  PowerElement adj = adjugate();
  adj *= 1 / norm();
  return adj;
}

Interval PowerElement::enclose(const Interval& alpha) const {
  if (is_rational()) return Interval::point(c_[0]);
  return c_[0] + (c_[1] * alpha + c_[2] * square(alpha));
}

namespace {

int sign_of(const Integer& x) { return sgn(x); }

}  // namespace

int exact_sign(const Integer& n0, const Integer& n1, const Integer& n2, std::int64_t m) {
  if (n1 == 0 && n2 == 0) return sign_of(n0);
  const std::size_t bits = std::max({mpz_sizeinbase(n0.get_mpz_t(), 2), mpz_sizeinbase(n1.get_mpz_t(), 2),
                                     mpz_sizeinbase(n2.get_mpz_t(), 2)});
  std::size_t mbits = 0;
  for (std::int64_t t = m; t > 0; t >>= 1) ++mbits;
  if (3 * bits + 2 * mbits + 4 < 126) {
    using wide = __int128;
    const wide a = n0.get_si();
    const wide b = n1.get_si();
    const wide c = n2.get_si();
    const wide mm = m;
    const wide norm = a * a * a + mm * b * b * b + mm * mm * c * c * c - 3 * mm * a * b * c;
    return norm > 0 ? 1 : (norm < 0 ? -1 : 0);
  }
  const Integer M = m;
  const Integer norm = n0 * n0 * n0 + M * n1 * n1 * n1 + M * M * n2 * n2 * n2 - 3 * M * n0 * n1 * n2;
  return sign_of(norm);
}

int exact_sign(const PowerElement& x) {
  if (x.is_rational()) return sgn(x[0]);
  Integer den = lcm(lcm(x[0].get_den(), x[1].get_den()), x[2].get_den());
  const Rational d(den);
  auto scaled = [&](std::size_t i) {
    Rational v = x[i] * d;
    return Integer(v.get_num());
  };
  return exact_sign(scaled(0), scaled(1), scaled(2), x.m());
}

int exact_sign(const Surd& x) {
  const int su = exact_sign(x.u);
  if (!x.has_root()) return su;
  const int sw = exact_sign(x.w);
  if (sw < 0) throw std::domain_error("surd with negative radicand");
  const int sv = exact_sign(x.v);
  if (su == 0) return sv;
  if (su == sv) return su;
  // opposite signs: compare u^2 with v^2 w
  return su * exact_sign(x.u * x.u - x.v * x.v * x.w);
}

Interval enclose(const Surd& x, const Interval& alpha, unsigned bits) {
  Interval u = x.u.enclose(alpha);
  if (!x.has_root()) return u;
  Interval w = x.w.enclose(alpha);
  return u + x.v.enclose(alpha) * sqrt(w, bits);
}

}  // namespace purecubic
