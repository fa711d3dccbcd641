#include "purecubic/field_context.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace purecubic {

namespace {

std::vector<std::pair<std::int64_t, int>> factor(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// h = product of primes with exponent 1, k = product of primes with exponent 2,
// for a cube-free n.
Factorization split_cube_free(std::int64_t n) {
  Factorization f{1, 1};
  for (auto [p, e] : factor(n)) {
    if (e == 1) f.h *= p;
    if (e == 2) f.k *= p;
  }
  return f;
}

}  // namespace

std::string Rejection::message() const {
  const std::string head = "m = " + std::to_string(m) + "  ";
  switch (kind) {
    case RejectionKind::PerfectCube:
      return head + "is a perfect cube";
    case RejectionKind::NotCubeFree:
      return head + "is not cube-free. See m = " + std::to_string(equivalent);
    case RejectionKind::RedundantGenerator:
      return head + "is redundant with m = " + std::to_string(equivalent);
  }
  return head;
}

std::variant<Factorization, Rejection> validate_and_factor(std::int64_t m) {
  if (m < 1) throw std::invalid_argument("m must be a positive integer");
  std::int64_t cube_part = 1;
  for (auto [p, e] : factor(m)) {
    for (int i = 0; i < e / 3; ++i) cube_part *= p;
  }
  const std::int64_t cube_free = m / (cube_part * cube_part * cube_part);
  if (cube_free == 1) return Rejection{RejectionKind::PerfectCube, m, 0};
  if (cube_part > 1) {
    Factorization f = split_cube_free(cube_free);
    std::int64_t equivalent = std::min(f.h * f.h * f.k, f.h * f.k * f.k);
    return Rejection{RejectionKind::NotCubeFree, m, equivalent};
  }
  Factorization f = split_cube_free(m);
  if (f.h < f.k) return Rejection{RejectionKind::RedundantGenerator, m, f.h * f.h * f.k};
  return f;
}

PqrstNumerators pqrst_numerators(std::int64_t h, std::int64_t k, int sigma, int sign) {
  const Integer H = h;
  const Integer K = k;
  const Integer S = sigma;
  const Integer K3 = K * K * K;
  PqrstNumerators out;
  out.numerators = {H * K - sign * K3, K - K3, K * K - 2 * sign * H + 1, H - sign * K3 * K,
                    K3 + 2 * K};
  out.divisors = {S, S, S * S, S * S, S};
  return out;
}

PqrstNumerators FieldContext::pqrst_numerators() const {
  return purecubic::pqrst_numerators(h_, k_, sigma_, sign_);
}

FieldContext FieldContext::build(std::int64_t m) {
  auto result = validate_and_factor(m);
  if (auto* rejection = std::get_if<Rejection>(&result)) throw InvalidModulus(*rejection);
  const auto [h, k] = std::get<Factorization>(result);

  FieldContext ctx;
  ctx.m_ = m;
  ctx.h_ = h;
  ctx.k_ = k;
  const std::int64_t residue = m % 9;
  ctx.sigma_ = (residue == 1 || residue == 8) ? 3 : 1;
  ctx.sign_ = (residue == 8) ? -1 : 1;

  const PqrstNumerators pn = ctx.pqrst_numerators();
  std::array<Integer, 5> values;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!divides(pn.divisors[i], pn.numerators[i])) {
      throw InternalError("constant " + std::string(1, "pqrst"[i]) + " is not an integer for m = " +
                          std::to_string(m));
    }
    values[i] = pn.numerators[i] / pn.divisors[i];
  }
  ctx.p_ = values[0];
  ctx.q_ = values[1];
  ctx.r_ = values[2];
  ctx.s_ = values[3];
  ctx.t_ = values[4];

  const Integer K2 = Integer(k) * k;
  const Integer eps = ctx.sign_;
  const Integer sk = Integer(ctx.sigma_) * k;
  ctx.P1_ = Matrix3{{{0, -K2, ctx.p_}, {1, -eps * K2, ctx.q_}, {0, sk, eps * K2}}};
  ctx.P2_ = Matrix3{{{0, ctx.p_, -K2 * ctx.r_}, {0, ctx.q_, ctx.s_}, {1, eps * K2, ctx.t_}}};

  const Integer m_int = m;
  const Integer m_hat = Integer(h) * h * k;
  ctx.alpha_ = CertifiedReal([m_int](unsigned bits) { return cbrt_enclosure(m_int, bits); });
  ctx.alpha_hat_ = CertifiedReal([m_hat](unsigned bits) { return cbrt_enclosure(m_hat, bits); });
  return ctx;
}

FieldContext build_context(std::int64_t m) { return FieldContext::build(m); }

Interval FieldContext::alpha_at(unsigned bits) const { return cbrt_enclosure(Integer(m_), bits); }

Interval FieldContext::alpha_hat_at(unsigned bits) const {
  return cbrt_enclosure(Integer(m_hat()), bits);
}

std::pair<Interval, Interval> FieldContext::refine_alpha(const Rational& accuracy) const {
  return {alpha_.refine_to(accuracy), alpha_hat_.refine_to(accuracy)};
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Integer sum = 0;
      for (std::size_t l = 0; l < 3; ++l) sum += a[i][l] * b[l][j];
      c[i][j] = sum;
    }
  return c;
}

Matrix3 identity_matrix() { return Matrix3{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}; }

std::array<Integer, 3> characteristic_polynomial(const Matrix3& a) {
  const Integer trace = a[0][0] + a[1][1] + a[2][2];
  const Integer minors = a[0][0] * a[1][1] - a[0][1] * a[1][0] + a[0][0] * a[2][2] -
                         a[0][2] * a[2][0] + a[1][1] * a[2][2] - a[1][2] * a[2][1];
  const Integer det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                      a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                      a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return {-det, minors, -trace};
}

}  // namespace purecubic
