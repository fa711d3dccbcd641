#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>

#include "purecubic/certified_real.hpp"
#include "purecubic/errors.hpp"
#include "purecubic/integer.hpp"

namespace purecubic {

enum class RejectionKind { PerfectCube, NotCubeFree, RedundantGenerator };

/// Why an integer does not name a field in the canonical m = h k^2, h > k form.
/// `equivalent` is the m' that generates the same field (0 for PerfectCube).
struct Rejection {
  RejectionKind kind;
  std::int64_t m;
  std::int64_t equivalent;

  /// The diagnostic line printed by the command-line tool.
  std::string message() const;
};

struct Factorization {
  std::int64_t h;
  std::int64_t k;
};

std::variant<Factorization, Rejection> validate_and_factor(std::int64_t m);

class InvalidModulus : public Error {
 public:
  explicit InvalidModulus(Rejection rejection)
      : Error(rejection.message()), rejection_(rejection) {}
  const Rejection& rejection() const { return rejection_; }

 private:
  Rejection rejection_;
};

/// The five constants appearing in the multiplication table of {1, alpha, theta},
/// before division by sigma or sigma^2.
struct PqrstNumerators {
  std::array<Integer, 5> numerators;
  std::array<Integer, 5> divisors;
};

/// Per-field constants for K = Q(m^(1/3)), m = h k^2.
///
/// The integral basis is {1, alpha, theta} with
/// theta = (k + sign*k*alpha + alpha_hat) / sigma and alpha_hat = alpha^2 / k.
/// Immutable once built; the certified reals share refinement state across copies.
class FieldContext {
 public:
  static FieldContext build(std::int64_t m);

  std::int64_t m() const { return m_; }
  std::int64_t h() const { return h_; }
  std::int64_t k() const { return k_; }
  /// h^2 k, the cube of alpha_hat.
  std::int64_t m_hat() const { return h_ * h_ * k_; }
  int sigma() const { return sigma_; }
  /// +1 or -1; -1 only when m = -1 mod 9.
  int sign() const { return sign_; }

  const Integer& p() const { return p_; }
  const Integer& q() const { return q_; }
  const Integer& r() const { return r_; }
  const Integer& s() const { return s_; }
  const Integer& t() const { return t_; }

  /// Multiplication by alpha (P1) and theta (P2); column j is the image of basis vector j.
  const Matrix3& P1() const { return P1_; }
  const Matrix3& P2() const { return P2_; }

  CertifiedReal& alpha() const { return alpha_; }
  CertifiedReal& alpha_hat() const { return alpha_hat_; }
  Interval alpha_at(unsigned bits) const;
  Interval alpha_hat_at(unsigned bits) const;

  /// Enclosures of alpha and alpha_hat of width <= accuracy.
  std::pair<Interval, Interval> refine_alpha(const Rational& accuracy) const;

  PqrstNumerators pqrst_numerators() const;

 private:
  FieldContext() = default;

  std::int64_t m_ = 0;
  std::int64_t h_ = 0;
  std::int64_t k_ = 0;
  int sigma_ = 1;
  int sign_ = 1;
  Integer p_, q_, r_, s_, t_;
  Matrix3 P1_{}, P2_{};
  mutable CertifiedReal alpha_;
  mutable CertifiedReal alpha_hat_;
};

/// Throws InvalidModulus when validate_and_factor rejects m.
FieldContext build_context(std::int64_t m);

PqrstNumerators pqrst_numerators(std::int64_t h, std::int64_t k, int sigma, int sign);

Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 identity_matrix();
/// Coefficients (c0, c1, c2) of det(x I - A) = x^3 + c2 x^2 + c1 x + c0.
std::array<Integer, 3> characteristic_polynomial(const Matrix3& a);

}  // namespace purecubic
