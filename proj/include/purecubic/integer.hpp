#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <string>

namespace purecubic {

using Integer = mpz_class;
using Rational = mpq_class;

/// Integer coordinate triple with respect to the integral basis {1, alpha, theta}.
using Vector3 = std::array<Integer, 3>;
using Matrix3 = std::array<std::array<Integer, 3>, 3>;

Integer floor_div(const Integer& num, const Integer& den);
/// Least nonnegative residue of n modulo a positive modulus.
Integer mod_floor(const Integer& n, const Integer& modulus);
Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Largest r >= 0 with r^3 <= n; n must be nonnegative.
Integer cbrt_floor(const Integer& n);
/// Largest r >= 0 with r^2 <= n; n must be nonnegative.
Integer sqrt_floor(const Integer& n);

/// true iff b divides a (b != 0).
bool divides(const Integer& b, const Integer& a);

bool is_squarefree(std::int64_t n);

std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Exact 2^e as a rational (e may be negative).
Rational pow2(long e);

}  // namespace purecubic
