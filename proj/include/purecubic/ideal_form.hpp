#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "purecubic/integer.hpp"

namespace purecubic {

/// Canonical form [a, b + c*alpha, d + e*alpha + f*theta] of a full-rank
/// submodule of O_K = [1, alpha, theta]:
/// a, c, f > 0, 0 <= b < a, 0 <= d < a, 0 <= e < c.
struct IdealForm {
  Integer a, b, c, d, e, f;

  /// The index a*c*f of the submodule in O_K.
  Integer norm() const { return a * c * f; }
  /// The smallest positive rational integer in the submodule.
  const Integer& length() const { return a; }

  /// Rows (a,0,0), (b,c,0), (d,e,f) of the lower-triangular basis.
  std::array<Vector3, 3> basis() const;

  /// "( a b c d e f )"
  std::string to_text() const;

  friend bool operator==(const IdealForm&, const IdealForm&) = default;
};

/// The full ring O_K, (1 0 1 0 0 1).
IdealForm unit_ideal();

bool is_canonical(const IdealForm& form);

/// Canonical form of the lattice spanned by any finite set of integer vectors.
/// Throws RankDeficient if the span has rank < 3.
IdealForm canonicalize(std::span<const Vector3> generators);

inline Integer norm(const IdealForm& form) { return form.norm(); }
inline Integer length(const IdealForm& form) { return form.a; }
/// gcd(a, b, c, d, e, f) == 1
bool is_primitive(const IdealForm& form);

/// Membership of an integer vector by back-substitution against the basis.
bool contains(const IdealForm& form, const Vector3& v);
/// Coefficients t with v = t1*(a,0,0) + t2*(b,c,0) + t3*(d,e,f), if integral.
std::optional<Vector3> coordinates_in(const IdealForm& form, const Vector3& v);

/// Ordering used for deterministic listings: (a, c, f, b, d, e).
bool listing_order(const IdealForm& lhs, const IdealForm& rhs);

/// Integers are JSON numbers when they fit in a long, decimal strings otherwise.
nlohmann::json integer_json(const Integer& n);
Integer json_integer(const nlohmann::json& j);

void to_json(nlohmann::json& j, const IdealForm& form);
void from_json(const nlohmann::json& j, IdealForm& form);

}  // namespace purecubic
