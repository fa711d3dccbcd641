#include "purecubic/ideal_form.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

#include "purecubic/errors.hpp"

namespace purecubic {

std::array<Vector3, 3> IdealForm::basis() const {
  return {Vector3{a, 0, 0}, Vector3{b, c, 0}, Vector3{d, e, f}};
}

std::string IdealForm::to_text() const {
  return "( " + a.get_str() + " " + b.get_str() + " " + c.get_str() + " " + d.get_str() + " " +
         e.get_str() + " " + f.get_str() + " )";
}

IdealForm unit_ideal() { return IdealForm{1, 0, 1, 0, 0, 1}; }

bool is_canonical(const IdealForm& g) {
  return g.a > 0 && g.c > 0 && g.f > 0 && g.b >= 0 && g.b < g.a && g.d >= 0 && g.d < g.a &&
         g.e >= 0 && g.e < g.c;
}

namespace {

void subtract_multiple(Vector3& target, const Vector3& row, const Integer& q) {
  for (std::size_t i = 0; i < 3; ++i) target[i] -= q * row[i];
}

bool is_null(const Vector3& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

// Euclidean elimination in one column: returns a row whose entry in `col`
// generates the gcd of that column, with every other row zeroed in `col`.
std::optional<Vector3> extract_pivot(std::vector<Vector3>& rows, std::size_t col) {
  while (true) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      if (!pivot || abs(rows[i][col]) < abs(rows[*pivot][col])) pivot = i;
    }
    if (!pivot) return std::nullopt;
    bool reduced = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == *pivot || rows[i][col] == 0) continue;
      const Integer q = floor_div(rows[i][col], rows[*pivot][col]);
      subtract_multiple(rows[i], rows[*pivot], q);
      if (rows[i][col] != 0) reduced = false;
    }
    if (reduced) {
      Vector3 row = rows[*pivot];
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(*pivot));
      if (row[col] < 0) {
        for (auto& x : row) x = -x;
      }
      std::erase_if(rows, is_null);
      return row;
    }
  }
}

}  // namespace

IdealForm canonicalize(std::span<const Vector3> generators) {
  std::vector<Vector3> rows;
  for (const auto& g : generators) {
    if (!is_null(g)) rows.push_back(g);
  }
  auto third = extract_pivot(rows, 2);
  if (!third) throw RankDeficient();
  auto second = extract_pivot(rows, 1);
  if (!second) throw RankDeficient();
  auto first = extract_pivot(rows, 0);
  if (!first) throw RankDeficient();

  Vector3 r1 = *first;
  Vector3 r2 = *second;
  Vector3 r3 = *third;
  // remainder normalization below each pivot
  subtract_multiple(r2, r1, floor_div(r2[0], r1[0]));
  subtract_multiple(r3, r2, floor_div(r3[1], r2[1]));
  subtract_multiple(r3, r1, floor_div(r3[0], r1[0]));
  return IdealForm{r1[0], r2[0], r2[1], r3[0], r3[1], r3[2]};
}

bool is_primitive(const IdealForm& g) {
  Integer x = gcd(gcd(gcd(g.a, g.b), gcd(g.c, g.d)), gcd(g.e, g.f));
  return x == 1;
}

std::optional<Vector3> coordinates_in(const IdealForm& g, const Vector3& v) {
  if (!divides(g.f, v[2])) return std::nullopt;
  const Integer t3 = v[2] / g.f;
  const Integer rest_y = v[1] - t3 * g.e;
  if (!divides(g.c, rest_y)) return std::nullopt;
  const Integer t2 = rest_y / g.c;
  const Integer rest_x = v[0] - t2 * g.b - t3 * g.d;
  if (!divides(g.a, rest_x)) return std::nullopt;
  return Vector3{rest_x / g.a, t2, t3};
}

bool contains(const IdealForm& g, const Vector3& v) { return coordinates_in(g, v).has_value(); }

bool listing_order(const IdealForm& l, const IdealForm& r) {
  return std::tie(l.a, l.c, l.f, l.b, l.d, l.e) < std::tie(r.a, r.c, r.f, r.b, r.d, r.e);
}

nlohmann::json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

Integer json_integer(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<long>());
}

void to_json(nlohmann::json& j, const IdealForm& g) {
  j = nlohmann::json{{"a", integer_json(g.a)}, {"b", integer_json(g.b)}, {"c", integer_json(g.c)},
                     {"d", integer_json(g.d)}, {"e", integer_json(g.e)}, {"f", integer_json(g.f)}};
}

void from_json(const nlohmann::json& j, IdealForm& g) {
  g.a = json_integer(j.at("a"));
  g.b = json_integer(j.at("b"));
  g.c = json_integer(j.at("c"));
  g.d = json_integer(j.at("d"));
  g.e = json_integer(j.at("e"));
  g.f = json_integer(j.at("f"));
}

}  // namespace purecubic
