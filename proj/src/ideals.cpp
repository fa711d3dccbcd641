#include "purecubic/ideals.hpp"

#include <algorithm>

#include "purecubic/errors.hpp"

namespace purecubic {

namespace {

using Wide = __int128;

template <class T>
struct Constants {
  T k, k2, sk, eps, p, q, r, s, t;
};

Constants<Integer> exact_constants(const FieldContext& ctx) {
  return {Integer(ctx.k()), Integer(ctx.k()) * ctx.k(), Integer(ctx.sigma()) * ctx.k(), Integer(ctx.sign()),
          ctx.p(), ctx.q(), ctx.r(), ctx.s(), ctx.t()};
}

Wide narrow(const Integer& n) { return static_cast<Wide>(n.get_si()); }

Constants<Wide> wide_constants(const Constants<Integer>& K) {
  return {narrow(K.k), narrow(K.k2), narrow(K.sk), narrow(K.eps), narrow(K.p),
          narrow(K.q), narrow(K.r), narrow(K.s), narrow(K.t)};
}

// Every product in the sixteen conditions stays below 2^120 when the constants
// are below 2^24 and the sextuple entries below 2^16.
bool fits_wide(const Constants<Integer>& K, const Integer& a) {
  const Integer limit = Integer(1) << 24;
  for (const Integer* v : {&K.k2, &K.sk, &K.p, &K.q, &K.r, &K.s, &K.t})
    if (abs(*v) >= limit) return false;
  return a < (Integer(1) << 16);
}

bool divides(Wide d, Wide n) { return n % d == 0; }
bool divides(const Integer& d, const Integer& n) { return purecubic::divides(d, n); }

template <class T>
int failing_condition(const T& a, const T& b, const T& c, const T& d, const T& e, const T& f,
                      const Constants<T>& K) {
  const T cf = c * f;
  const T acf = a * cf;
  const T be_cd = b * e - c * d;

  // modulo c
  if (!divides(c, a)) return 0;
  if (!divides(c, b)) return 1;
  // modulo f
  if (!divides(f, a)) return 2;
  if (!divides(f, T(K.sk * c))) return 3;
  if (!divides(f, T(K.sk * e))) return 4;
  if (!divides(f, T(b + K.eps * K.k2 * c))) return 5;
  if (!divides(f, T(d + K.eps * K.k2 * e))) return 6;
  // modulo c f
  if (!divides(cf, T(a * e))) return 7;
  if (!divides(cf, be_cd)) return 8;
  if (!divides(cf, T(b * e + K.eps * K.k2 * c * e))) return 9;
  if (!divides(cf, T(d * f + K.q * f * f - K.sk * e * e - K.eps * 2 * K.k2 * e * f))) return 10;
  if (!divides(cf, T(K.q * e * f + K.s * f * f - d * e - K.t * e * f - K.eps * K.k2 * e * e))) return 11;
  // modulo a c f
  if (!divides(acf, T((K.k2 * c * c + b * b) * f - K.eps * K.k2 * b * c * f - K.sk * c * be_cd))) return 12;
  if (!divides(acf, T((K.p * c - K.q * b) * cf + (b + K.eps * K.k2 * c) * be_cd))) return 13;
  if (!divides(acf, T((K.p * cf - K.k2 * c * e - b * d - K.q * b * f) * f +
                      K.eps * K.k2 * f * (2 * b * e - c * d) + K.sk * e * be_cd)))
    return 14;
  if (!divides(acf, T((K.p * c * e - K.r * K.k2 * cf - K.q * b * e - K.s * b * f) * f +
                      (d + K.t * f + K.eps * K.k2 * e) * be_cd)))
    return 15;
  return -1;
}

int failing_condition(const IdealForm& g, const Constants<Integer>& K) {
  return failing_condition<Integer>(g.a, g.b, g.c, g.d, g.e, g.f, K);
}

Wide wide_gcd(Wide x, Wide y) {
  while (y != 0) {
    const Wide t = x % y;
    x = y;
    y = t;
  }
  return x < 0 ? -x : x;
}

std::vector<Wide> divisors_of(Wide n) {
  std::vector<Wide> out;
  for (Wide d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// The pruned search, generic over the integer type.
template <class T, class Emit>
void search_primitive(const T& a, const Constants<T>& K, const std::vector<T>& c_values,
                      const std::vector<T>& f_values, Emit&& emit) {
  for (const T& c : c_values) {
    for (const T& f : f_values) {
      if (!divides(f, T(K.sk * c))) continue;
      const T cf = c * f;
      for (T b = 0; b < a; b += c) {
        if (!divides(f, T(b + K.eps * K.k2 * c))) continue;
        for (T e = 0; e < c; ++e) {
          if (!divides(f, T(K.sk * e)) || !divides(cf, T(a * e)) ||
              !divides(cf, T(b * e + K.eps * K.k2 * c * e)))
            continue;
          for (T d = 0; d < a; ++d) {
            if (!divides(f, T(d + K.eps * K.k2 * e)) || !divides(cf, T(b * e - c * d))) continue;
            if (failing_condition<T>(a, b, c, d, e, f, K) < 0) emit(b, c, d, e, f);
          }
        }
      }
    }
  }
}

Vector3 apply(const Matrix3& m, const Vector3& v) {
  Vector3 out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
  return out;
}

std::vector<Integer> divisors_of(const Integer& n) {
  std::vector<Integer> out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (!purecubic::divides(d, n)) continue;
    out.push_back(d);
    if (d * d != n) out.push_back(n / d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

int first_failing_ideal_condition(const IdealForm& form, const FieldContext& ctx) {
  return failing_condition(form, exact_constants(ctx));
}

bool is_ideal(const IdealForm& form, const FieldContext& ctx) {
  return first_failing_ideal_condition(form, ctx) < 0;
}

bool is_ideal_by_closure(const IdealForm& form, const FieldContext& ctx) {
  for (const Vector3& generator : form.basis()) {
    if (!contains(form, apply(ctx.P1(), generator))) return false;
    if (!contains(form, apply(ctx.P2(), generator))) return false;
  }
  return true;
}

std::vector<IdealForm> enumerate_primitive_ideals(const FieldContext& ctx, const Integer& length) {
  std::vector<IdealForm> out;
  if (length < 1) return out;
  const Constants<Integer> K = exact_constants(ctx);
  const Integer& a = length;
  // c | a, f | a and, for primitive ideals, f | sigma*k
  if (fits_wide(K, a)) {
    const Constants<Wide> W = wide_constants(K);
    const Wide wa = narrow(a);
    search_primitive<Wide>(wa, W, divisors_of(wa), divisors_of(wide_gcd(wa, W.sk)),
                           [&](Wide b, Wide c, Wide d, Wide e, Wide f) {
                             if (wide_gcd(wide_gcd(wide_gcd(wa, b), wide_gcd(c, d)), wide_gcd(e, f)) != 1) return;
                             auto big = [](Wide v) { return Integer(static_cast<long>(v)); };
                             out.push_back(IdealForm{a, big(b), big(c), big(d), big(e), big(f)});
                           });
  } else {
    search_primitive<Integer>(a, K, divisors_of(a), divisors_of(gcd(a, K.sk)),
                              [&](const Integer& b, const Integer& c, const Integer& d, const Integer& e,
                                  const Integer& f) {
                                IdealForm g{a, b, c, d, e, f};
                                if (is_primitive(g)) out.push_back(g);
                              });
  }
  std::sort(out.begin(), out.end(), listing_order);
  return out;
}

std::vector<IdealForm> enumerate_primitive_ideals_unpruned(const FieldContext& ctx,
                                                           const Integer& length) {
  std::vector<IdealForm> out;
  for_each_canonical_form(length, length, length, [&](const IdealForm& g) {
    if (is_primitive(g) && is_ideal_by_closure(g, ctx)) out.push_back(g);
  });
  std::sort(out.begin(), out.end(), listing_order);
  return out;
}

void for_each_canonical_form(const Integer& a, const Integer& max_c, const Integer& max_f,
                             const std::function<void(const IdealForm&)>& visit) {
  for (Integer c = 1; c <= max_c; ++c)
    for (Integer f = 1; f <= max_f; ++f)
      for (Integer b = 0; b < a; ++b)
        for (Integer d = 0; d < a; ++d)
          for (Integer e = 0; e < c; ++e) visit(IdealForm{a, b, c, d, e, f});
}

IdealForm principal_ideal(const FieldContext& ctx, const Vector3& g) {
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) throw ZeroElement("principal_ideal");
  // g*1, g*alpha, g*theta are the columns of x I + y P1 + z P2
  std::array<Vector3, 3> products;
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      products[j][i] = g[1] * ctx.P1()[i][j] + g[2] * ctx.P2()[i][j] + (i == j ? g[0] : Integer(0));
    }
  }
  return canonicalize(products);
}

}  // namespace purecubic
