#pragma once

#include <functional>
#include <vector>

#include "purecubic/field_context.hpp"
#include "purecubic/ideal_form.hpp"
#include "purecubic/real_embedding.hpp"

namespace purecubic {

/// The sixteen divisibility conditions on a canonical form, grouped by modulus:
/// c (2), f (5), c*f (5) and a*c*f (4).
bool is_ideal(const IdealForm& form, const FieldContext& ctx);

/// Index (0-based, in the order above) of the first failing condition, or -1.
int first_failing_ideal_condition(const IdealForm& form, const FieldContext& ctx);

/// Closure test: the images of the basis under P1 and P2 lie in the lattice.
bool is_ideal_by_closure(const IdealForm& form, const FieldContext& ctx);

/// All primitive ideals of length L, in listing order.
std::vector<IdealForm> enumerate_primitive_ideals(const FieldContext& ctx, const Integer& length);

/// Same result via an unpruned scan (c, f in [1, L], no divisibility shortcuts),
/// each candidate decided by the closure test.
std::vector<IdealForm> enumerate_primitive_ideals_unpruned(const FieldContext& ctx,
                                                           const Integer& length);

/// Visits every canonical sextuple of length a with c <= max_c and f <= max_f.
void for_each_canonical_form(const Integer& a, const Integer& max_c, const Integer& max_f,
                             const std::function<void(const IdealForm&)>& visit);

/// Canonical form of g*O_K; throws ZeroElement for g == 0.
IdealForm principal_ideal(const FieldContext& ctx, const Vector3& g);

}  // namespace purecubic
