#pragma once

#include <optional>
#include <vector>

#include "purecubic/field_context.hpp"
#include "purecubic/ideal_form.hpp"

namespace purecubic {

/// Volume 4*pi*sigma*L^3 / (3*sqrt(3)*alpha*alpha_hat) of the region
/// R_{L,L^2} = {|Val| < L, Sh < L^2} in (x, y, z) coordinates.
CertifiedReal region_volume(const FieldContext& ctx, const Integer& length);

/// floor(6*sqrt(3)*m / pi): no ideal longer than this is reduced.
Integer upper_bound_length(const FieldContext& ctx);
/// L > 6*sqrt(3)*m / pi, certified.
bool exceeds_upper_bound(const FieldContext& ctx, const Integer& length);
/// L < min(alpha, alpha_hat / sigma), certified: every primitive ideal of such a length is reduced.
bool below_lower_bound(const FieldContext& ctx, const Integer& length);

/// Reducedness by sweeping the (y, z) lines of the region and comparing the
/// nearest lattice abscissa with the region's edges. Requires a primitive ideal
/// (throws NotAnIdeal / NotPrimitive).
bool is_reduced(const IdealForm& form, const FieldContext& ctx);

/// A nonzero ideal element strictly inside R_{L,L^2}, found by scanning a box
/// around the region and testing both defining inequalities exactly.
std::optional<Vector3> find_interior_point(const IdealForm& form, const FieldContext& ctx);

/// Reducedness straight from the definition (no interior lattice point).
bool oracle_is_reduced(const IdealForm& form, const FieldContext& ctx);

/// false only when Minkowski's theorem already forces a nonzero interior point:
/// c < L*(9 + 2*sqrt(3)*pi) / (36*alpha), or c*f < pi*L^2 / (6*sqrt(3)*m).
bool minkowski_prune(const IdealForm& form, const FieldContext& ctx);

struct EnumerateReducedOptions {
  bool use_minkowski_prune = true;
};

/// All reduced ideals, ordered by length then listing order.
std::vector<IdealForm> enumerate_reduced(const FieldContext& ctx, EnumerateReducedOptions options = {});

}  // namespace purecubic
