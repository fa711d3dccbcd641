#pragma once

#include <string>
#include <vector>

#include "purecubic/field_context.hpp"
#include "purecubic/ideal_form.hpp"
#include "purecubic/power_element.hpp"
#include "purecubic/real_embedding.hpp"

namespace purecubic {

/// One term of the minimal sequence of alpha: the lattice point P_n with
/// a_n = Val(P_n), b_n = Sh(P_n) and N_n = N(P_n).
struct SequenceState {
  long n = 0;
  Vector3 point;
  PowerElement value;   // a_n, exact in Q(alpha)
  PowerElement shadow;  // b_n, exact in Q(alpha)
  Integer norm;         // N_n
  /// Set when two distinct candidates tie on Val (never expected).
  std::vector<std::string> diagnostics;

  FieldElement element() const { return FieldElement::from_integers(point); }
  CertifiedReal a(const FieldContext& ctx) const { return val(ctx, element()); }
  CertifiedReal b(const FieldContext& ctx) const { return shadow_real(ctx, element()); }
};

enum class SearchMode {
  /// Every lattice point of the candidate region is examined.
  Exhaustive,
  /// Only the four points around the region's axis at each height z.
  FourCorner,
};

struct SequenceOptions {
  SearchMode mode = SearchMode::Exhaustive;
  long iteration_cap = 1'000'000;
};

/// P_0 = (1, 0, 0) with a_0 = b_0 = N_0 = 1.
SequenceState initial_state(const FieldContext& ctx);

/// The lattice point of least Val among nonzero points with Sh < b_n (and Val > 0).
SequenceState next_minimal(const FieldContext& ctx, const SequenceState& state,
                           SearchMode mode = SearchMode::Exhaustive);

/// P_0 .. P_{count-1}.
std::vector<SequenceState> minimal_sequence(const FieldContext& ctx, long count,
                                            SequenceOptions options = {});

/// N_0 .. N_{count-1}.
std::vector<Integer> norm_sequence(const FieldContext& ctx, long count, SequenceOptions options = {});

/// Minimal sequence terms whose z-coordinate is below max_z; the search for
/// each term extends past max_z until the term is known to lie beyond it.
std::vector<SequenceState> minimal_sequence_below(const FieldContext& ctx, const Integer& max_z,
                                                  SequenceOptions options = {});

struct SequenceResult {
  long period = 0;
  FieldElement fundamental_unit;
  /// beta_0 .. beta_{period-1}: the minimal elements in [1, epsilon0).
  std::vector<FieldElement> minimal_elements;
  /// N_0 .. N_{period-1}.
  std::vector<Integer> norm_period;
  /// P_0 .. P_{2*period}, used for the periodicity check.
  std::vector<SequenceState> states;
};

/// Runs the minimal sequence to the first n > 0 with N_n = 1, then period more
/// steps, verifying beta_{i+period} = epsilon0 * beta_i exactly.
/// Throws IterationCapExceeded when the cap is reached first.
SequenceResult detect_period(const FieldContext& ctx, SequenceOptions options = {});

/// F(gamma) = (L / gamma), L the least positive integer making it integral.
/// Throws NotMinimalElement if gamma is not among result.minimal_elements.
IdealForm map_F(const FieldContext& ctx, const SequenceResult& result, const FieldElement& gamma);

/// The least integer L with L * gamma^{-1} * O_K integral.
Integer denominator_length(const FieldContext& ctx, const FieldElement& gamma);

/// G(I) = epsilon0^j * Len(I) / generator, normalized into [1, epsilon0).
/// Throws GeneratorMismatch or NotReduced.
FieldElement map_G(const FieldContext& ctx, const SequenceResult& result, const IdealForm& ideal,
                   const FieldElement& generator);

}  // namespace purecubic
