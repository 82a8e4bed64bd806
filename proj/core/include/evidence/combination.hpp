#pragma once

#include <span>
#include <vector>

#include "evidence/mass_function.hpp"

namespace evidence {

/// Conflict at or above 1 - kTotalConflictEpsilon means the normalizer has
/// vanished and combination is undefined.
inline constexpr double kTotalConflictEpsilon = 1e-12;

/// Normalized masses below this are dropped from combination results.
inline constexpr double kPruneThreshold = 1e-15;

struct CombinationOutcome {
  MassFunction result;
  double conflict;  // mass that landed on the empty set before normalization
};

/// Dempster's rule: products of focal masses accumulate on set intersections,
/// the empty-set share is the conflict K, and the rest is scaled by 1/(1-K).
/// Cost is proportional to the product of the two focal counts.
///
/// Throws Error{FrameMismatch} or Error{TotalConflict}.
CombinationOutcome combine(const MassFunction& a, const MassFunction& b);

struct FoldOutcome {
  MassFunction result;
  std::vector<double> conflicts;  // one per fold step, size() == inputs - 1
};

/// Left fold of `masses` with combine(). A TotalConflict error carries the
/// index of the failing step (0 = combining masses[0] with masses[1]).
/// Throws Error{EmptyList} for an empty input.
FoldOutcome combine_all(std::span<const MassFunction> masses);

}  // namespace evidence
