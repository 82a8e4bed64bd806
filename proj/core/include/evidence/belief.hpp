#pragma once

#include <cstddef>
#include <vector>

#include "evidence/focal_set.hpp"
#include "evidence/mass_function.hpp"

namespace evidence {

struct BeliefInterval {
  double bel;
  double pl;
};

/// Total mass of focal sets contained in `set`.
double belief(const MassFunction& m, const FocalSet& set);

/// Total mass of focal sets that intersect `set`.
double plausibility(const MassFunction& m, const FocalSet& set);

/// [belief, plausibility]; bel <= pl always holds.
BeliefInterval belief_interval(const MassFunction& m, const FocalSet& set);

inline constexpr std::size_t kMaxDenseFrame = 20;

/// Belief of every subset, indexed by subset code (2^n entries). Masses are
/// scattered into a dense table and summed over the subset lattice in place
/// (n * 2^(n-1) additions). Throws Error{FrameTooLargeForDense} for n > 20.
std::vector<double> belief_all(const MassFunction& m);

}  // namespace evidence
