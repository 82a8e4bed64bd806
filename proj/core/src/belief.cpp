#include "evidence/belief.hpp"

#include <algorithm>

#include "evidence/error.hpp"

namespace evidence {
namespace {

void require_member(const MassFunction& m, const FocalSet& set) {
  if (set.frame_size() != m.frame().size()) {
    throw Error(Errc::FrameMismatch, "set does not belong to the mass function's frame");
  }
}

}  // namespace

// Both sums walk the focal sets in the same order and every term of belief is
// also a term of plausibility, so rounding cannot invert bel <= pl.
BeliefInterval belief_interval(const MassFunction& m, const FocalSet& set) {
  require_member(m, set);
  if (set.is_empty()) return {0.0, 0.0};
  if (set.is_full()) return {1.0, 1.0};
  double bel = 0.0;
  double pl = 0.0;
  const std::uint64_t target = set.bits();
  for (const auto& [bits, value] : m.by_code()) {
    if ((bits & ~target) == 0) bel += value;
    if ((bits & target) != 0) pl += value;
  }
  return {std::min(bel, 1.0), std::min(pl, 1.0)};
}

double belief(const MassFunction& m, const FocalSet& set) { return belief_interval(m, set).bel; }

double plausibility(const MassFunction& m, const FocalSet& set) {
  return belief_interval(m, set).pl;
}

std::vector<double> belief_all(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  if (n > kMaxDenseFrame) {
    throw Error(Errc::FrameTooLargeForDense,
                "frame of size " + std::to_string(n) + " exceeds the dense limit of 20");
  }
  const std::size_t size = std::size_t{1} << n;
  std::vector<double> table(size, 0.0);
  for (const auto& [bits, value] : m.by_code()) table[bits] = value;

  // Subset-sum (zeta) transform. Once bits 0..i are done, table[A] holds the
  // mass of every B within A that agrees with A on the higher bits.
  for (std::size_t bit = 0; bit < n; ++bit) {
    const std::size_t stride = std::size_t{1} << bit;
    for (std::size_t code = 0; code < size; ++code) {
      if (code & stride) table[code] += table[code ^ stride];
    }
  }
  for (auto& value : table) value = std::min(value, 1.0);
  table[size - 1] = 1.0;
  return table;
}

}  // namespace evidence
