#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "evidence/focal_set.hpp"
#include "evidence/frame.hpp"

namespace evidence {

/// Absolute tolerance on the total mass of a valid mass function.
inline constexpr double kMassSumTolerance = 1e-9;

struct MassViolation {
  enum class Kind { EmptySetMass, NonPositiveMass, SumNotOne, OutsideFrame };
  Kind kind;
  std::uint64_t bits = 0;  // offending focal set, when relevant
  double value = 0.0;      // offending mass, or the observed total for SumNotOne
  std::string message;
};

using MassEntry = std::pair<FocalSet, double>;

/// Checks the basic-probability-assignment invariants on raw data: no mass on
/// the empty set, only strictly positive masses, total 1 within 1e-9.
/// Repeated keys are summed before the check.
std::vector<MassViolation> validate(const Frame& frame, std::span<const MassEntry> entries);

/// Basic probability assignment over a frame, stored sparsely by focal set.
/// Always satisfies the invariants checked by validate().
class MassFunction {
 public:
  /// Throws Error{InvalidMass} listing every violation.
  static MassFunction create(Frame frame, std::span<const MassEntry> entries);

  /// All mass on the full frame.
  static MassFunction vacuous(Frame frame);

  /// Mass `weight` on `focus` and 1 - weight on the full frame.
  /// Throws Error{EmptyFocus} for the empty focus, Error{InvalidWeight} for
  /// weights outside [0, 1].
  static MassFunction simple_support(Frame frame, const FocalSet& focus, double weight);

  const Frame& frame() const noexcept { return frame_; }
  std::size_t focal_count() const noexcept { return masses_.size(); }

  /// 0 for sets that are not focal.
  double mass(const FocalSet& set) const;
  double mass(std::uint64_t bits) const;

  /// Focal sets keyed by raw bit word.
  const std::map<std::uint64_t, double>& by_code() const noexcept { return masses_; }

  /// Focal elements in trace order (cardinality, then bit word).
  std::vector<MassEntry> focal_elements() const;

  double total() const noexcept;

  friend bool operator==(const MassFunction& a, const MassFunction& b) {
    return a.frame_ == b.frame_ && a.masses_ == b.masses_;
  }

 private:
  friend class MassBuilder;
  MassFunction(Frame frame, std::map<std::uint64_t, double> masses)
      : frame_(std::move(frame)), masses_(std::move(masses)) {}

  Frame frame_;
  std::map<std::uint64_t, double> masses_;
};

std::vector<MassViolation> validate(const MassFunction& m);

/// Internal constructor access for operations that produce masses which hold
/// the invariants by construction (combination, normalization).
class MassBuilder {
 public:
  static MassFunction adopt(Frame frame, std::map<std::uint64_t, double> masses) {
    return MassFunction(std::move(frame), std::move(masses));
  }
};

}  // namespace evidence
