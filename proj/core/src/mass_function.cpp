#include "evidence/mass_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "evidence/error.hpp"

namespace evidence {
namespace {

std::string format_number(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", value);
  return buf;
}

std::vector<MassViolation> check(const Frame& frame, const std::map<std::uint64_t, double>& masses,
                                 std::vector<MassViolation> found) {
  double total = 0.0;
  for (const auto& [bits, value] : masses) {
    total += value;
    const FocalSet set(bits, frame.size());
    if (bits == 0) {
      found.push_back({MassViolation::Kind::EmptySetMass, bits, value,
                       "mass on empty set (" + format_number(value) + ")"});
    }
    if (!(value > 0.0)) {
      found.push_back({MassViolation::Kind::NonPositiveMass, bits, value,
                       "non-positive mass " + format_number(value) + " on " +
                           set_display(frame, set)});
    }
  }
  if (!(std::abs(total - 1.0) <= kMassSumTolerance)) {
    found.push_back({MassViolation::Kind::SumNotOne, 0, total, "sum = " + format_number(total)});
  }
  return found;
}

}  // namespace

std::vector<MassViolation> validate(const Frame& frame, std::span<const MassEntry> entries) {
  std::vector<MassViolation> found;
  std::map<std::uint64_t, double> merged;
  for (const auto& [set, value] : entries) {
    if (set.frame_size() != frame.size()) {
      found.push_back({MassViolation::Kind::OutsideFrame, set.bits(), value,
                       "focal set does not belong to the frame"});
      continue;
    }
    merged[set.bits()] += value;
  }
  return check(frame, merged, std::move(found));
}

std::vector<MassViolation> validate(const MassFunction& m) {
  return check(m.frame(), m.by_code(), {});
}

MassFunction MassFunction::create(Frame frame, std::span<const MassEntry> entries) {
  auto violations = validate(frame, entries);
  if (!violations.empty()) {
    std::string message = "invalid mass function:";
    for (const auto& v : violations) message += " " + v.message + ";";
    message.pop_back();
    throw Error(Errc::InvalidMass, message);
  }
  std::map<std::uint64_t, double> masses;
  for (const auto& [set, value] : entries) masses[set.bits()] += value;
  return MassFunction(std::move(frame), std::move(masses));
}

MassFunction MassFunction::vacuous(Frame frame) {
  const auto full = frame.full_bits();
  return MassFunction(std::move(frame), {{full, 1.0}});
}

MassFunction MassFunction::simple_support(Frame frame, const FocalSet& focus, double weight) {
  if (focus.frame_size() != frame.size()) {
    throw Error(Errc::FrameMismatch, "focus does not belong to the frame");
  }
  if (focus.is_empty()) throw Error(Errc::EmptyFocus, "simple support on the empty set");
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw Error(Errc::InvalidWeight, "support weight " + format_number(weight) + " outside [0, 1]");
  }
  const auto full = frame.full_bits();
  if (weight == 0.0 || focus.bits() == full) return vacuous(std::move(frame));
  std::map<std::uint64_t, double> masses{{focus.bits(), weight}};
  if (weight < 1.0) masses.emplace(full, 1.0 - weight);
  return MassFunction(std::move(frame), std::move(masses));
}

double MassFunction::mass(const FocalSet& set) const { return mass(set.bits()); }

double MassFunction::mass(std::uint64_t bits) const {
  auto it = masses_.find(bits);
  return it == masses_.end() ? 0.0 : it->second;
}

std::vector<MassEntry> MassFunction::focal_elements() const {
  std::vector<MassEntry> out;
  out.reserve(masses_.size());
  for (const auto& [bits, value] : masses_) out.emplace_back(FocalSet(bits, frame_.size()), value);
  std::sort(out.begin(), out.end(),
            [](const MassEntry& a, const MassEntry& b) { return display_less(a.first, b.first); });
  return out;
}

double MassFunction::total() const noexcept {
  double sum = 0.0;
  for (const auto& [bits, value] : masses_) sum += value;
  return sum;
}

}  // namespace evidence
