#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>

#include "evidence/frame.hpp"

namespace evidence {

/// Subset of a frame encoded as a characteristic bit word. No bit at or above
/// frame_size() is ever set.
class FocalSet {
 public:
  /// Throws Error{InvalidFocalSet} if `bits` has a bit at or above `frame_size`
  /// or `frame_size` exceeds 64.
  FocalSet(std::uint64_t bits, std::size_t frame_size);

  static FocalSet empty(std::size_t frame_size) { return FocalSet(0, frame_size); }
  static FocalSet full(std::size_t frame_size);
  static FocalSet singleton(std::size_t index, std::size_t frame_size);

  std::uint64_t bits() const noexcept { return bits_; }
  std::size_t frame_size() const noexcept { return frame_size_; }
  std::size_t count() const noexcept { return static_cast<std::size_t>(std::popcount(bits_)); }

  bool is_empty() const noexcept { return bits_ == 0; }
  bool is_full() const noexcept;
  bool contains(std::size_t index) const noexcept {
    return index < frame_size_ && ((bits_ >> index) & 1u) != 0;
  }
  bool is_subset_of(const FocalSet& other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  bool intersects(const FocalSet& other) const noexcept { return (bits_ & other.bits_) != 0; }

  FocalSet operator&(const FocalSet& other) const;
  FocalSet operator|(const FocalSet& other) const;
  FocalSet complement() const;

  friend bool operator==(const FocalSet&, const FocalSet&) = default;

 private:
  struct Unchecked {};
  FocalSet(std::uint64_t bits, std::size_t frame_size, Unchecked) noexcept
      : bits_(bits), frame_size_(frame_size) {}

  std::uint64_t bits_;
  std::size_t frame_size_;
};

/// Trace order: ascending cardinality, then ascending bit word.
inline bool display_less(std::uint64_t a, std::uint64_t b) noexcept {
  const int ca = std::popcount(a);
  const int cb = std::popcount(b);
  return ca != cb ? ca < cb : a < b;
}
inline bool display_less(const FocalSet& a, const FocalSet& b) noexcept {
  return display_less(a.bits(), b.bits());
}

/// Order and duplicates in `labels` are irrelevant. Throws Error{UnknownLabel}.
FocalSet focal_from_labels(const Frame& frame, std::span<const std::string> labels);
FocalSet focal_from_labels(const Frame& frame, std::initializer_list<std::string_view> labels);

/// Comma-joined member labels in frame order, e.g. "AT,B,DF". Empty set gives "".
std::string set_key(const Frame& frame, const FocalSet& set);

/// Human form: "{B}", "{AT,B,DF}", "Θ" for the full frame, "∅" for the empty set.
std::string set_display(const Frame& frame, const FocalSet& set);

}  // namespace evidence
