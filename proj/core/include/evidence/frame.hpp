#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evidence {

/// Frame of discernment: an ordered set of 1..64 mutually exclusive
/// hypotheses. Bit i of every FocalSet over this frame refers to label(i).
///
/// Frames are immutable and cheap to copy (the label table is shared).
class Frame {
 public:
  static constexpr std::size_t kMaxSize = 64;

  /// Throws Error{EmptyFrame, FrameTooLarge, EmptyLabel, DuplicateLabel}.
  explicit Frame(std::vector<std::string> labels);

  std::size_t size() const noexcept { return impl_->labels.size(); }
  const std::string& label(std::size_t index) const { return impl_->labels.at(index); }
  std::span<const std::string> labels() const noexcept { return impl_->labels; }
  std::optional<std::size_t> index_of(std::string_view label) const;

  /// Word with the low size() bits set.
  std::uint64_t full_bits() const noexcept;

  friend bool operator==(const Frame& a, const Frame& b) noexcept;

 private:
  struct Impl {
    std::vector<std::string> labels;
  };
  std::shared_ptr<const Impl> impl_;
};

}  // namespace evidence
