#include "evidence/focal_set.hpp"

#include "evidence/error.hpp"

namespace evidence {
namespace {

std::uint64_t low_mask(std::size_t n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

void require_same_frame(const FocalSet& a, const FocalSet& b) {
  if (a.frame_size() != b.frame_size()) {
    throw Error(Errc::FrameMismatch, "focal sets belong to frames of different size");
  }
}

}  // namespace

FocalSet::FocalSet(std::uint64_t bits, std::size_t frame_size)
    : bits_(bits), frame_size_(frame_size) {
  if (frame_size > Frame::kMaxSize) {
    throw Error(Errc::InvalidFocalSet, "frame size above 64");
  }
  if ((bits & ~low_mask(frame_size)) != 0) {
    throw Error(Errc::InvalidFocalSet, "focal set has bits outside its frame");
  }
}

FocalSet FocalSet::full(std::size_t frame_size) {
  return FocalSet(low_mask(frame_size), frame_size);
}

FocalSet FocalSet::singleton(std::size_t index, std::size_t frame_size) {
  if (index >= frame_size) throw Error(Errc::InvalidFocalSet, "singleton index outside frame");
  return FocalSet(std::uint64_t{1} << index, frame_size);
}

bool FocalSet::is_full() const noexcept { return bits_ == low_mask(frame_size_); }

FocalSet FocalSet::operator&(const FocalSet& other) const {
  require_same_frame(*this, other);
  return FocalSet(bits_ & other.bits_, frame_size_, Unchecked{});
}

FocalSet FocalSet::operator|(const FocalSet& other) const {
  require_same_frame(*this, other);
  return FocalSet(bits_ | other.bits_, frame_size_, Unchecked{});
}

FocalSet FocalSet::complement() const {
  return FocalSet(~bits_ & low_mask(frame_size_), frame_size_, Unchecked{});
}

FocalSet focal_from_labels(const Frame& frame, std::span<const std::string> labels) {
  std::uint64_t bits = 0;
  for (const auto& label : labels) {
    auto index = frame.index_of(label);
    if (!index) throw Error(Errc::UnknownLabel, "unknown label: " + label);
    bits |= std::uint64_t{1} << *index;
  }
  return FocalSet(bits, frame.size());
}

FocalSet focal_from_labels(const Frame& frame, std::initializer_list<std::string_view> labels) {
  std::vector<std::string> owned(labels.begin(), labels.end());
  return focal_from_labels(frame, owned);
}

std::string set_key(const Frame& frame, const FocalSet& set) {
  std::string out;
  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!set.contains(i)) continue;
    if (!out.empty()) out += ',';
    out += frame.label(i);
  }
  return out;
}

std::string set_display(const Frame& frame, const FocalSet& set) {
  if (set.is_empty()) return "∅";
  if (set.is_full()) return "Θ";
  return "{" + set_key(frame, set) + "}";
}

}  // namespace evidence
