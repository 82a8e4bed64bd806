#include "evidence/frame.hpp"

#include <algorithm>
#include <unordered_set>

#include "evidence/error.hpp"

namespace evidence {

const char* to_string(Errc code) {
  switch (code) {
    case Errc::EmptyFrame: return "EmptyFrame";
    case Errc::FrameTooLarge: return "FrameTooLarge";
    case Errc::EmptyLabel: return "EmptyLabel";
    case Errc::DuplicateLabel: return "DuplicateLabel";
    case Errc::UnknownLabel: return "UnknownLabel";
    case Errc::InvalidFocalSet: return "InvalidFocalSet";
    case Errc::EmptyFocus: return "EmptyFocus";
    case Errc::InvalidWeight: return "InvalidWeight";
    case Errc::InvalidMass: return "InvalidMass";
    case Errc::FrameMismatch: return "FrameMismatch";
    case Errc::TotalConflict: return "TotalConflict";
    case Errc::EmptyList: return "EmptyList";
    case Errc::FrameTooLargeForDense: return "FrameTooLargeForDense";
    case Errc::UnknownCondition: return "UnknownCondition";
    case Errc::UnknownSymptom: return "UnknownSymptom";
    case Errc::DuplicateSymptom: return "DuplicateSymptom";
    case Errc::NoSymptoms: return "NoSymptoms";
  }
  return "Unknown";
}

Frame::Frame(std::vector<std::string> labels) {
  if (labels.empty()) throw Error(Errc::EmptyFrame, "frame has no labels");
  if (labels.size() > kMaxSize) {
    throw Error(Errc::FrameTooLarge,
                "frame has " + std::to_string(labels.size()) + " labels (max 64)");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels) {
    if (label.empty()) throw Error(Errc::EmptyLabel, "frame label is empty");
    if (!seen.insert(label).second) {
      throw Error(Errc::DuplicateLabel, "duplicate frame label: " + label);
    }
  }
  impl_ = std::make_shared<const Impl>(Impl{std::move(labels)});
}

std::optional<std::size_t> Frame::index_of(std::string_view label) const {
  const auto& labels = impl_->labels;
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels.begin());
}

std::uint64_t Frame::full_bits() const noexcept {
  return size() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << size()) - 1;
}

bool operator==(const Frame& a, const Frame& b) noexcept {
  return a.impl_ == b.impl_ || a.impl_->labels == b.impl_->labels;
}

}  // namespace evidence
