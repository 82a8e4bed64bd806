#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace evidence {

enum class Errc {
  EmptyFrame,
  FrameTooLarge,
  EmptyLabel,
  DuplicateLabel,
  UnknownLabel,
  InvalidFocalSet,
  EmptyFocus,
  InvalidWeight,
  InvalidMass,
  FrameMismatch,
  TotalConflict,
  EmptyList,
  FrameTooLargeForDense,
  UnknownCondition,
  UnknownSymptom,
  DuplicateSymptom,
  NoSymptoms,
};

const char* to_string(Errc code);

// Every fault raised by the library. `step()` is set for failures that occur
// while folding a sequence of masses (zero-based fold step index).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message,
        std::optional<std::size_t> step = std::nullopt)
      : std::runtime_error(message), code_(code), step_(step) {}

  Errc code() const noexcept { return code_; }
  std::optional<std::size_t> step() const noexcept { return step_; }

 private:
  Errc code_;
  std::optional<std::size_t> step_;
};

}  // namespace evidence
