#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "evidence/focal_set.hpp"
#include "evidence/frame.hpp"

namespace evidence {

/// One observable finding: the diseases it is evidence for, and the support
/// weight it carries under each named condition.
struct Symptom {
  std::string name;           // lowercase, hyphenated: "joint-pain"
  FocalSet supports;          // non-empty subset of the disease frame
  std::vector<double> bpa;    // one weight in (0,1) per condition

  friend bool operator==(const Symptom&, const Symptom&) = default;
};

/// Diseases, condition profiles and symptom rows. Plain data: build one with
/// parse_knowledge_base() or by hand, then check it with validate().
struct KnowledgeBase {
  Frame frame;
  std::vector<std::string> conditions;
  std::vector<Symptom> symptoms;

  std::optional<std::size_t> condition_index(std::string_view name) const;
  const Symptom* find_symptom(std::string_view name) const;

  friend bool operator==(const KnowledgeBase&, const KnowledgeBase&) = default;
};

struct KbIssue {
  enum class Kind {
    SyntaxError,
    UnknownDisease,
    DuplicateSymptom,
    BpaOutOfRange,
    BpaCountMismatch,
    EmptySupports,
    DuplicateCondition,
    EmptyCondition,
    InvalidName,
  };
  Kind kind;
  std::size_t line = 0;  // 1-based source line; 0 when not parsed from text
  std::string message;
};

const char* to_string(KbIssue::Kind kind);

/// "line 4: BpaOutOfRange: ..." (the line prefix is omitted for line 0).
std::string describe(const KbIssue& issue);

/// Checks every symptom and knowledge-base invariant. Empty result means valid.
std::vector<KbIssue> validate(const KnowledgeBase& kb);

struct KbParseResult {
  std::optional<KnowledgeBase> kb;  // set iff issues is empty
  std::vector<KbIssue> issues;
};

/// Line-oriented text format; `#` starts a comment, blank lines are ignored.
///
///   frame: AT,B,DF,M,R,WN,L
///   conditions: 1,2,3,4,5
///   fever | AT,B,DF,M,R,WN | 0.65,0.65,0.65,0.65,0.45
///
/// Collects every problem it finds rather than stopping at the first.
KbParseResult parse_knowledge_base(std::string_view text);

/// Inverse of parse_knowledge_base(); weights are written in shortest
/// round-trip form so parsing the output yields an identical value.
std::string to_kb_text(const KnowledgeBase& kb);

/// Built-in 11-symptom, 5-condition trypanosomiasis table.
KnowledgeBase default_knowledge_base();

}  // namespace evidence
