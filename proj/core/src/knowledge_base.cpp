#include "evidence/knowledge_base.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <system_error>

#include "evidence/error.hpp"

namespace evidence {
namespace {

using Kind = KbIssue::Kind;

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\f\v";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

bool valid_symptom_name(std::string_view name) {
  if (name.empty() || name.front() == '-' || name.back() == '-') return false;
  char prev = 0;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '-';
    if (!ok || (c == '-' && prev == '-')) return false;
    prev = c;
  }
  return true;
}

bool in_open_unit_interval(double v) { return v > 0.0 && v < 1.0; }

std::string format_weight(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

std::optional<double> parse_weight(std::string_view s) {
  double value = 0.0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || end != s.data() + s.size()) return std::nullopt;
  return value;
}

// Checks one symptom row against the frame and condition count.
void check_symptom(const KnowledgeBase& kb, const Symptom& s, std::size_t line,
                   std::vector<KbIssue>& out) {
  if (!valid_symptom_name(s.name)) {
    out.push_back({Kind::InvalidName, line,
                   "symptom name '" + s.name + "' must be lowercase words joined by hyphens"});
  }
  if (s.supports.frame_size() != kb.frame.size()) {
    out.push_back({Kind::UnknownDisease, line,
                   "symptom '" + s.name + "' supports diseases outside the frame"});
  } else if (s.supports.is_empty()) {
    out.push_back({Kind::EmptySupports, line, "symptom '" + s.name + "' supports no disease"});
  }
  if (s.bpa.size() != kb.conditions.size()) {
    out.push_back({Kind::BpaCountMismatch, line,
                   "symptom '" + s.name + "' has " + std::to_string(s.bpa.size()) +
                       " weights for " + std::to_string(kb.conditions.size()) + " conditions"});
  }
  for (double v : s.bpa) {
    if (!in_open_unit_interval(v)) {
      out.push_back({Kind::BpaOutOfRange, line,
                     "symptom '" + s.name + "' weight " + format_weight(v) +
                         " is outside the open interval (0, 1)"});
    }
  }
}

void check_conditions(const std::vector<std::string>& conditions, std::size_t line,
                      std::vector<KbIssue>& out) {
  std::set<std::string_view> seen;
  for (const auto& c : conditions) {
    if (c.empty()) {
      out.push_back({Kind::EmptyCondition, line, "condition name is empty"});
    } else if (!seen.insert(c).second) {
      out.push_back({Kind::DuplicateCondition, line, "duplicate condition: " + c});
    }
  }
}

}  // namespace

const char* to_string(KbIssue::Kind kind) {
  switch (kind) {
    case Kind::SyntaxError: return "SyntaxError";
    case Kind::UnknownDisease: return "UnknownDisease";
    case Kind::DuplicateSymptom: return "DuplicateSymptom";
    case Kind::BpaOutOfRange: return "BpaOutOfRange";
    case Kind::BpaCountMismatch: return "BpaCountMismatch";
    case Kind::EmptySupports: return "EmptySupports";
    case Kind::DuplicateCondition: return "DuplicateCondition";
    case Kind::EmptyCondition: return "EmptyCondition";
    case Kind::InvalidName: return "InvalidName";
  }
  return "Unknown";
}

std::string describe(const KbIssue& issue) {
  std::string out;
  if (issue.line != 0) out = "line " + std::to_string(issue.line) + ": ";
  return out + to_string(issue.kind) + ": " + issue.message;
}

std::optional<std::size_t> KnowledgeBase::condition_index(std::string_view name) const {
  auto it = std::find(conditions.begin(), conditions.end(), name);
  if (it == conditions.end()) return std::nullopt;
  return static_cast<std::size_t>(it - conditions.begin());
}

const Symptom* KnowledgeBase::find_symptom(std::string_view name) const {
  auto it = std::find_if(symptoms.begin(), symptoms.end(),
                         [&](const Symptom& s) { return s.name == name; });
  return it == symptoms.end() ? nullptr : &*it;
}

std::vector<KbIssue> validate(const KnowledgeBase& kb) {
  std::vector<KbIssue> out;
  check_conditions(kb.conditions, 0, out);
  std::set<std::string_view> names;
  for (const auto& s : kb.symptoms) {
    if (!names.insert(s.name).second) {
      out.push_back({Kind::DuplicateSymptom, 0, "duplicate symptom: " + s.name});
    }
    check_symptom(kb, s, 0, out);
  }
  return out;
}

KbParseResult parse_knowledge_base(std::string_view text) {
  KbParseResult result;
  auto& issues = result.issues;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::optional<Frame> frame;
  std::optional<std::vector<std::string>> conditions;
  bool frame_failed = false;
  std::vector<Symptom> symptoms;
  std::set<std::string, std::less<>> seen_symptoms;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (!frame && !frame_failed) {
      if (!line.starts_with("frame:")) {
        issues.push_back({Kind::SyntaxError, line_no, "expected 'frame: <labels>' header"});
        frame_failed = true;
        continue;
      }
      std::vector<std::string> labels;
      for (auto label : split(line.substr(6), ',')) labels.emplace_back(label);
      try {
        frame.emplace(std::move(labels));
      } catch (const Error& e) {
        issues.push_back({Kind::SyntaxError, line_no, std::string("invalid frame: ") + e.what()});
        frame_failed = true;
      }
      continue;
    }
    if (!conditions) {
      if (!line.starts_with("conditions:")) {
        issues.push_back({Kind::SyntaxError, line_no, "expected 'conditions: <names>' header"});
        conditions.emplace();
        continue;
      }
      conditions.emplace();
      for (auto name : split(line.substr(11), ',')) conditions->emplace_back(name);
      check_conditions(*conditions, line_no, issues);
      continue;
    }

    const auto fields = split(line, '|');
    if (fields.size() != 3) {
      issues.push_back({Kind::SyntaxError, line_no,
                        "expected '<name> | <diseases> | <weights>', got " +
                            std::to_string(fields.size()) + " field(s)"});
      continue;
    }
    const std::string name(fields[0]);
    if (!seen_symptoms.insert(name).second) {
      issues.push_back({Kind::DuplicateSymptom, line_no, "duplicate symptom: " + name});
      continue;
    }
    if (!frame) continue;  // header already reported; disease names cannot be resolved

    std::uint64_t bits = 0;
    bool diseases_ok = true;
    if (!fields[1].empty()) {
      for (auto label : split(fields[1], ',')) {
        auto index = frame->index_of(label);
        if (!index) {
          issues.push_back({Kind::UnknownDisease, line_no,
                            "symptom '" + name + "' names unknown disease '" + std::string(label) + "'"});
          diseases_ok = false;
        } else {
          bits |= std::uint64_t{1} << *index;
        }
      }
    }

    std::vector<double> weights;
    bool weights_ok = true;
    for (auto token : split(fields[2], ',')) {
      auto value = parse_weight(token);
      if (!value) {
        issues.push_back({Kind::SyntaxError, line_no,
                          "symptom '" + name + "' has malformed weight '" + std::string(token) + "'"});
        weights_ok = false;
        continue;
      }
      weights.push_back(*value);
    }
    if (!diseases_ok || !weights_ok) continue;

    Symptom symptom{name, FocalSet(bits, frame->size()), std::move(weights)};
    KnowledgeBase probe{*frame, *conditions, {}};
    check_symptom(probe, symptom, line_no, issues);
    symptoms.push_back(std::move(symptom));
  }

  if (!frame && !frame_failed) issues.push_back({Kind::SyntaxError, line_no, "missing 'frame:' header"});
  if (frame && !conditions) {
    issues.push_back({Kind::SyntaxError, line_no, "missing 'conditions:' header"});
  }
  if (issues.empty()) {
    result.kb = KnowledgeBase{std::move(*frame), std::move(*conditions), std::move(symptoms)};
  }
  return result;
}

std::string to_kb_text(const KnowledgeBase& kb) {
  std::string out = "frame: ";
  for (std::size_t i = 0; i < kb.frame.size(); ++i) {
    if (i) out += ',';
    out += kb.frame.label(i);
  }
  out += "\nconditions: ";
  for (std::size_t i = 0; i < kb.conditions.size(); ++i) {
    if (i) out += ',';
    out += kb.conditions[i];
  }
  out += '\n';
  for (const auto& s : kb.symptoms) {
    out += s.name + " | " + set_key(kb.frame, s.supports) + " | ";
    for (std::size_t i = 0; i < s.bpa.size(); ++i) {
      if (i) out += ',';
      out += format_weight(s.bpa[i]);
    }
    out += '\n';
  }
  return out;
}

KnowledgeBase default_knowledge_base() {
  struct Row {
    const char* name;
    std::initializer_list<std::string_view> diseases;
    std::vector<double> bpa;
  };
  const std::vector<Row> rows = {
      {"fever", {"AT", "B", "DF", "M", "R", "WN"}, {0.65, 0.65, 0.65, 0.65, 0.45}},
      {"red-urine", {"B"}, {0.65, 0.65, 0.65, 0.45, 0.55}},
      {"skin-rash", {"L"}, {0.65, 0.65, 0.45, 0.55, 0.45}},
      {"paralysis", {"L"}, {0.65, 0.45, 0.55, 0.45, 0.45}},
      {"headache", {"M"}, {0.45, 0.55, 0.45, 0.45, 0.55}},
      {"bleeding-around-the-bite", {"R"}, {0.55, 0.45, 0.45, 0.55, 0.65}},
      {"joint-pain", {"AT"}, {0.45, 0.45, 0.55, 0.65, 0.65}},
      {"swollen-lymph-nodes", {"AT"}, {0.45, 0.55, 0.65, 0.65, 0.65}},
      {"sleep-disturbances", {"AT"}, {0.55, 0.65, 0.65, 0.65, 0.65}},
      {"meningitis", {"WN"}, {0.65, 0.65, 0.65, 0.65, 0.65}},
      {"arthritis", {"DF"}, {0.65, 0.65, 0.65, 0.65, 0.65}},
  };
  KnowledgeBase kb{Frame({"AT", "B", "DF", "M", "R", "WN", "L"}), {"1", "2", "3", "4", "5"}, {}};
  for (const auto& row : rows) {
    kb.symptoms.push_back({row.name, focal_from_labels(kb.frame, row.diseases), row.bpa});
  }
  return kb;
}

}  // namespace evidence
