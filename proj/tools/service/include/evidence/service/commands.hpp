#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "evidence/diagnosis.hpp"
#include "evidence/knowledge_base.hpp"
#include "evidence/service/report.hpp"

namespace evidence::service {

// Process exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFindings = 1;
inline constexpr int kExitInputError = 2;

/// A knowledge base that could not be loaded. `issues` is empty when the file
/// itself could not be read.
class KbLoadError : public std::runtime_error {
 public:
  KbLoadError(const std::string& message, std::vector<KbIssue> issues = {})
      : std::runtime_error(message), issues_(std::move(issues)) {}
  const std::vector<KbIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<KbIssue> issues_;
};

/// Built-in table when `path` is empty; otherwise parse and validate the file.
KnowledgeBase load_knowledge_base(const std::optional<std::string>& path);

struct DiagnoseOptions {
  std::optional<std::string> kb_path;
  std::string condition;
  std::vector<std::string> symptoms;
  bool trace = false;
  Format format = Format::Table;
};

int cmd_diagnose(const DiagnoseOptions& opts, std::ostream& out, std::ostream& err);

struct ConsultOptions {
  std::optional<std::string> kb_path;
  std::string condition;
  Format format = Format::Table;
};

/// Accumulates symptoms one at a time and re-folds from scratch on every
/// change, so the state only depends on the accepted symptom sequence.
class ConsultSession {
 public:
  ConsultSession(KnowledgeBase kb, std::string condition);

  enum class Status { Accepted, UnknownSymptom, DuplicateSymptom, Removed, NothingToUndo };

  Status add(const std::string& symptom);
  Status undo();

  const std::vector<std::string>& symptoms() const noexcept { return symptoms_; }
  const std::optional<Diagnosis>& current() const noexcept { return current_; }
  const KnowledgeBase& kb() const noexcept { return kb_; }
  const std::string& condition() const noexcept { return condition_; }

 private:
  void refold();

  KnowledgeBase kb_;
  std::string condition_;
  std::vector<std::string> symptoms_;
  std::optional<Diagnosis> current_;
};

/// Reads one symptom per line from `in`; `done` (or end of input) finishes,
/// `undo` drops the latest symptom. The final summary is the same report
/// cmd_diagnose prints for the accumulated list.
int cmd_consult(const ConsultOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);

struct ValidateOptions {
  std::string kb_path;
};

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err);

struct ServeOptions {
  std::optional<std::string> kb_path;
  std::string addr = "127.0.0.1:8080";
  std::optional<std::string> ui_dir;
};

/// Blocks until the server stops.
int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err);

}  // namespace evidence::service
