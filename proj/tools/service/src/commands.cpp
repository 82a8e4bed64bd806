#include "evidence/service/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "evidence/error.hpp"
#include "evidence/service/http_service.hpp"

namespace evidence::service {
namespace {

std::optional<std::string> read_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void report_load_error(const KbLoadError& e, std::ostream& err) {
  err << "error: " << e.what() << '\n';
  for (const auto& issue : e.issues()) err << "  " << describe(issue) << '\n';
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  return s.substr(first, s.find_last_not_of(" \t\r\n") - first + 1);
}

void print_state(std::ostream& out, const Diagnosis& d) {
  const auto& last = d.steps.back();
  out << "step " << d.steps.size() << ": " << last.symptom << "  (K = " << two_decimals(last.conflict)
      << ")\n";
  std::size_t width = 0;
  for (const auto& s : d.diseases) width = std::max(width, s.label.size());
  for (const auto& row : rank_report(d)) {
    out << "  " << row.label << std::string(width - row.label.size(), ' ') << "  "
        << two_decimals(row.mass) << "  [" << two_decimals(row.interval.bel) << ", "
        << two_decimals(row.interval.pl) << "]\n";
  }
}

}  // namespace

KnowledgeBase load_knowledge_base(const std::optional<std::string>& path) {
  if (!path) return default_knowledge_base();
  auto text = read_file(*path);
  if (!text) throw KbLoadError("cannot read knowledge base: " + *path);
  auto parsed = parse_knowledge_base(*text);
  if (!parsed.kb) throw KbLoadError("invalid knowledge base: " + *path, std::move(parsed.issues));
  if (auto issues = validate(*parsed.kb); !issues.empty()) {
    throw KbLoadError("invalid knowledge base: " + *path, std::move(issues));
  }
  return std::move(*parsed.kb);
}

int cmd_diagnose(const DiagnoseOptions& opts, std::ostream& out, std::ostream& err) {
  try {
    const auto kb = load_knowledge_base(opts.kb_path);
    const auto d = diagnose(kb, opts.condition, opts.symptoms);
    out << render(d, opts.trace, opts.format);
    return kExitOk;
  } catch (const KbLoadError& e) {
    report_load_error(e, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitInputError;
}

ConsultSession::ConsultSession(KnowledgeBase kb, std::string condition)
    : kb_(std::move(kb)), condition_(std::move(condition)) {
  if (!kb_.condition_index(condition_)) {
    throw Error(Errc::UnknownCondition, "unknown condition: " + condition_);
  }
}

ConsultSession::Status ConsultSession::add(const std::string& symptom) {
  if (!kb_.find_symptom(symptom)) return Status::UnknownSymptom;
  if (std::find(symptoms_.begin(), symptoms_.end(), symptom) != symptoms_.end()) {
    return Status::DuplicateSymptom;
  }
  symptoms_.push_back(symptom);
  refold();
  return Status::Accepted;
}

ConsultSession::Status ConsultSession::undo() {
  if (symptoms_.empty()) return Status::NothingToUndo;
  symptoms_.pop_back();
  refold();
  return Status::Removed;
}

void ConsultSession::refold() {
  if (symptoms_.empty()) {
    current_.reset();
  } else {
    current_ = diagnose(kb_, condition_, symptoms_);
  }
}

int cmd_consult(const ConsultOptions& opts, std::istream& in, std::ostream& out, std::ostream& err) {
  std::optional<ConsultSession> session;
  try {
    session.emplace(load_knowledge_base(opts.kb_path), opts.condition);
  } catch (const KbLoadError& e) {
    report_load_error(e, err);
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  out << "condition " << opts.condition
      << ": enter one symptom per line, 'undo' to drop the last, 'done' to finish\n";
  std::string line;
  while (std::getline(in, line)) {
    const std::string input = trim(line);
    if (input.empty()) continue;
    if (input == "done") break;
    if (input == "undo") {
      if (session->undo() == ConsultSession::Status::NothingToUndo) {
        err << "warning: nothing to undo\n";
        continue;
      }
      out << "removed last symptom\n";
      if (session->current()) print_state(out, *session->current());
      continue;
    }
    try {
      switch (session->add(input)) {
        case ConsultSession::Status::UnknownSymptom:
          err << "warning: unknown symptom: " << input << '\n';
          continue;
        case ConsultSession::Status::DuplicateSymptom:
          err << "warning: duplicate symptom: " << input << '\n';
          continue;
        default:
          break;
      }
    } catch (const Error& e) {
      // Total conflict: the symptom is rejected and the state rolled back.
      session->undo();
      err << "warning: " << e.what() << '\n';
      continue;
    }
    print_state(out, *session->current());
  }

  if (!session->current()) {
    err << "error: no symptoms\n";
    return kExitInputError;
  }
  out << "\nfinal summary\n" << render(*session->current(), false, opts.format);
  return kExitOk;
}

int cmd_validate(const ValidateOptions& opts, std::ostream& out, std::ostream& err) {
  const auto text = read_file(opts.kb_path);
  if (!text) {
    err << "error: cannot read knowledge base: " << opts.kb_path << '\n';
    return kExitInputError;
  }
  auto parsed = parse_knowledge_base(*text);
  auto issues = std::move(parsed.issues);
  if (parsed.kb) {
    auto more = validate(*parsed.kb);
    issues.insert(issues.end(), more.begin(), more.end());
  }
  if (!issues.empty()) {
    for (const auto& issue : issues) out << opts.kb_path << ": " << describe(issue) << '\n';
    err << issues.size() << " violation(s)\n";
    return kExitFindings;
  }
  out << opts.kb_path << ": ok (" << parsed.kb->frame.size() << " diseases, "
      << parsed.kb->conditions.size() << " conditions, " << parsed.kb->symptoms.size()
      << " symptoms)\n";
  return kExitOk;
}

int cmd_serve(const ServeOptions& opts, std::ostream& out, std::ostream& err) {
  const auto colon = opts.addr.rfind(':');
  int port = -1;
  if (colon != std::string::npos) {
    try {
      std::size_t used = 0;
      port = std::stoi(opts.addr.substr(colon + 1), &used);
      if (used != opts.addr.size() - colon - 1) port = -1;
    } catch (const std::exception&) {
      port = -1;
    }
  }
  if (port < 0 || port > 65535 || colon == 0) {
    err << "error: --addr must be host:port, got '" << opts.addr << "'\n";
    return kExitInputError;
  }
  const std::string host = opts.addr.substr(0, colon);

  std::optional<HttpService> service;
  try {
    service.emplace(load_knowledge_base(opts.kb_path), opts.ui_dir);
  } catch (const KbLoadError& e) {
    report_load_error(e, err);
    return kExitInputError;
  }
  if (!service->bind(host, port)) {
    err << "error: cannot bind " << opts.addr << '\n';
    return kExitInputError;
  }
  out << "listening on http://" << opts.addr << std::endl;
  return service->listen() ? kExitOk : kExitInputError;
}

}  // namespace evidence::service
