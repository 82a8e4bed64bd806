#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "evidence/diagnosis.hpp"
#include "evidence/knowledge_base.hpp"

namespace evidence::service {

enum class Format { Table, Tsv, Json };

struct DiagnoseRequest {
  std::string condition;
  std::vector<std::string> symptoms;
  bool trace = false;
};

/// Reads {"condition": "1", "symptoms": [...], "trace": true}. `trace` is
/// optional. Throws std::invalid_argument describing the first problem.
DiagnoseRequest parse_request(const nlohmann::json& body);

/// DiagnoseResponse document. Masses are keyed by comma-joined labels in
/// frame order and written at full precision; "steps" is present iff `trace`.
nlohmann::ordered_json to_json(const Diagnosis& d, bool trace);

/// GET /api/kb document: frame, conditions, symptom names with supports.
nlohmann::ordered_json kb_summary(const KnowledgeBase& kb);

/// Human report with two-decimal rounding. With `trace`, each fold is drawn
/// as a grid of previous focal sets against the new evidence.
std::string render_table(const Diagnosis& d, bool trace);

/// Tab-separated, full precision.
std::string render_tsv(const Diagnosis& d, bool trace);

std::string render(const Diagnosis& d, bool trace, Format format);

/// Shortest decimal form that reads back as the same double.
std::string full_precision(double value);

/// Fixed two-decimal form used in human output.
std::string two_decimals(double value);

}  // namespace evidence::service
