#include "evidence/service/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace evidence::service {
namespace {

using ordered_json = nlohmann::ordered_json;

// Terminal columns taken by a UTF-8 string (one per code point).
std::size_t display_width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

std::string pad(const std::string& s, std::size_t width) {
  const std::size_t w = display_width(s);
  return w >= width ? s : s + std::string(width - w, ' ');
}

ordered_json masses_json(const MassFunction& m) {
  ordered_json out = ordered_json::object();
  for (const auto& [set, mass] : m.focal_elements()) out[set_key(m.frame(), set)] = mass;
  return out;
}

std::string cell(const Frame& frame, const FocalSet& set, double mass) {
  return set_display(frame, set) + " " + two_decimals(mass);
}

// Grid of previous focal sets (rows) against the new evidence (columns); each
// cell holds the intersection and the product mass.
void render_step_grid(std::ostream& out, const MassFunction& previous, const MassFunction& evidence) {
  const Frame& frame = previous.frame();
  const auto rows = previous.focal_elements();
  const auto cols = evidence.focal_elements();

  std::vector<std::vector<std::string>> grid;
  grid.push_back({""});
  for (const auto& [set, mass] : cols) grid[0].push_back(cell(frame, set, mass));
  for (const auto& [row_set, row_mass] : rows) {
    std::vector<std::string> line{cell(frame, row_set, row_mass)};
    for (const auto& [col_set, col_mass] : cols) {
      line.push_back(cell(frame, row_set & col_set, row_mass * col_mass));
    }
    grid.push_back(std::move(line));
  }

  std::vector<std::size_t> widths(cols.size() + 1, 0);
  for (const auto& line : grid) {
    for (std::size_t c = 0; c < line.size(); ++c) widths[c] = std::max(widths[c], display_width(line[c]));
  }
  for (const auto& line : grid) {
    std::string text = "  ";
    for (std::size_t c = 0; c < line.size(); ++c) {
      text += pad(line[c], widths[c]);
      if (c + 1 < line.size()) text += "  |  ";
    }
    while (!text.empty() && text.back() == ' ') text.pop_back();
    out << text << '\n';
  }
}

void render_ranking_table(std::ostream& out, const Diagnosis& d) {
  std::size_t label_width = 7;
  for (const auto& s : d.diseases) label_width = std::max(label_width, display_width(s.label));
  out << pad("disease", label_width) << "  mass  bel   pl\n";
  for (const auto& row : rank_report(d)) {
    out << pad(row.label, label_width) << "  " << two_decimals(row.mass) << "  "
        << two_decimals(row.interval.bel) << "  " << two_decimals(row.interval.pl) << '\n';
  }
}

}  // namespace

std::string full_precision(double value) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, end);
}

std::string two_decimals(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", value);
  return buf;
}

DiagnoseRequest parse_request(const nlohmann::json& body) {
  if (!body.is_object()) throw std::invalid_argument("request body must be a JSON object");
  DiagnoseRequest req;
  const auto condition = body.find("condition");
  if (condition == body.end() || !condition->is_string()) {
    throw std::invalid_argument("'condition' must be a string");
  }
  req.condition = condition->get<std::string>();
  const auto symptoms = body.find("symptoms");
  if (symptoms == body.end() || !symptoms->is_array()) {
    throw std::invalid_argument("'symptoms' must be an array of strings");
  }
  for (const auto& s : *symptoms) {
    if (!s.is_string()) throw std::invalid_argument("'symptoms' must be an array of strings");
    req.symptoms.push_back(s.get<std::string>());
  }
  if (const auto trace = body.find("trace"); trace != body.end()) {
    if (!trace->is_boolean()) throw std::invalid_argument("'trace' must be a boolean");
    req.trace = trace->get<bool>();
  }
  return req;
}

ordered_json to_json(const Diagnosis& d, bool trace) {
  ordered_json out;
  out["condition"] = d.condition;
  out["symptoms"] = d.symptoms;
  if (trace) {
    ordered_json steps = ordered_json::array();
    for (const auto& step : d.steps) {
      steps.push_back({{"symptom", step.symptom},
                       {"conflict", step.conflict},
                       {"masses", masses_json(step.combined)}});
    }
    out["steps"] = std::move(steps);
  }
  out["final"] = masses_json(d.final);
  ordered_json diseases = ordered_json::object();
  for (const auto& s : d.diseases) {
    diseases[s.label] = {{"mass", s.mass}, {"bel", s.interval.bel}, {"pl", s.interval.pl}};
  }
  out["diseases"] = std::move(diseases);
  out["ranking"] = d.ranking;
  return out;
}

ordered_json kb_summary(const KnowledgeBase& kb) {
  ordered_json out;
  out["frame"] = std::vector<std::string>(kb.frame.labels().begin(), kb.frame.labels().end());
  out["conditions"] = kb.conditions;
  ordered_json symptoms = ordered_json::array();
  for (const auto& s : kb.symptoms) {
    std::vector<std::string> supports;
    for (std::size_t i = 0; i < kb.frame.size(); ++i) {
      if (s.supports.contains(i)) supports.push_back(kb.frame.label(i));
    }
    symptoms.push_back({{"name", s.name}, {"supports", supports}});
  }
  out["symptoms"] = std::move(symptoms);
  return out;
}

std::string render_table(const Diagnosis& d, bool trace) {
  std::ostringstream out;
  out << "condition " << d.condition << ", " << d.symptoms.size() << " symptom(s)\n";
  if (trace) {
    const Frame& frame = d.final.frame();
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      const auto& step = d.steps[i];
      out << "\nstep " << (i + 1) << ": " << step.symptom;
      if (i == 0) {
        out << '\n';
      } else {
        out << "  (K = " << two_decimals(step.conflict) << ")\n";
        render_step_grid(out, d.steps[i - 1].combined, step.evidence);
      }
      for (const auto& [set, mass] : step.combined.focal_elements()) {
        out << "  m " << set_display(frame, set) << " = " << two_decimals(mass) << '\n';
      }
    }
    out << '\n';
  }
  render_ranking_table(out, d);
  return out.str();
}

std::string render_tsv(const Diagnosis& d, bool trace) {
  std::ostringstream out;
  if (trace) {
    out << "step\tsymptom\tconflict\tset\tmass\n";
    for (std::size_t i = 0; i < d.steps.size(); ++i) {
      const auto& step = d.steps[i];
      for (const auto& [set, mass] : step.combined.focal_elements()) {
        out << (i + 1) << '\t' << step.symptom << '\t' << full_precision(step.conflict) << '\t'
            << set_key(step.combined.frame(), set) << '\t' << full_precision(mass) << '\n';
      }
    }
    out << '\n';
  }
  out << "rank\tdisease\tmass\tbel\tpl\n";
  std::size_t rank = 0;
  for (const auto& row : rank_report(d)) {
    out << ++rank << '\t' << row.label << '\t' << full_precision(row.mass) << '\t'
        << full_precision(row.interval.bel) << '\t' << full_precision(row.interval.pl) << '\n';
  }
  return out.str();
}

std::string render(const Diagnosis& d, bool trace, Format format) {
  switch (format) {
    case Format::Table: return render_table(d, trace);
    case Format::Tsv: return render_tsv(d, trace);
    case Format::Json: return to_json(d, trace).dump(2) + "\n";
  }
  return {};
}

}  // namespace evidence::service
