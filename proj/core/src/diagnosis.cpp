#include "evidence/diagnosis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "evidence/combination.hpp"
#include "evidence/error.hpp"

namespace evidence {

const DiseaseScore& Diagnosis::score(std::string_view label) const {
  auto it = std::find_if(diseases.begin(), diseases.end(),
                         [&](const DiseaseScore& s) { return s.label == label; });
  if (it == diseases.end()) throw Error(Errc::UnknownLabel, "unknown label: " + std::string(label));
  return *it;
}

Diagnosis diagnose(const KnowledgeBase& kb, std::string_view condition,
                   std::span<const std::string> symptoms) {
  const auto column = kb.condition_index(condition);
  if (!column) throw Error(Errc::UnknownCondition, "unknown condition: " + std::string(condition));
  if (symptoms.empty()) throw Error(Errc::NoSymptoms, "no symptoms");

  std::set<std::string_view> seen;
  std::vector<const Symptom*> rows;
  for (const auto& name : symptoms) {
    const Symptom* row = kb.find_symptom(name);
    if (!row) throw Error(Errc::UnknownSymptom, "unknown symptom: " + name);
    if (!seen.insert(name).second) throw Error(Errc::DuplicateSymptom, "duplicate symptom: " + name);
    rows.push_back(row);
  }

  Diagnosis d{std::string(condition),
              {symptoms.begin(), symptoms.end()},
              {},
              MassFunction::vacuous(kb.frame),
              {},
              {}};
  d.steps.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    auto evidence = MassFunction::simple_support(kb.frame, rows[i]->supports, rows[i]->bpa.at(*column));
    if (i == 0) {
      d.steps.push_back({rows[i]->name, evidence, 0.0, evidence});
      continue;
    }
    try {
      auto outcome = combine(d.steps.back().combined, evidence);
      d.steps.push_back({rows[i]->name, std::move(evidence), outcome.conflict,
                         std::move(outcome.result)});
    } catch (const Error& e) {
      if (e.code() != Errc::TotalConflict) throw;
      throw Error(Errc::TotalConflict,
                  "total conflict at step " + std::to_string(i) + " (" + rows[i]->name + ")", i);
    }
  }
  d.final = d.steps.back().combined;

  const std::size_t n = kb.frame.size();
  d.diseases.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto single = FocalSet::singleton(i, n);
    d.diseases.push_back({kb.frame.label(i), d.final.mass(single), belief_interval(d.final, single)});
  }
  d.ranking = rank_singletons(d.diseases);
  return d;
}

std::vector<std::string> rank_singletons(const std::vector<DiseaseScore>& diseases) {
  struct Keyed {
    double key;
    const std::string* label;
  };
  std::vector<Keyed> keyed;
  keyed.reserve(diseases.size());
  for (const auto& s : diseases) keyed.push_back({std::round(s.mass * 1e12), &s.label});
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    return a.key != b.key ? a.key > b.key : *a.label < *b.label;
  });
  std::vector<std::string> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.push_back(*k.label);
  return out;
}

std::vector<DiseaseScore> rank_report(const Diagnosis& d) {
  std::vector<DiseaseScore> rows;
  rows.reserve(d.ranking.size());
  for (const auto& label : d.ranking) rows.push_back(d.score(label));
  return rows;
}

}  // namespace evidence
