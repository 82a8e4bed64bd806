#pragma once

#include <span>
#include <string>
#include <vector>

#include "evidence/belief.hpp"
#include "evidence/knowledge_base.hpp"
#include "evidence/mass_function.hpp"

namespace evidence {

/// One fold of the consultation: the symptom's simple-support evidence, the
/// conflict met when folding it in, and the accumulated mass afterwards.
struct ConsultationStep {
  std::string symptom;
  MassFunction evidence;
  double conflict;
  MassFunction combined;
};

struct DiseaseScore {
  std::string label;
  double mass;  // mass on the singleton {label}
  BeliefInterval interval;
};

struct Diagnosis {
  std::string condition;
  std::vector<std::string> symptoms;  // inputs, in fold order
  std::vector<ConsultationStep> steps;
  MassFunction final;
  std::vector<DiseaseScore> diseases;  // frame order
  std::vector<std::string> ranking;    // labels by descending singleton mass

  const DiseaseScore& score(std::string_view label) const;
};

/// Builds one simple support per symptom (weight = the symptom's weight under
/// `condition`), folds them in the given order and ranks the singletons.
///
/// Throws Error{UnknownCondition, UnknownSymptom, DuplicateSymptom,
/// NoSymptoms, TotalConflict}; TotalConflict carries the failing step index.
Diagnosis diagnose(const KnowledgeBase& kb, std::string_view condition,
                   std::span<const std::string> symptoms);

/// Singleton masses are compared after rounding to 12 decimal places, so
/// masses that agree up to floating-point reassociation tie and fall back to
/// label order.
std::vector<std::string> rank_singletons(const std::vector<DiseaseScore>& diseases);

/// Rows of the diagnosis in ranking order.
std::vector<DiseaseScore> rank_report(const Diagnosis& d);

}  // namespace evidence
