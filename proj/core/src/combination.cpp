#include "evidence/combination.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>

#include "evidence/error.hpp"

namespace evidence {

CombinationOutcome combine(const MassFunction& a, const MassFunction& b) {
  if (!(a.frame() == b.frame())) {
    throw Error(Errc::FrameMismatch, "cannot combine mass functions over different frames");
  }

  std::vector<std::pair<std::uint64_t, double>> products;
  products.reserve(a.focal_count() * b.focal_count());
  double conflict = 0.0;
  for (const auto& [bits_a, mass_a] : a.by_code()) {
    for (const auto& [bits_b, mass_b] : b.by_code()) {
      const std::uint64_t meet = bits_a & bits_b;
      const double product = mass_a * mass_b;
      if (meet == 0) {
        conflict += product;
      } else {
        products.emplace_back(meet, product);
      }
    }
  }

  if (conflict >= 1.0 - kTotalConflictEpsilon) {
    throw Error(Errc::TotalConflict, "total conflict: evidence is fully contradictory");
  }

  // Group equal intersections; the stable sort keeps summation order fixed.
  std::stable_sort(products.begin(), products.end(),
                   [](const auto& x, const auto& y) { return x.first < y.first; });

  const double normalizer = 1.0 - conflict;
  std::map<std::uint64_t, double> masses;
  for (std::size_t i = 0; i < products.size();) {
    const std::uint64_t bits = products[i].first;
    double sum = 0.0;
    for (; i < products.size() && products[i].first == bits; ++i) sum += products[i].second;
    const double value = sum / normalizer;
    if (value >= kPruneThreshold) masses.emplace_hint(masses.end(), bits, value);
  }

  return {MassBuilder::adopt(a.frame(), std::move(masses)), conflict};
}

FoldOutcome combine_all(std::span<const MassFunction> masses) {
  if (masses.empty()) throw Error(Errc::EmptyList, "no mass functions to combine");
  FoldOutcome out{masses.front(), {}};
  out.conflicts.reserve(masses.size() - 1);
  for (std::size_t i = 1; i < masses.size(); ++i) {
    try {
      auto step = combine(out.result, masses[i]);
      out.result = std::move(step.result);
      out.conflicts.push_back(step.conflict);
    } catch (const Error& e) {
      if (e.code() != Errc::TotalConflict) throw;
      throw Error(Errc::TotalConflict,
                  "total conflict at step " + std::to_string(i - 1), i - 1);
    }
  }
  return out;
}

}  // namespace evidence
