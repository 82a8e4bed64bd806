#include "reference_oracle.hpp"

#include <stdexcept>

#include "evidence/error.hpp"

namespace evidence::oracle {

DenseMass to_dense(const MassFunction& m) {
  const std::size_t n = m.frame().size();
  if (n > kMaxOracleFrame) throw std::invalid_argument("oracle frame above 8 hypotheses");
  DenseMass out{n, std::vector<double>(std::size_t{1} << n, 0.0)};
  for (const auto& [bits, value] : m.by_code()) out.values[bits] = value;
  return out;
}

DenseMass dense_vacuous(std::size_t frame_size) {
  DenseMass out{frame_size, std::vector<double>(std::size_t{1} << frame_size, 0.0)};
  out.values.back() = 1.0;
  return out;
}

std::pair<DenseMass, double> oracle_combine(const DenseMass& a, const DenseMass& b) {
  if (a.frame_size != b.frame_size) throw std::invalid_argument("oracle frame size mismatch");
  const std::size_t size = a.values.size();
  std::vector<double> joint(size, 0.0);
  for (std::size_t s = 0; s < size; ++s) {
    for (std::size_t t = 0; t < size; ++t) {
      joint[s & t] += a.values[s] * b.values[t];
    }
  }
  const double conflict = joint[0];
  if (conflict >= 1.0 - 1e-12) throw Error(Errc::TotalConflict, "oracle: total conflict");
  DenseMass out{a.frame_size, std::vector<double>(size, 0.0)};
  for (std::size_t s = 1; s < size; ++s) out.values[s] = joint[s] / (1.0 - conflict);
  return {out, conflict};
}

double oracle_belief(const DenseMass& m, std::uint64_t code) {
  double sum = 0.0;
  for (std::uint64_t b = 0; b < m.values.size(); ++b) {
    if ((b & code) == b) sum += m.values[b];
  }
  return sum;
}

double oracle_plausibility(const DenseMass& m, std::uint64_t code) {
  double sum = 0.0;
  for (std::uint64_t b = 0; b < m.values.size(); ++b) {
    if ((b & code) != 0) sum += m.values[b];
  }
  return sum;
}

}  // namespace evidence::oracle
