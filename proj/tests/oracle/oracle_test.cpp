#include "evidence/combination.hpp"
#include "evidence/error.hpp"
#include "gtest/gtest.h"
#include "oracle/reference_oracle.hpp"
#include "support/generators.hpp"

namespace evidence::oracle {
namespace {

const Frame kDiseases({"AT", "B", "DF", "M", "R", "WN", "L"});

TEST(OracleTest, TableTwoPair) {
  const auto fever = MassFunction::simple_support(
      kDiseases, focal_from_labels(kDiseases, {"AT", "B", "DF", "M", "R", "WN"}), 0.65);
  const auto urine = MassFunction::simple_support(kDiseases, focal_from_labels(kDiseases, {"B"}), 0.65);
  const auto [dense, conflict] = oracle_combine(to_dense(fever), to_dense(urine));
  EXPECT_EQ(conflict, 0.0);
  EXPECT_NEAR(dense.values[0b0000010], 0.65, 1e-12);
  EXPECT_NEAR(dense.values[0b0111111], 0.2275, 1e-12);
  EXPECT_NEAR(dense.values[0b1111111], 0.1225, 1e-12);

  const auto sparse = combine(fever, urine);
  for (std::uint64_t code = 0; code < 128; ++code) {
    EXPECT_NEAR(sparse.result.mass(code), dense.values[code], 1e-12);
  }
}

TEST(OracleTest, VacuousIsNeutral) {
  testing::Rng rng(5);
  const Frame frame = testing::numbered_frame(5);
  const auto m = to_dense(testing::random_mass(rng, frame, 10));
  const auto [out, conflict] = oracle_combine(dense_vacuous(5), m);
  EXPECT_EQ(conflict, 0.0);
  EXPECT_EQ(out.values, m.values);
}

TEST(OracleTest, BeliefAndPlausibility) {
  const std::vector<MassEntry> entries = {
      {focal_from_labels(kDiseases, {"B"}), 0.65},
      {focal_from_labels(kDiseases, {"AT", "B", "DF", "M", "R", "WN"}), 0.2275},
      {FocalSet::full(7), 0.1225}};
  const auto dense = to_dense(MassFunction::create(kDiseases, entries));
  EXPECT_NEAR(oracle_belief(dense, 0b10), 0.65, 1e-12);
  EXPECT_EQ(oracle_belief(dense, 0), 0.0);
  EXPECT_EQ(oracle_plausibility(dense, 0), 0.0);
  EXPECT_NEAR(oracle_belief(dense, 127), 1.0, 1e-12);
  EXPECT_NEAR(oracle_plausibility(dense, 127), 1.0, 1e-12);
  EXPECT_NEAR(oracle_plausibility(dense, 0b1000000), 0.1225, 1e-12);
}

TEST(OracleTest, RandomPairOnSixHypotheses) {
  testing::Rng rng(606);
  const Frame frame = testing::numbered_frame(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = testing::random_mass(rng, frame, 16);
    const auto b = testing::random_mass(rng, frame, 16);
    const auto sparse = combine(a, b);
    const auto [dense, conflict] = oracle_combine(to_dense(a), to_dense(b));
    EXPECT_NEAR(sparse.conflict, conflict, 1e-12);
    for (std::uint64_t code = 0; code < 64; ++code) {
      EXPECT_NEAR(sparse.result.mass(code), dense.values[code], 1e-12);
    }
  }
}

TEST(OracleTest, TotalConflict) {
  DenseMass a{1, {0.0, 1.0}};
  DenseMass b{2, {0.0, 0.0, 0.0, 1.0}};
  EXPECT_THROW(oracle_combine(a, b), std::invalid_argument);
  DenseMass left{2, {0.0, 1.0, 0.0, 0.0}};
  DenseMass right{2, {0.0, 0.0, 1.0, 0.0}};
  EXPECT_THROW(oracle_combine(left, right), Error);
}

}  // namespace
}  // namespace evidence::oracle
