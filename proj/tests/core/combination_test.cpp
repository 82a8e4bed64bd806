#include <vector>

#include "evidence/combination.hpp"
#include "evidence/error.hpp"
#include "gtest/gtest.h"

namespace evidence {
namespace {

const Frame kDiseases({"AT", "B", "DF", "M", "R", "WN", "L"});
const FocalSet kFeverSet = focal_from_labels(kDiseases, {"AT", "B", "DF", "M", "R", "WN"});
const FocalSet kB = focal_from_labels(kDiseases, {"B"});
const FocalSet kL = focal_from_labels(kDiseases, {"L"});
const FocalSet kTheta = FocalSet::full(7);

MassFunction support(const FocalSet& focus, double w) {
  return MassFunction::simple_support(kDiseases, focus, w);
}

TEST(CombineTest, FeverWithRedUrine) {
  const auto out = combine(support(kFeverSet, 0.65), support(kB, 0.65));
  EXPECT_EQ(out.conflict, 0.0);
  EXPECT_EQ(out.result.focal_count(), 3u);
  EXPECT_NEAR(out.result.mass(kB), 0.65, 1e-12);
  EXPECT_NEAR(out.result.mass(kFeverSet), 0.2275, 1e-12);
  EXPECT_NEAR(out.result.mass(kTheta), 0.1225, 1e-12);
}

// Frozen from an exact rational brute-force evaluation over all focal pairs.
TEST(CombineTest, SkinRashStepNormalizesConflict) {
  const auto m3 = combine(support(kFeverSet, 0.65), support(kB, 0.65)).result;
  const auto out = combine(m3, support(kL, 0.65));
  EXPECT_NEAR(out.conflict, 0.570375, 1e-12);
  EXPECT_NEAR(out.result.mass(kB), 0.5295315682281059, 1e-12);
  EXPECT_NEAR(out.result.mass(kFeverSet), 0.18533604887983707, 1e-12);
  EXPECT_NEAR(out.result.mass(kL), 0.18533604887983707, 1e-12);
  EXPECT_NEAR(out.result.mass(kTheta), 0.09979633401221996, 1e-12);
  EXPECT_TRUE(validate(out.result).empty());
}

TEST(CombineTest, TotalConflict) {
  const Frame ab({"a", "b"});
  const auto a = MassFunction::simple_support(ab, FocalSet(0b01, 2), 1.0);
  const auto b = MassFunction::simple_support(ab, FocalSet(0b10, 2), 1.0);
  try {
    combine(a, b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TotalConflict);
  }
}

TEST(CombineTest, NearTotalConflictIsRejected) {
  const Frame ab({"a", "b"});
  const auto a = MassFunction::simple_support(ab, FocalSet(0b01, 2), 1.0);
  const auto b = MassFunction::simple_support(ab, FocalSet(0b10, 2), 1.0 - 1e-14);
  EXPECT_THROW(combine(a, b), Error);
}

TEST(CombineTest, FrameMismatch) {
  const auto other = MassFunction::vacuous(Frame({"AT", "B"}));
  try {
    combine(support(kB, 0.5), other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::FrameMismatch);
  }
}

TEST(CombineTest, VacuousIsNeutral) {
  const auto m = combine(support(kFeverSet, 0.65), support(kB, 0.65)).result;
  const auto right = combine(m, MassFunction::vacuous(kDiseases));
  EXPECT_EQ(right.result, m);
  EXPECT_EQ(right.conflict, 0.0);
  EXPECT_EQ(combine(MassFunction::vacuous(kDiseases), m).result, m);
}

TEST(CombineAllTest, SingleElement) {
  const std::vector<MassFunction> ms = {support(kB, 0.4)};
  const auto out = combine_all(ms);
  EXPECT_EQ(out.result, ms[0]);
  EXPECT_TRUE(out.conflicts.empty());
}

TEST(CombineAllTest, VacuousPrefix) {
  const auto m = support(kL, 0.65);
  const std::vector<MassFunction> ms = {MassFunction::vacuous(kDiseases),
                                        MassFunction::vacuous(kDiseases), m};
  const auto out = combine_all(ms);
  EXPECT_EQ(out.result, m);
  EXPECT_EQ(out.conflicts, (std::vector<double>{0.0, 0.0}));
}

TEST(CombineAllTest, EmptyList) {
  try {
    combine_all({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyList);
  }
}

TEST(CombineAllTest, TotalConflictNamesStep) {
  const Frame ab({"a", "b"});
  const std::vector<MassFunction> ms = {
      MassFunction::vacuous(ab),
      MassFunction::simple_support(ab, FocalSet(0b01, 2), 1.0),
      MassFunction::vacuous(ab),
      MassFunction::simple_support(ab, FocalSet(0b10, 2), 1.0),
  };
  try {
    combine_all(ms);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::TotalConflict);
    EXPECT_EQ(e.step(), 2u);
  }
}

TEST(CombineAllTest, MatchesStepwiseConflicts) {
  const std::vector<MassFunction> ms = {support(kFeverSet, 0.65), support(kB, 0.65),
                                        support(kL, 0.65)};
  const auto out = combine_all(ms);
  ASSERT_EQ(out.conflicts.size(), 2u);
  EXPECT_EQ(out.conflicts[0], 0.0);
  EXPECT_NEAR(out.conflicts[1], 0.570375, 1e-12);
}

}  // namespace
}  // namespace evidence
