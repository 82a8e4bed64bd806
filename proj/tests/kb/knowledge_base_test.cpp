#include <fstream>
#include <random>
#include <sstream>

#include "evidence/knowledge_base.hpp"
#include "gtest/gtest.h"

namespace evidence {
namespace {

using Kind = KbIssue::Kind;

std::string read_fixture() {
  std::ifstream in(EVIDENCE_SOURCE_DIR "/kb/trypanosomiasis.kb");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string replace_line(std::string text, std::string_view from, std::string_view to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos);
  return text.replace(pos, from.size(), to);
}

TEST(DefaultKnowledgeBaseTest, MatchesLiteralTable) {
  // name, supports, weights under conditions 1..5
  struct Row {
    const char* name;
    const char* supports;
    double w[5];
  };
  const Row table[] = {
      {"fever", "AT,B,DF,M,R,WN", {0.65, 0.65, 0.65, 0.65, 0.45}},
      {"red-urine", "B", {0.65, 0.65, 0.65, 0.45, 0.55}},
      {"skin-rash", "L", {0.65, 0.65, 0.45, 0.55, 0.45}},
      {"paralysis", "L", {0.65, 0.45, 0.55, 0.45, 0.45}},
      {"headache", "M", {0.45, 0.55, 0.45, 0.45, 0.55}},
      {"bleeding-around-the-bite", "R", {0.55, 0.45, 0.45, 0.55, 0.65}},
      {"joint-pain", "AT", {0.45, 0.45, 0.55, 0.65, 0.65}},
      {"swollen-lymph-nodes", "AT", {0.45, 0.55, 0.65, 0.65, 0.65}},
      {"sleep-disturbances", "AT", {0.55, 0.65, 0.65, 0.65, 0.65}},
      {"meningitis", "WN", {0.65, 0.65, 0.65, 0.65, 0.65}},
      {"arthritis", "DF", {0.65, 0.65, 0.65, 0.65, 0.65}},
  };
  const auto kb = default_knowledge_base();
  ASSERT_EQ(kb.frame.size(), 7u);
  const std::vector<std::string> labels(kb.frame.labels().begin(), kb.frame.labels().end());
  EXPECT_EQ(labels, (std::vector<std::string>{"AT", "B", "DF", "M", "R", "WN", "L"}));
  EXPECT_EQ(kb.conditions, (std::vector<std::string>{"1", "2", "3", "4", "5"}));
  ASSERT_EQ(kb.symptoms.size(), 11u);
  int checked = 0;
  for (std::size_t i = 0; i < 11; ++i) {
    EXPECT_EQ(kb.symptoms[i].name, table[i].name);
    EXPECT_EQ(set_key(kb.frame, kb.symptoms[i].supports), table[i].supports);
    ASSERT_EQ(kb.symptoms[i].bpa.size(), 5u);
    for (std::size_t c = 0; c < 5; ++c, ++checked) EXPECT_EQ(kb.symptoms[i].bpa[c], table[i].w[c]);
  }
  EXPECT_EQ(checked, 55);
  EXPECT_TRUE(validate(kb).empty());
}

TEST(ParseTest, FixtureFileEqualsBuiltIn) {
  const auto parsed = parse_knowledge_base(read_fixture());
  for (const auto& issue : parsed.issues) ADD_FAILURE() << describe(issue);
  ASSERT_TRUE(parsed.kb.has_value());
  EXPECT_EQ(*parsed.kb, default_knowledge_base());
}

TEST(ParseTest, WeightOfOneIsOutOfRange) {
  const auto text = replace_line(read_fixture(), "fever | AT,B,DF,M,R,WN | 0.65,",
                                 "fever | AT,B,DF,M,R,WN | 1.0,");
  const auto parsed = parse_knowledge_base(text);
  EXPECT_FALSE(parsed.kb.has_value());
  ASSERT_EQ(parsed.issues.size(), 1u);
  EXPECT_EQ(parsed.issues[0].kind, Kind::BpaOutOfRange);
  EXPECT_EQ(parsed.issues[0].line, 8u);
}

TEST(ParseTest, DuplicateSymptom) {
  const auto text = read_fixture() + "fever | AT | 0.5,0.5,0.5,0.5,0.5\n";
  const auto parsed = parse_knowledge_base(text);
  ASSERT_EQ(parsed.issues.size(), 1u);
  EXPECT_EQ(parsed.issues[0].kind, Kind::DuplicateSymptom);
  EXPECT_EQ(parsed.issues[0].line, 19u);
}

TEST(ParseTest, CollectsEveryProblemWithLines) {
  const std::string text =
      "frame: AT,B\n"
      "conditions: 1,2\n"
      "\n"
      "a | AT | 0.5\n"             // 4: count mismatch
      "b | Z | 0.5,0.5\n"          // 5: unknown disease
      "c |  | 0.5,0.5\n"           // 6: empty supports
      "d | B | 0.5,abc\n"          // 7: malformed weight
      "e | B\n"                    // 8: wrong field count
      "F | B | 0.5,0.5\n"          // 9: bad name
      "g | B | 0.0,0.5  # zero\n";  // 10: out of range
  const auto parsed = parse_knowledge_base(text);
  ASSERT_EQ(parsed.issues.size(), 7u);
  const std::pair<Kind, std::size_t> expected[] = {
      {Kind::BpaCountMismatch, 4}, {Kind::UnknownDisease, 5}, {Kind::EmptySupports, 6},
      {Kind::SyntaxError, 7},      {Kind::SyntaxError, 8},    {Kind::InvalidName, 9},
      {Kind::BpaOutOfRange, 10}};
  for (std::size_t i = 0; i < 7; ++i) {
    EXPECT_EQ(parsed.issues[i].kind, expected[i].first) << describe(parsed.issues[i]);
    EXPECT_EQ(parsed.issues[i].line, expected[i].second) << describe(parsed.issues[i]);
  }
}

TEST(ParseTest, HeaderProblems) {
  auto parsed = parse_knowledge_base("conditions: 1\n");
  ASSERT_FALSE(parsed.issues.empty());
  EXPECT_EQ(parsed.issues[0].kind, Kind::SyntaxError);

  parsed = parse_knowledge_base("frame: A,A\nconditions: 1\n");
  ASSERT_FALSE(parsed.issues.empty());
  EXPECT_EQ(parsed.issues[0].line, 1u);

  parsed = parse_knowledge_base("frame: A\nconditions: 1,1\n");
  ASSERT_EQ(parsed.issues.size(), 1u);
  EXPECT_EQ(parsed.issues[0].kind, Kind::DuplicateCondition);

  parsed = parse_knowledge_base("frame: A\n");
  ASSERT_EQ(parsed.issues.size(), 1u);
  EXPECT_NE(parsed.issues[0].message.find("conditions"), std::string::npos);

  EXPECT_FALSE(parse_knowledge_base("").issues.empty());
}

TEST(ParseTest, ToleratesCrlfAndBom) {
  std::string text = "\xEF\xBB\xBF" "frame: A,B\r\nconditions: x\r\nsym | A | 0.5\r\n";
  const auto parsed = parse_knowledge_base(text);
  ASSERT_TRUE(parsed.kb.has_value());
  EXPECT_EQ(parsed.kb->symptoms[0].bpa[0], 0.5);
}

TEST(ValidateTest, ReportsInvariantViolations) {
  auto kb = default_knowledge_base();
  kb.symptoms[0].supports = FocalSet(0b1, 3);
  kb.symptoms[1].bpa.pop_back();
  kb.symptoms[2].name = kb.symptoms[3].name;
  kb.conditions.push_back("");
  const auto issues = validate(kb);
  std::vector<Kind> kinds;
  for (const auto& i : issues) kinds.push_back(i.kind);
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), Kind::UnknownDisease), kinds.end());
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), Kind::BpaCountMismatch), kinds.end());
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), Kind::DuplicateSymptom), kinds.end());
  EXPECT_NE(std::find(kinds.begin(), kinds.end(), Kind::EmptyCondition), kinds.end());
  for (const auto& i : issues) EXPECT_EQ(i.line, 0u);
}

TEST(ValidateTest, SingleBpaCountMismatch) {
  auto kb = default_knowledge_base();
  kb.symptoms[4].bpa.resize(4);
  const auto issues = validate(kb);
  ASSERT_EQ(issues.size(), 1u);
  EXPECT_EQ(issues[0].kind, Kind::BpaCountMismatch);
}

// Serialize -> parse is the identity on random valid knowledge bases.
TEST(RoundTripTest, RandomKnowledgeBases) {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> frame_size(1, 12);
  std::uniform_int_distribution<int> count(1, 8);
  std::uniform_real_distribution<double> weight(1e-6, 1.0 - 1e-6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = frame_size(rng);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back("D" + std::to_string(i));
    KnowledgeBase kb{Frame(labels), {}, {}};
    const int conditions = count(rng);
    for (int c = 0; c < conditions; ++c) kb.conditions.push_back("c" + std::to_string(c));
    const int symptoms = count(rng);
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << n) - 1);
    for (int s = 0; s < symptoms; ++s) {
      Symptom sym{"symptom-" + std::to_string(s), FocalSet(bits(rng), n), {}};
      for (int c = 0; c < conditions; ++c) sym.bpa.push_back(weight(rng));
      kb.symptoms.push_back(std::move(sym));
    }
    ASSERT_TRUE(validate(kb).empty());
    const auto parsed = parse_knowledge_base(to_kb_text(kb));
    ASSERT_TRUE(parsed.kb.has_value()) << to_kb_text(kb);
    EXPECT_EQ(*parsed.kb, kb);
  }
  const auto text = to_kb_text(default_knowledge_base());
  EXPECT_EQ(*parse_knowledge_base(text).kb, default_knowledge_base());
}

}  // namespace
}  // namespace evidence
