#include <gtest/gtest.h>

#include <sstream>

#include "collatz/fixtures.hpp"

namespace collatz {
namespace {

std::vector<FixtureCase> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_fixtures(in);
}

TEST(Fixtures, ShippedCorpusPasses) {
  const auto report = run_fixtures(load_fixtures(COLLATZ_FIXTURE_FILE));
  EXPECT_GE(report.results.size(), 15u);
  std::ostringstream text;
  write_report_text(text, report);
  EXPECT_EQ(report.failures(), 0u) << text.str();
}

TEST(Fixtures, ParseErrorsCarryLineNumbers) {
  const std::string good =
      R"({"id":"a","kind":"charset","input":"1101001","source":"Example 4.2","expected":{"P":"133"}})";
  try {
    parse(good + "\n\n{not json}\n");
    FAIL();
  } catch (const FixtureParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(parse(R"({"id":"a","kind":"nope","input":"1","source":"Example 1","expected":{"x":"1"}})"),
               FixtureParseError);
  EXPECT_THROW(parse(R"({"id":"a","kind":"charset","input":"1","source":"blog","expected":{"P":"1"}})"),
               FixtureParseError);
  EXPECT_THROW(parse(R"({"id":"a","kind":"charset","input":"1","source":"Table 1","expected":{}})"),
               FixtureParseError);
}

TEST(Fixtures, MismatchesAreReportedPerField) {
  const auto corpus = parse(
      R"({"id":"b","kind":"charset","input":"1101001","source":"Example 4.2","expected":{"P":"134","N0":"11","zz":"1"}})");
  const auto report = run_fixtures(corpus);
  ASSERT_EQ(report.results.size(), 1u);
  EXPECT_FALSE(report.results[0].passed);
  EXPECT_EQ(report.results[0].diffs.size(), 2u);
}

TEST(Fixtures, EvaluationErrorsFailTheCase) {
  const auto corpus =
      parse(R"({"id":"c","kind":"apply","input":"11010,5","source":"Example 4.6","expected":{"result":"1"}})");
  const auto report = run_fixtures(corpus);
  EXPECT_EQ(report.failures(), 1u);
}

TEST(Fixtures, EvaluateKinds) {
  const auto c = parse(
      R"({"id":"d","kind":"trajectory-n0","input":"bits:11010011010010 8","source":"Table 1","expected":{"N0":"x"}})");
  EXPECT_EQ(evaluate_fixture(c[0]).at("N0"), "1,3,3,11,11,11,11,139");
  const auto g = parse(
      R"({"id":"e","kind":"g-eval","input":"11010,5","source":"Example 4.6","expected":{"g":"x"}})");
  EXPECT_EQ(evaluate_fixture(g[0]).at("g"), "79/16");
}

}  // namespace
}  // namespace collatz
