#include <gtest/gtest.h>

#include "prelog/errors.hpp"
#include "prelog/report.hpp"

using namespace prelog;

namespace {

Report sample() {
  Report r;
  r.tool_version = version();
  r.scenario_id = "toy";
  r.checks = {{"a.rank", "rank of a", "by hand", "3", "3", CheckStatus::pass, 1},
              {"b.shape", "", "", "[2,2]", "[2,3]", CheckStatus::fail, 2},
              {"c.count", "", "", "11", "12", CheckStatus::info, 0}};
  r.summary.prelog_rank = 6;
  r.summary.invariant_factors = {2, Integer("123456789012345678901234567890")};
  r.summary.saturation_index = Integer("9007199254740993");
  return r;
}

}  // namespace

TEST(Report, Counts) {
  const auto r = sample();
  EXPECT_EQ(r.count(CheckStatus::pass), 1u);
  EXPECT_EQ(r.count(CheckStatus::fail), 1u);
  EXPECT_EQ(r.count(CheckStatus::info), 1u);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  Report ok = r;
  ok.checks.erase(ok.checks.begin() + 1);
  EXPECT_TRUE(ok.passed());
  EXPECT_EQ(ok.exit_code(), 0);
}

TEST(Report, JsonRoundTrip) {
  const auto r = sample();
  const auto text = r.to_json();
  EXPECT_EQ(Report::from_json(text), r);
  EXPECT_EQ(Report::from_json(text).to_json(), text);
  EXPECT_EQ(Report::from_json(r.to_json(-1)), r);
}

TEST(Report, LargeIntegersAreStrings) {
  const auto text = sample().to_json(-1);
  EXPECT_NE(text.find("\"123456789012345678901234567890\""), std::string::npos);
  EXPECT_NE(text.find("\"9007199254740993\""), std::string::npos);
  EXPECT_NE(text.find("\"prelog_rank\":6"), std::string::npos);
  EXPECT_NE(text.find("\"passed\":false"), std::string::npos);
}

TEST(Report, EmptySummaryRoundTrips) {
  Report r;
  r.scenario_id = "empty";
  EXPECT_EQ(Report::from_json(r.to_json()), r);
}

TEST(Report, Status) {
  for (auto s : {CheckStatus::pass, CheckStatus::fail, CheckStatus::info}) EXPECT_EQ(parse_status(status_name(s)), s);
  EXPECT_THROW(parse_status("ok"), ParseError);
  EXPECT_THROW(Report::from_json("[]"), ParseError);
  EXPECT_THROW(Report::from_json(R"({"checks":[{"id":"x","status":"maybe"}]})"), ParseError);
}

TEST(Report, TableHasOneLinePerCheck) {
  const auto t = sample().table();
  for (const auto* id : {"a.rank", "b.shape", "c.count"}) EXPECT_NE(t.find(id), std::string::npos);
  EXPECT_NE(t.find("1 pass, 1 fail, 1 info"), std::string::npos);
}
