#include <gtest/gtest.h>

#include "prelog/cubic3fold.hpp"
#include "prelog/errors.hpp"
#include "prelog/verify.hpp"

using namespace prelog;

namespace {

// Two quadric surfaces glued along a ruling line, as a document.
ScenarioDoc quadrics_doc() {
  ScenarioDoc d;
  d.id = "two-quadrics";
  d.degree = 1;
  d.rings = {SocleRingDef{"Y1", {{"a1", 1}, {"b1", 1}}, 2, "a1^-1b1^-1", true, ""},
             SocleRingDef{"Y2", {{"a2", 1}, {"b2", 1}}, 2, "a2^-1b2^-1", true, ""},
             SocleRingDef{"D", {{"t", 1}}, 1, "t^-1", true, "the double line"}};
  d.maps = {KunnethMapDef{"D->Y1", "D", "Y1", {{"a1", "0"}, {"b1", "t"}}, {}, "D", {{"1", "a1"}, {"t", "a1*b1"}}},
            KunnethMapDef{"D->Y2", "D", "Y2", {{"a2", "0"}, {"b2", "t"}}, {}, "D", {{"1", "a2"}, {"t", "a2*b2"}}}};
  d.components = {{1, "Y1"}, {2, "Y2"}};
  d.pairs = {{1, 2, "D", "D->Y1", "D->Y2"}};
  d.cycles = {{"fiber", {{1, "a1", ""}}}, {"section", {{1, "b1", ""}, {2, "b2", ""}}}};
  d.expectations = {{"coker.free_rank", "", "3", "", 1, false},
                    {"prelog.rank", "", "2", "", 1, false},
                    {"cycles.basis", "", "true", "", 2, false},
                    {"saturation", "", "1", "", 2, false},
                    {"ranks.triples.km1", "", "5", "", 0, true}};
  return d;
}

}  // namespace

TEST(ScenarioJson, RoundTripIsStable) {
  for (const auto& doc : {quadrics_doc(), cubic_threefold_doc()}) {
    const auto text = scenario_to_json(doc);
    const auto back = scenario_from_json(text);
    EXPECT_EQ(scenario_to_json(back), text);
    EXPECT_EQ(back.expectations.size(), doc.expectations.size());
    for (std::size_t i = 0; i < doc.expectations.size(); ++i)
      EXPECT_EQ(back.expectations[i].informational, doc.expectations[i].informational) << doc.expectations[i].id;
  }
}

TEST(ScenarioJson, MalformedInputIsAParseError) {
  EXPECT_THROW(scenario_from_json("{"), ParseError);
  EXPECT_THROW(scenario_from_json(R"({"id": "x"})"), ParseError);
  auto text = scenario_to_json(quadrics_doc());
  const auto pos = text.find("\"socle\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 7, "\"bogus\"");
  EXPECT_THROW(scenario_from_json(text), ParseError);
}

TEST(Scenario, VerifiesAndReportsInformational) {
  const auto s = instantiate(quadrics_doc());
  const auto r = run_verification(s);
  ASSERT_EQ(r.checks.size(), 5u);
  EXPECT_EQ(r.count(CheckStatus::pass), 4u);
  EXPECT_EQ(r.count(CheckStatus::info), 1u);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(r.summary.prelog_rank, 2u);
  EXPECT_EQ(r.summary.generator_count, 2u);
  EXPECT_EQ(r.summary.saturation_index, Integer(1));
}

TEST(Scenario, OnlySelectsPrefixes) {
  EXPECT_TRUE(selected("sat.rank", {"sat"}));
  EXPECT_TRUE(selected("saturation", {"saturation"}));
  EXPECT_FALSE(selected("saturation", {"sat"}));
  EXPECT_FALSE(selected("prelog.rank", {"prelog.r"}));
  EXPECT_TRUE(selected("anything", {}));
  const auto s = instantiate(quadrics_doc());
  const auto r = run_verification(s, {{"prelog", "cycles"}});
  ASSERT_EQ(r.checks.size(), 2u);
  EXPECT_EQ(r.checks[0].id, "prelog.rank");
}

TEST(Scenario, UnknownIdFailsWithoutThrowing) {
  auto doc = quadrics_doc();
  doc.expectations.push_back({"nonsense.id", "", "1", "", 0, false});
  doc.expectations.push_back({"degree.Nope.t", "", "1", "", 0, false});
  const auto r = run_verification(instantiate(doc));
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(r.checks[5].computed.find("nonsense.id"), std::string::npos);
  EXPECT_NE(r.checks[6].computed.find("Nope"), std::string::npos);
}

TEST(Scenario, ErrorsNameTheOffendingEntry) {
  auto expect_message = [](ScenarioDoc doc, const std::string& needle) {
    try {
      instantiate(doc);
      ADD_FAILURE() << "no error for " << needle;
    } catch (const Error& e) {
      EXPECT_NE(std::string(e.what()).find(needle), std::string::npos) << e.what();
    }
  };
  auto unknown_target = quadrics_doc();
  std::get<KunnethMapDef>(unknown_target.maps[1]).target = "Y9";
  expect_message(unknown_target, "Y9");

  auto bad_var = quadrics_doc();
  std::get<KunnethMapDef>(bad_var.maps[0]).pull["a1"] = "zz";
  expect_message(bad_var, "D->Y1");

  auto duplicate = quadrics_doc();
  duplicate.rings.push_back(SocleRingDef{"D", {{"t", 1}}, 1, "t^-1", true, ""});
  expect_message(duplicate, "duplicate ring name 'D'");

  auto bad_socle = quadrics_doc();
  std::get<SocleRingDef>(bad_socle.rings[0]).socle = "a1^-2b1^-1";
  expect_message(bad_socle, "Y1");

  auto bad_cycle = quadrics_doc();
  bad_cycle.cycles[0].entries[0].component = 7;
  expect_message(bad_cycle, "fiber");
}
