#include "jordanc/report.hpp"
#include "jordanc/suites.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace jordanc;

TEST(Report, CountsAndStatus) {
  VerificationReport r;
  r.suite = "demo";
  r.check("a", {"R2"}, 1, 1, true);
  r.add("b", {}, nullptr, "x", Status::Info);
  EXPECT_TRUE(r.ok());
  r.check("c", {"C2"}, 2, 3, false);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.count(Status::Pass), 1);
  EXPECT_EQ(r.count(Status::Fail), 1);
  EXPECT_EQ(r.count(Status::Info), 1);
}

TEST(Report, JsonSchema) {
  VerificationReport r;
  r.suite = "demo";
  r.seed = 42;
  r.wall_time = 1.5;
  r.tolerances["closure"] = 1e-8;
  r.check("a", {"R2", "C2"}, {{"dim", 16}}, {{"dim", 16}}, true);
  const nlohmann::json j = r.to_json();
  EXPECT_EQ(j.at("suite"), "demo");
  EXPECT_EQ(j.at("seed"), 42);
  EXPECT_TRUE(j.contains("wall_time"));
  EXPECT_TRUE(j.contains("tolerances"));
  ASSERT_EQ(j.at("entries").size(), 1u);
  const auto& e = j.at("entries")[0];
  for (const char* key : {"check_id", "inputs", "expected", "measured", "status"}) EXPECT_TRUE(e.contains(key)) << key;
  EXPECT_EQ(e.at("status"), "pass");
  EXPECT_FALSE(r.to_json(false).contains("wall_time"));
}

TEST(Report, MarkdownListsEntries) {
  VerificationReport r;
  r.suite = "demo";
  r.check("closure_check", {"R2"}, 1, 2, false);
  const std::string md = r.to_markdown();
  EXPECT_NE(md.find("closure_check"), std::string::npos);
  EXPECT_NE(md.find("fail"), std::string::npos);
}

TEST(Report, AppendKeepsOrder) {
  VerificationReport a;
  a.check("first", {}, 1, 1, true);
  VerificationReport b;
  b.check("second", {}, 1, 1, true);
  a.append(b);
  ASSERT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.entries[1].check_id, "second");
}

TEST(Suites, NamesDispatch) {
  const auto& names = suite_names();
  EXPECT_NE(std::find(names.begin(), names.end(), "table"), names.end());
  EXPECT_THROW(run_suite("no_such_suite", SuiteConfig{}), std::exception);
}

TEST(Suites, ExpectedProductRules) {
  auto name = [](const std::string& l, const std::string& r) {
    const auto e = expected_product(l, r);
    return e ? classification_string(*e) : std::string("none");
  };
  EXPECT_EQ(name("R2", "R3"), "R6");
  EXPECT_EQ(name("R2", "C3@univ"), "C6");
  EXPECT_EQ(name("R3", "Q3"), "Q9");
  EXPECT_EQ(name("C2@univ", "C3@univ"), "C6 + C6");
  EXPECT_EQ(name("C2@std", "C3@std"), "C6");
  EXPECT_EQ(name("C2@univ", "Q3"), "C12");
  EXPECT_EQ(name("Q3", "Q3"), "R36");
  EXPECT_EQ(name("V4", "R2"), "none");
}

TEST(Suites, AssociativityRunsDeterministically) {
  SuiteConfig cfg;
  cfg.seed = 3;
  const VerificationReport a = run_associativity(cfg);
  const VerificationReport b = run_associativity(cfg);
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.to_json(false).dump(), b.to_json(false).dump());
}
