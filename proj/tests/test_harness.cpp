#include "gspin/harness/harness.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

using namespace gspin::harness;

namespace {

SuiteConfig config(const std::string& suite, int lo, int hi, int trials, std::uint64_t seed = 1) {
  SuiteConfig c;
  c.suite = suite;
  c.n_lo = lo;
  c.n_hi = hi;
  c.trials = trials;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(HarnessTest, ParsesRanges) {
  EXPECT_EQ(parse_n_range("2..4"), std::make_pair(2, 4));
  EXPECT_EQ(parse_n_range("3"), std::make_pair(3, 3));
  EXPECT_THROW(parse_n_range("a..4"), ConfigError);
  EXPECT_THROW(parse_n_range("2..."), ConfigError);
  EXPECT_THROW(parse_n_range(""), ConfigError);
}

TEST(HarnessTest, RejectsInvalidConfigs) {
  EXPECT_NO_THROW(validate(config("orbit", 2, 4, 1)));
  EXPECT_THROW(validate(config("nope", 2, 4, 1)), ConfigError);
  EXPECT_THROW(validate(config("weyl", 2, 9, 1)), ConfigError);
  EXPECT_THROW(validate(config("mellin", 1, 3, 1)), ConfigError);
  EXPECT_THROW(validate(config("orbit", 4, 2, 1)), ConfigError);
  EXPECT_THROW(validate(config("orbit", 2, 4, 0)), ConfigError);
  auto c = config("orbit", 2, 2, 1);
  c.prime = 4;
  EXPECT_THROW(validate(c), ConfigError);
  c.prime = 5;
  c.symbolic_max_n = -1;
  EXPECT_THROW(validate(c), ConfigError);
  c.symbolic_max_n = 3;
  c.report_path = "/nonexistent-dir/report.json";
  EXPECT_THROW(validate(c), ConfigError);
}

TEST(HarnessTest, OrbitSuiteCounts) {
  auto r = run(config("orbit", 2, 4, 50, 7));
  ASSERT_EQ(r.records.size(), 3u);
  int passed = 0;
  for (const auto& rec : r.records) {
    EXPECT_EQ(rec.passed + rec.failed, rec.trials);
    passed += rec.passed;
  }
  EXPECT_EQ(passed, 150);
  EXPECT_EQ(r.total_failed(), 0);
}

TEST(HarnessTest, RootDataRecordsTrivialLengths) {
  auto r = run(config("rootdata", 1, 1, 1));
  ASSERT_EQ(r.records.size(), 1u);
  EXPECT_EQ(r.records[0].facts["lengths"], Json::array({1, 0}));
  EXPECT_EQ(r.total_failed(), 0);
}

TEST(HarnessTest, BruhatFindingsAreNotFailures) {
  auto r = run(config("bruhat", 2, 3, 5));
  EXPECT_EQ(r.total_failed(), 0);
  bool ag = false;
  for (const auto& rec : r.records)
    for (const auto& f : rec.findings)
      ag = ag || f.find("a(g)") != std::string::npos;
  EXPECT_TRUE(ag);
}

TEST(HarnessTest, ReportsAreDeterministic) {
  auto c = config("all", 2, 3, 2, 99);
  auto a = to_json(run(c), false).dump();
  auto b = to_json(run(c), false).dump();
  EXPECT_EQ(a, b);
  auto other = to_json(run(config("all", 2, 3, 2, 100)), false).dump();
  EXPECT_NE(a, other);
}

TEST(HarnessTest, MellinRecordCarriesLedger) {
  auto r = run(config("mellin", 2, 2, 1));
  EXPECT_EQ(r.records[0].facts["ledger"]["nu"]["p"], "0");
  EXPECT_EQ(r.records[0].facts["ledger"]["tau2"]["q"], "1/2");
  EXPECT_FALSE(r.records[0].findings.empty());
}

TEST(HarnessTest, WritesSchemaVersionedReport) {
  auto path = std::filesystem::temp_directory_path() / "gspin_harness_report.json";
  auto c = config("rootdata", 2, 2, 1);
  c.report_path = path.string();
  write_report(run(c), c.report_path);
  std::ifstream in(path);
  Json j = Json::parse(in);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["records"][0]["suite"], "rootdata");
  EXPECT_TRUE(j["records"][0].contains("wall_time"));
  std::filesystem::remove(path);
}
