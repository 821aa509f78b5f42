#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "assertlint/cli.hpp"
#include "support.hpp"

using namespace assertlint;
using testing_support::fixture;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "assertlint");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json without_timestamp(const std::string& text) {
  auto j = nlohmann::ordered_json::parse(text);
  j.erase("generated_at");
  return j;
}

std::filesystem::path temp_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("assertlint-test-" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST(Cli, DescriptiveMessageIsClean) {
  const auto r = run({"lint", fixture("samples/QueryKeysTest.java")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, DigitsOnlyMessageFails) {
  const auto r = run({"lint", fixture("samples/RangeTest.java")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("RangeTest.java:11:9 AP4-digits-only [warning]"), std::string::npos) << r.out;
  EXPECT_EQ(run({"lint", "--disable", "AP4", fixture("samples/RangeTest.java")}).code, 0);
}

TEST(Cli, FailOnWarningIgnoresInfo) {
  const auto dir = temp_dir("failon");
  std::ofstream(dir / "T.java") << testing_support::test_class(
      R"(assertTrue("buffer available", buffer.available());)");
  EXPECT_EQ(run({"lint", dir.string()}).code, 1);
  EXPECT_EQ(run({"lint", "--fail-on", "warning", dir.string()}).code, 0);
}

TEST(Cli, LintJsonOutput) {
  const auto r = run({"lint", "--format", "json", fixture("samples/RangeTest.java")});
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["rule_id"], "AP4-digits-only");
  EXPECT_EQ(j[0]["line"], 11);
}

TEST(Cli, MissingPathIsUsageError) {
  EXPECT_EQ(run({"scan", "/nonexistent/path"}).code, 2);
  EXPECT_EQ(run({"scan"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"scan", "--format", "xml", fixture("misc")}).code, 2);
}

TEST(Cli, EmptyDirectoryGivesEmptyReport) {
  const auto dir = temp_dir("empty");
  const auto r = run({"scan", dir.string()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("no JUnit 4 test files found"), std::string::npos);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["totals"]["assertions"], 0);
}

TEST(Cli, OutputIsIndependentOfJobs) {
  const auto one = run({"scan", "--jobs", "1", fixture("")});
  const auto four = run({"scan", "-j", "4", fixture("")});
  ASSERT_EQ(one.code, 0) << one.err;
  EXPECT_EQ(without_timestamp(one.out), without_timestamp(four.out));
  EXPECT_EQ(run({"lint", "-j", "1", fixture("")}).out, run({"lint", "-j", "8", fixture("")}).out);
}

TEST(Cli, StatsJsonEqualsScan) {
  const auto scan = run({"scan", fixture("catalog")});
  const auto stats = run({"stats", "--format", "json", fixture("catalog")});
  EXPECT_EQ(without_timestamp(scan.out), without_timestamp(stats.out));
}

TEST(Cli, StatsDefaultsToTables) {
  const auto r = run({"stats", fixture("catalog")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("assertEquals"), std::string::npos);
  EXPECT_FALSE(nlohmann::json::accept(r.out));
}

TEST(Cli, CsvDirectoryOutput) {
  const auto dir = temp_dir("csv");
  const auto r = run({"scan", "--format", "csv", "--out", dir.string(), fixture("catalog")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* name : {"projects.csv", "assert_kinds.csv", "categories.csv", "readability.csv", "pos_patterns.csv"}) {
    EXPECT_TRUE(std::filesystem::exists(dir / name)) << name;
  }
}

TEST(Cli, ConfigFileAndPrecedence) {
  const auto dir = temp_dir("config");
  const auto cfg = dir / "assertlint.toml";
  std::ofstream(cfg) << "[rules]\nmin_words = 5\ndisable = [\"AP4\"]\n";
  auto r = run({"lint", "--config", cfg.string(), "--print-config"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("min_words = 5"), std::string::npos);
  EXPECT_NE(r.out.find("\"AP4-digits-only\""), std::string::npos);
  r = run({"lint", "--config", cfg.string(), "--min-words", "1", "--print-config"});
  EXPECT_NE(r.out.find("min_words = 1"), std::string::npos);
  EXPECT_EQ(run({"lint", "--config", (dir / "missing.toml").string(), fixture("misc")}).code, 2);
}

TEST(Cli, ConfigFromEnvironment) {
  const auto dir = temp_dir("env");
  const auto cfg = dir / "env.toml";
  std::ofstream(cfg) << "[rules]\nmin_words = 7\n";
  ::setenv("ASSERTLINT_CONFIG", cfg.string().c_str(), 1);
  const auto r = run({"scan", "--print-config"});
  ::unsetenv("ASSERTLINT_CONFIG");
  EXPECT_NE(r.out.find("min_words = 7"), std::string::npos);
}

TEST(Cli, RequireMessagesReportsBareAsserts) {
  const auto r = run({"lint", "--require-messages", fixture("catalog/MessageShapesTest.java")});
  EXPECT_NE(r.out.find("MessageShapesTest.java:56:"), std::string::npos);
  EXPECT_NE(r.out.find("NO-MESSAGE"), std::string::npos);
}

TEST(Cli, BrokenFileStillReportsOthers) {
  const auto r = run({"scan", "-v", fixture("misc")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.err.find("Broken.java"), std::string::npos);
}

TEST(Cli, Version) {
  const auto r = run({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("1.0.0"), std::string::npos);
}
