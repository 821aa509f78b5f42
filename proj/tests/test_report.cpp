#include <gtest/gtest.h>

#include <sstream>

#include "support.hpp"

using namespace assertlint;
using testing_support::record_of;

namespace {

CorpusReport kind_counts(const std::map<std::string, std::uint64_t>& counts) {
  CorpusReport r;
  r.assert_kinds = counts;
  return r;
}

std::vector<AssertionRecord> sample_records() {
  std::vector<AssertionRecord> out;
  for (const char* s : {R"(assertEquals("name mismatch", a, b);)", R"(assertTrue("works", ok);)",
                        "assertNull(msg, c1);", R"(fail("Incorrect id: " + id);)", "assertTrue(ok);",
                        R"j(assertTrue("(0,0)", r.isEmpty());)j", "assertEquals(r.getLowerBound(), 1.0, EPSILON);"}) {
    out.push_back(record_of(s));
  }
  return out;
}

}  // namespace

TEST(Stats, QuantilesMatchReference) {
  struct Case {
    std::vector<double> data;
    double q1, median, q3;
  };
  const std::vector<Case> cases = {
      {{1.0}, 1, 1, 1},
      {{3, 1}, 1.5, 2, 2.5},
      {{1, 2, 3, 4}, 1.75, 2.5, 3.25},
      {{5, 1, 4, 2, 3}, 2, 3, 4},
      {{2, 14.5, 115, 300, 7, 64, 1, 880, 43, 9, 12}, 8.0, 14.5, 89.5},
      {{-217.18, 121.22, 78.87, -24.86, 83.32, 121.22}, 1.0725000000000016, 81.095, 111.745},
  };
  for (const auto& c : cases) {
    const auto s = stats::summarize(c.data);
    EXPECT_NEAR(s.q1, c.q1, 1e-9);
    EXPECT_NEAR(s.median, c.median, 1e-9);
    EXPECT_NEAR(s.q3, c.q3, 1e-9);
  }
  EXPECT_NEAR(stats::summarize({2, 14.5, 115, 300, 7, 64, 1, 880, 43, 9, 12}).mean, 131.5909090909091, 1e-9);
  EXPECT_NEAR(stats::summarize({-217.18, 121.22, 78.87, -24.86, 83.32, 121.22}).mean, 27.09833333333333, 1e-9);
}

TEST(Stats, ModeTiesGoToSmallest) {
  EXPECT_DOUBLE_EQ(stats::summarize({3, 1, 3, 1, 2}).mode, 1.0);
  EXPECT_DOUBLE_EQ(stats::summarize({121.22, 5, 121.22}).mode, 121.22);
  EXPECT_DOUBLE_EQ(stats::summarize({2.004, 2.001, 7}).mode, 2.0);
}

TEST(Stats, EmptySummary) {
  const auto s = stats::summarize({});
  EXPECT_EQ(s.n, 0u);
  EXPECT_DOUBLE_EQ(stats::percent(1, 0), 0.0);
}

TEST(Aggregation, AssertKindPercentages) {
  const auto rows = assert_kind_table(kind_counts(
      {{"assertEquals", 1562}, {"assertTrue", 1201}, {"assertFalse", 570}, {"assertNotNull", 229},
       {"assertNull", 200}, {"fail", 110}}));
  ASSERT_EQ(rows.size(), 5u);
  const std::vector<std::pair<std::string, double>> expected = {
      {"assertEquals", 40.34}, {"assertTrue", 31.02}, {"assertFalse", 14.72}, {"assertNotNull", 5.91}, {"Others", 8.01}};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    EXPECT_EQ(rows[i].label, expected[i].first);
    EXPECT_DOUBLE_EQ(rows[i].percent, expected[i].second);
  }
  EXPECT_EQ(rows[4].count, 310u);
}

TEST(Aggregation, CategoryPercentages) {
  CorpusReport r;
  r.categories = {{TopCategory::Text, 3135}, {TopCategory::Combination, 414}, {TopCategory::Identifier, 323}};
  r.sub_categories[TopCategory::Combination] = {{SubCategory::StringPlusVariable, 236},
                                                {SubCategory::StringPlusMethod, 159},
                                                {SubCategory::StringPlusVariablePlusMethod, 13},
                                                {SubCategory::StringPlusDigit, 6}};
  r.sub_categories[TopCategory::Identifier] = {{SubCategory::Method, 229}, {SubCategory::Variable, 94}};
  const auto rows = category_table(r);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_DOUBLE_EQ(rows[0].row.percent, 80.97);
  EXPECT_DOUBLE_EQ(rows[1].row.percent, 10.69);
  EXPECT_DOUBLE_EQ(rows[2].row.percent, 8.34);
  EXPECT_DOUBLE_EQ(rows[1].subs[0].percent, 57.00);
  EXPECT_DOUBLE_EQ(rows[1].subs[1].percent, 38.41);
  EXPECT_DOUBLE_EQ(rows[1].subs[2].percent, 3.14);
  EXPECT_DOUBLE_EQ(rows[1].subs[3].percent, 1.45);
  EXPECT_DOUBLE_EQ(rows[2].subs[0].percent, 70.90);
  EXPECT_DOUBLE_EQ(rows[2].subs[1].percent, 29.10);
}

TEST(Aggregation, CountsFromRecords) {
  const auto report = summarize(sample_records());
  EXPECT_EQ(report.totals.assertions, 7u);
  EXPECT_EQ(report.totals.with_message, 6u);
  EXPECT_EQ(report.totals.without_message, 1u);
  EXPECT_EQ(report.assert_kinds.at("assertTrue"), 2u);
  EXPECT_EQ(report.categories.at(TopCategory::Text), 3u);
  EXPECT_EQ(report.categories.at(TopCategory::Identifier), 2u);
  EXPECT_EQ(report.categories.at(TopCategory::Combination), 1u);
  EXPECT_EQ(report.findings.at("AP4-digits-only"), 1u);
  const auto& text = report.scores.at(TopCategory::Text);
  EXPECT_TRUE(std::is_sorted(text.begin(), text.end()));
  EXPECT_EQ(report.projects.at("p").asserts_with_message, 6u);
  EXPECT_EQ(report.projects.at("p").methods_with_asserts, 1u);
}

TEST(Aggregation, HelpersExcludedByDefault) {
  auto records = sample_records();
  records[0].in_test_method = false;
  EXPECT_EQ(summarize(records).totals.assertions, 6u);
  EXPECT_EQ(summarize(records).totals.helper_assertions_excluded, 1u);
  EXPECT_EQ(summarize(records, true).totals.assertions, 7u);
}

TEST(Report, JsonRoundTrip) {
  const auto report = summarize(sample_records());
  const auto j = to_json(report, {}, "2024-01-01T00:00:00Z");
  EXPECT_EQ(j.at("schema"), "assert-msg-report/1");
  EXPECT_EQ(j.at("readability").at("Identifier").at("note"), "readability of name, not of content");
  EXPECT_EQ(from_json(j), report);
  EXPECT_EQ(from_json(nlohmann::ordered_json::parse(j.dump())), report);
}

TEST(Report, CsvTablesHaveHeaders) {
  const auto tables = csv_tables(kind_counts({{"assertEquals", 1562}, {"assertTrue", 1201}, {"assertFalse", 570},
                                              {"assertNotNull", 229}, {"assertNull", 200}, {"fail", 110}}));
  const auto it = std::find_if(tables.begin(), tables.end(), [](const CsvTable& t) { return t.first == "assert_kinds"; });
  ASSERT_NE(it, tables.end());
  std::ostringstream os;
  write_csv(os, it->second);
  EXPECT_NE(os.str().find("assertEquals,1562,40.34"), std::string::npos);
  EXPECT_EQ(os.str().rfind("assert_kind,count,percent", 0), 0u);
  EXPECT_NE(os.str().find("Others,310,8.01"), std::string::npos);
}

TEST(Report, EmptyReportRenders) {
  const CorpusReport empty;
  std::ostringstream os;
  write_tables(os, empty);
  EXPECT_NE(os.str().find("no assertions with messages"), std::string::npos);
  const auto j = to_json(empty);
  EXPECT_EQ(j.at("totals").at("assertions"), 0);
  EXPECT_EQ(from_json(j), empty);
}
