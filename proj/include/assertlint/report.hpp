#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "assertlint/antipatterns.hpp"
#include "assertlint/categorizer.hpp"
#include "assertlint/pos_tagger.hpp"
#include "assertlint/readability.hpp"
#include "assertlint/source.hpp"
#include "assertlint/stats.hpp"

namespace assertlint {

inline constexpr std::string_view kReportSchema = "assert-msg-report/1";
inline constexpr std::string_view kIdentifierScoreNote = "readability of name, not of content";

struct AssertionRecord {
  std::string project;
  std::string file;
  Location location;
  std::string assert_kind;
  std::string enclosing_class;
  std::string enclosing_method;
  Location method_location;
  bool in_test_method = false;
  bool unknown_overload = false;
  bool has_message = false;
  std::string rendered;
  std::optional<MessageCategory> category;
  std::optional<TextMetrics> metrics;
  std::optional<std::vector<PosPattern>> pos_prefixes;
  std::vector<Finding> findings;
};

struct ProjectCounts {
  std::uint64_t files = 0;
  std::uint64_t test_files = 0;
  std::uint64_t methods_with_asserts = 0;
  std::uint64_t methods_with_messaged_asserts = 0;
  std::uint64_t asserts_with_message = 0;
  std::uint64_t asserts_without_message = 0;

  friend bool operator==(const ProjectCounts&, const ProjectCounts&) = default;
};

struct TermCounts {
  std::map<std::string, std::uint64_t> unigrams;
  std::map<std::string, std::uint64_t> bigrams;

  friend bool operator==(const TermCounts&, const TermCounts&) = default;
};

struct Totals {
  std::uint64_t files = 0;
  std::uint64_t test_files = 0;
  std::uint64_t diagnostics = 0;
  std::uint64_t assertions = 0;
  std::uint64_t with_message = 0;
  std::uint64_t without_message = 0;
  std::uint64_t helper_assertions_excluded = 0;
  std::uint64_t unknown_overload = 0;
  std::uint64_t unclassifiable = 0;
  std::uint64_t unscorable = 0;

  friend bool operator==(const Totals&, const Totals&) = default;
};

/// Final corpus statistics. Holds counts and the retained per-message
/// scores; the derived tables are computed from them on demand.
struct CorpusReport {
  Totals totals;
  std::map<std::string, ProjectCounts> projects;
  /// Messaged asserts per assertion method.
  std::map<std::string, std::uint64_t> assert_kinds;
  std::map<TopCategory, std::uint64_t> categories;
  std::map<TopCategory, std::map<SubCategory, std::uint64_t>> sub_categories;
  /// Rounded reading-ease scores per category, ascending.
  std::map<TopCategory, std::vector<double>> scores;
  std::map<std::string, TermCounts> terms;
  PatternCounts pos_patterns;
  std::map<std::string, std::uint64_t> findings;

  friend bool operator==(const CorpusReport&, const CorpusReport&) = default;
};

/// Mergeable partial summary. `merge` is associative and commutative; all
/// order-dependent work (sorting, quantiles) happens in `finalize`.
class CorpusAccumulator {
 public:
  explicit CorpusAccumulator(bool include_helpers = false) : include_helpers_(include_helpers) {}

  void add_file(const std::string& project, bool is_test_file, std::size_t diagnostics = 0) {
    auto& p = projects_[project];
    ++p.files;
    if (is_test_file) ++p.test_files;
    diagnostics_ += diagnostics;
  }

  void add(const AssertionRecord& r) {
    for (const Finding& f : r.findings) ++findings_[f.rule_id];
    if (!r.in_test_method && !include_helpers_) {
      ++helpers_excluded_;
      return;
    }
    auto& p = projects_[r.project];
    const std::string method_key = r.file + ':' + std::to_string(r.method_location.line) + ':' +
                                   std::to_string(r.method_location.column) + ':' + r.enclosing_method;
    p.methods.insert(method_key);
    if (r.unknown_overload) ++unknown_overload_;
    if (!r.has_message) {
      ++p.without_message;
      return;
    }
    ++p.with_message;
    p.messaged_methods.insert(method_key);
    ++report_.assert_kinds[r.assert_kind];
    if (!r.category) {
      ++unclassifiable_;
    } else {
      ++report_.categories[r.category->top];
      if (r.category->sub != SubCategory::None) ++report_.sub_categories[r.category->top][r.category->sub];
      if (r.metrics && r.metrics->reading_ease) {
        report_.scores[r.category->top].push_back(round2(*r.metrics->reading_ease));
      } else {
        ++unscorable_;
      }
    }
    if (r.pos_prefixes) report_.pos_patterns.add_message(*r.pos_prefixes);
    add_terms(r.assert_kind, r.rendered);
  }

  void merge(const CorpusAccumulator& other) {
    for (const auto& [name, p] : other.projects_) {
      auto& mine = projects_[name];
      mine.files += p.files;
      mine.test_files += p.test_files;
      mine.with_message += p.with_message;
      mine.without_message += p.without_message;
      mine.methods.insert(p.methods.begin(), p.methods.end());
      mine.messaged_methods.insert(p.messaged_methods.begin(), p.messaged_methods.end());
    }
    for (const auto& [k, v] : other.report_.assert_kinds) report_.assert_kinds[k] += v;
    for (const auto& [k, v] : other.report_.categories) report_.categories[k] += v;
    for (const auto& [top, subs] : other.report_.sub_categories) {
      for (const auto& [k, v] : subs) report_.sub_categories[top][k] += v;
    }
    for (const auto& [k, v] : other.report_.scores) {
      auto& mine = report_.scores[k];
      mine.insert(mine.end(), v.begin(), v.end());
    }
    for (const auto& [kind, t] : other.report_.terms) {
      auto& mine = report_.terms[kind];
      for (const auto& [k, v] : t.unigrams) mine.unigrams[k] += v;
      for (const auto& [k, v] : t.bigrams) mine.bigrams[k] += v;
    }
    report_.pos_patterns.merge(other.report_.pos_patterns);
    for (const auto& [k, v] : other.findings_) findings_[k] += v;
    diagnostics_ += other.diagnostics_;
    helpers_excluded_ += other.helpers_excluded_;
    unknown_overload_ += other.unknown_overload_;
    unclassifiable_ += other.unclassifiable_;
    unscorable_ += other.unscorable_;
  }

  CorpusReport finalize() const {
    CorpusReport out = report_;
    for (auto& [k, v] : out.scores) std::sort(v.begin(), v.end());
    out.findings = findings_;
    Totals& t = out.totals;
    for (const auto& [name, p] : projects_) {
      ProjectCounts c;
      c.files = p.files;
      c.test_files = p.test_files;
      c.methods_with_asserts = p.methods.size();
      c.methods_with_messaged_asserts = p.messaged_methods.size();
      c.asserts_with_message = p.with_message;
      c.asserts_without_message = p.without_message;
      out.projects.emplace(name, c);
      t.files += p.files;
      t.test_files += p.test_files;
      t.with_message += p.with_message;
      t.without_message += p.without_message;
    }
    t.assertions = t.with_message + t.without_message;
    t.diagnostics = diagnostics_;
    t.helper_assertions_excluded = helpers_excluded_;
    t.unknown_overload = unknown_overload_;
    t.unclassifiable = unclassifiable_;
    t.unscorable = unscorable_;
    return out;
  }

 private:
  struct ProjectState {
    std::uint64_t files = 0;
    std::uint64_t test_files = 0;
    std::uint64_t with_message = 0;
    std::uint64_t without_message = 0;
    std::set<std::string> methods;
    std::set<std::string> messaged_methods;
  };

  void add_terms(const std::string& kind, const std::string& rendered) {
    auto& t = report_.terms[kind];
    std::vector<std::string> words;
    for (const auto& token : segment(rendered).tokens) words.push_back(detail::ascii_lower(token));
    for (std::size_t i = 0; i < words.size(); ++i) {
      ++t.unigrams[words[i]];
      if (i + 1 < words.size()) ++t.bigrams[words[i] + '_' + words[i + 1]];
    }
  }

  bool include_helpers_;
  std::map<std::string, ProjectState> projects_;
  CorpusReport report_;
  std::map<std::string, std::uint64_t> findings_;
  std::uint64_t diagnostics_ = 0;
  std::uint64_t helpers_excluded_ = 0;
  std::uint64_t unknown_overload_ = 0;
  std::uint64_t unclassifiable_ = 0;
  std::uint64_t unscorable_ = 0;
};

inline CorpusReport summarize(const std::vector<AssertionRecord>& records, bool include_helpers = false) {
  CorpusAccumulator acc(include_helpers);
  for (const auto& r : records) acc.add(r);
  return acc.finalize();
}

// ---------------------------------------------------------------------------
// derived tables

struct CountRow {
  std::string label;
  std::uint64_t count = 0;
  double percent = 0.0;
};

struct ReportOptions {
  /// Assertion methods listed before "Others".
  std::size_t top_assert_kinds = 4;
  /// Part-of-speech patterns listed before "Others".
  std::size_t top_pos_patterns = 2;
  /// Terms listed per assertion method in table output.
  std::size_t top_terms = 10;
};

namespace detail {

inline std::vector<CountRow> ranked_rows(const std::map<std::string, std::uint64_t>& counts,
                                         std::optional<std::size_t> top_k) {
  std::vector<CountRow> rows;
  std::uint64_t total = 0;
  for (const auto& [label, count] : counts) {
    rows.push_back({label, count, 0.0});
    total += count;
  }
  std::sort(rows.begin(), rows.end(), [](const CountRow& a, const CountRow& b) {
    return a.count != b.count ? a.count > b.count : a.label < b.label;
  });
  if (top_k && rows.size() > *top_k) {
    std::uint64_t rest = 0;
    for (std::size_t i = *top_k; i < rows.size(); ++i) rest += rows[i].count;
    rows.resize(*top_k);
    rows.push_back({"Others", rest, 0.0});
  }
  for (auto& row : rows) row.percent = stats::percent(static_cast<double>(row.count), static_cast<double>(total));
  return rows;
}

}  // namespace detail

/// Messaged asserts per method: the top-k methods plus "Others".
inline std::vector<CountRow> assert_kind_table(const CorpusReport& r, std::size_t top_k = 4) {
  return detail::ranked_rows(r.assert_kinds, top_k);
}

struct CategoryRow {
  CountRow row;
  std::vector<CountRow> subs;
};

/// Categories as a share of classified messages; sub-categories as a share
/// of their parent.
inline std::vector<CategoryRow> category_table(const CorpusReport& r) {
  std::map<std::string, std::uint64_t> tops;
  for (const auto& [top, count] : r.categories) tops[to_string(top)] = count;
  std::vector<CategoryRow> out;
  for (const CountRow& row : detail::ranked_rows(tops, std::nullopt)) {
    CategoryRow c{row, {}};
    const auto top = *parse_top_category(row.label);
    if (auto it = r.sub_categories.find(top); it != r.sub_categories.end()) {
      std::map<std::string, std::uint64_t> subs;
      for (const auto& [sub, count] : it->second) subs[to_string(sub)] = count;
      c.subs = detail::ranked_rows(subs, std::nullopt);
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline std::vector<std::pair<TopCategory, stats::Summary>> readability_table(const CorpusReport& r) {
  std::vector<std::pair<TopCategory, stats::Summary>> out;
  for (TopCategory top : {TopCategory::Text, TopCategory::Identifier, TopCategory::Combination}) {
    auto it = r.scores.find(top);
    out.emplace_back(top, stats::summarize(it == r.scores.end() ? std::vector<double>{} : it->second));
  }
  return out;
}

struct ProjectMetric {
  std::string name;
  std::uint64_t ProjectCounts::*field;
};

inline const std::vector<ProjectMetric>& project_metrics() {
  static const std::vector<ProjectMetric> metrics = {
      {"test_methods_with_asserts", &ProjectCounts::methods_with_asserts},
      {"test_methods_with_messaged_asserts", &ProjectCounts::methods_with_messaged_asserts},
      {"asserts_with_message", &ProjectCounts::asserts_with_message},
      {"asserts_without_message", &ProjectCounts::asserts_without_message},
  };
  return metrics;
}

/// Distribution of a per-project count across all projects.
inline stats::Summary project_summary(const CorpusReport& r, std::uint64_t ProjectCounts::*field) {
  std::vector<double> values;
  for (const auto& [name, p] : r.projects) values.push_back(static_cast<double>(p.*field));
  return stats::summarize(values);
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

using ojson = nlohmann::ordered_json;

inline ojson summary_json(const stats::Summary& s, bool with_mode) {
  ojson j;
  j["n"] = s.n;
  if (s.n == 0) {
    for (const char* k : {"min", "q1", "median", "mean", "q3", "max"}) j[k] = nullptr;
    if (with_mode) j["mode"] = nullptr;
    return j;
  }
  j["min"] = s.min;
  j["q1"] = s.q1;
  j["median"] = s.median;
  j["mean"] = s.mean;
  j["q3"] = s.q3;
  j["max"] = s.max;
  if (with_mode) j["mode"] = s.mode;
  return j;
}

inline ojson rows_json(const std::vector<CountRow>& rows, const char* key) {
  ojson out = ojson::array();
  for (const auto& row : rows) out.push_back({{key, row.label}, {"count", row.count}, {"percent", row.percent}});
  return out;
}

inline ojson counts_json(const std::map<std::string, std::uint64_t>& counts) {
  ojson out = ojson::object();
  for (const auto& [k, v] : counts) out[k] = v;
  return out;
}

inline std::map<std::string, std::uint64_t> counts_from(const ojson& j) {
  std::map<std::string, std::uint64_t> out;
  for (const auto& [k, v] : j.items()) out[k] = v.get<std::uint64_t>();
  return out;
}

inline std::vector<PosTag> tags_from_label(const std::string& label) {
  std::vector<PosTag> tags;
  std::size_t pos = 0;
  while (pos <= label.size()) {
    std::size_t end = label.find(", ", pos);
    if (end == std::string::npos) end = label.size();
    const auto tag = parse_pos_tag(label.substr(pos, end - pos));
    if (!tag) throw std::runtime_error("unknown part-of-speech tag in '" + label + "'");
    tags.push_back(*tag);
    pos = end + 2;
  }
  return tags;
}

}  // namespace detail

/// Serializes a report. `generated_at` is the only field that varies
/// between runs over the same input.
inline nlohmann::ordered_json to_json(const CorpusReport& r, const ReportOptions& options = {},
                                      const std::string& generated_at = {}) {
  using detail::ojson;
  ojson j;
  j["schema"] = kReportSchema;
  j["generated_at"] = generated_at;

  const Totals& t = r.totals;
  j["totals"] = {{"files", t.files},
                 {"test_files", t.test_files},
                 {"diagnostics", t.diagnostics},
                 {"assertions", t.assertions},
                 {"with_message", t.with_message},
                 {"without_message", t.without_message},
                 {"helper_assertions_excluded", t.helper_assertions_excluded},
                 {"unknown_overload", t.unknown_overload},
                 {"unclassifiable", t.unclassifiable},
                 {"unscorable", t.unscorable}};

  ojson projects = ojson::array();
  for (const auto& [name, p] : r.projects) {
    projects.push_back({{"name", name},
                        {"files", p.files},
                        {"test_files", p.test_files},
                        {"test_methods_with_asserts", p.methods_with_asserts},
                        {"test_methods_with_messaged_asserts", p.methods_with_messaged_asserts},
                        {"asserts_with_message", p.asserts_with_message},
                        {"asserts_without_message", p.asserts_without_message}});
  }
  j["projects"] = projects;
  ojson project_summary_json;
  for (const auto& m : project_metrics()) {
    project_summary_json[m.name] = detail::summary_json(project_summary(r, m.field), false);
  }
  j["project_summary"] = project_summary_json;

  std::uint64_t messaged = 0;
  for (const auto& [k, v] : r.assert_kinds) messaged += v;
  j["assert_kinds"] = {{"total", messaged},
                       {"counts", detail::counts_json(r.assert_kinds)},
                       {"rows", detail::rows_json(assert_kind_table(r, options.top_assert_kinds), "assert_kind")}};

  std::uint64_t classified = 0;
  for (const auto& [k, v] : r.categories) classified += v;
  ojson categories = ojson::array();
  for (const auto& c : category_table(r)) {
    categories.push_back({{"category", c.row.label},
                          {"count", c.row.count},
                          {"percent", c.row.percent},
                          {"sub_categories", detail::rows_json(c.subs, "sub_category")}});
  }
  j["categories"] = {{"total", classified}, {"rows", categories}};

  ojson readability = ojson::object();
  for (const auto& [top, summary] : readability_table(r)) {
    ojson entry = detail::summary_json(summary, true);
    if (top == TopCategory::Identifier) entry["note"] = kIdentifierScoreNote;
    auto it = r.scores.find(top);
    entry["raw_scores"] = it == r.scores.end() ? ojson::array() : ojson(it->second);
    readability[to_string(top)] = entry;
  }
  j["readability"] = readability;

  ojson terms = ojson::object();
  for (const auto& [kind, tc] : r.terms) {
    terms[kind] = {{"unigrams", detail::counts_json(tc.unigrams)}, {"bigrams", detail::counts_json(tc.bigrams)}};
  }
  j["terms"] = terms;

  ojson pos = ojson::object();
  for (std::size_t len = 1; len <= kMaxPrefixLength; ++len) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& [pattern, count] : r.pos_patterns.counts(len)) counts[pattern.label()] = count;
    ojson rows = ojson::array();
    for (const auto& row : r.pos_patterns.table(len, options.top_pos_patterns)) {
      rows.push_back({{"pattern", row.label}, {"count", row.count}, {"percent", row.percent}});
    }
    pos[std::to_string(len)] = {
        {"total", r.pos_patterns.total(len)}, {"counts", detail::counts_json(counts)}, {"rows", rows}};
  }
  j["pos_patterns"] = pos;
  j["findings"] = detail::counts_json(r.findings);
  return j;
}

/// Rebuilds the counts and scores of a report from its JSON form.
inline CorpusReport from_json(const nlohmann::ordered_json& j) {
  if (!j.contains("schema") || j["schema"] != kReportSchema) {
    throw std::runtime_error("not an " + std::string(kReportSchema) + " document");
  }
  CorpusReport r;
  const auto& t = j.at("totals");
  r.totals.files = t.at("files").get<std::uint64_t>();
  r.totals.test_files = t.at("test_files").get<std::uint64_t>();
  r.totals.diagnostics = t.at("diagnostics").get<std::uint64_t>();
  r.totals.assertions = t.at("assertions").get<std::uint64_t>();
  r.totals.with_message = t.at("with_message").get<std::uint64_t>();
  r.totals.without_message = t.at("without_message").get<std::uint64_t>();
  r.totals.helper_assertions_excluded = t.at("helper_assertions_excluded").get<std::uint64_t>();
  r.totals.unknown_overload = t.at("unknown_overload").get<std::uint64_t>();
  r.totals.unclassifiable = t.at("unclassifiable").get<std::uint64_t>();
  r.totals.unscorable = t.at("unscorable").get<std::uint64_t>();
  for (const auto& p : j.at("projects")) {
    ProjectCounts c;
    c.files = p.at("files").get<std::uint64_t>();
    c.test_files = p.at("test_files").get<std::uint64_t>();
    c.methods_with_asserts = p.at("test_methods_with_asserts").get<std::uint64_t>();
    c.methods_with_messaged_asserts = p.at("test_methods_with_messaged_asserts").get<std::uint64_t>();
    c.asserts_with_message = p.at("asserts_with_message").get<std::uint64_t>();
    c.asserts_without_message = p.at("asserts_without_message").get<std::uint64_t>();
    r.projects.emplace(p.at("name").get<std::string>(), c);
  }
  r.assert_kinds = detail::counts_from(j.at("assert_kinds").at("counts"));
  for (const auto& row : j.at("categories").at("rows")) {
    const auto top = parse_top_category(row.at("category").get<std::string>());
    if (!top) throw std::runtime_error("unknown category in report");
    r.categories[*top] = row.at("count").get<std::uint64_t>();
    for (const auto& sub_row : row.at("sub_categories")) {
      const auto sub = parse_sub_category(sub_row.at("sub_category").get<std::string>());
      if (!sub) throw std::runtime_error("unknown sub-category in report");
      r.sub_categories[*top][*sub] = sub_row.at("count").get<std::uint64_t>();
    }
  }
  for (const auto& [name, entry] : j.at("readability").items()) {
    const auto top = parse_top_category(name);
    if (!top) throw std::runtime_error("unknown category in report");
    auto scores = entry.at("raw_scores").get<std::vector<double>>();
    if (!scores.empty()) r.scores[*top] = std::move(scores);
  }
  for (const auto& [kind, entry] : j.at("terms").items()) {
    r.terms[kind] = {detail::counts_from(entry.at("unigrams")), detail::counts_from(entry.at("bigrams"))};
  }
  for (const auto& [len, entry] : j.at("pos_patterns").items()) {
    for (const auto& [label, count] : entry.at("counts").items()) {
      r.pos_patterns.add(PosPattern{detail::tags_from_label(label)}, count.get<std::uint64_t>());
    }
  }
  r.findings = detail::counts_from(j.at("findings"));
  return r;
}

// ---------------------------------------------------------------------------
// CSV and aligned tables

namespace detail {

inline std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string summary_cell(const stats::Summary& s, double stats::Summary::*field) {
  return s.n == 0 ? std::string{} : fixed2(s.*field);
}

/// Top terms by count, ties by term.
inline std::vector<std::pair<std::string, std::uint64_t>> top_terms(const std::map<std::string, std::uint64_t>& counts,
                                                                    std::size_t k) {
  std::vector<std::pair<std::string, std::uint64_t>> v(counts.begin(), counts.end());
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  if (v.size() > k) v.resize(k);
  return v;
}

}  // namespace detail

using CsvTable = std::pair<std::string, std::vector<std::vector<std::string>>>;

/// One CSV table per report section; the first row of each is its header.
inline std::vector<CsvTable> csv_tables(const CorpusReport& r, const ReportOptions& options = {}) {
  using detail::fixed2;
  std::vector<CsvTable> out;

  std::vector<std::vector<std::string>> projects = {{"project", "files", "test_files", "test_methods_with_asserts",
                                                     "test_methods_with_messaged_asserts", "asserts_with_message",
                                                     "asserts_without_message"}};
  for (const auto& [name, p] : r.projects) {
    projects.push_back({name, std::to_string(p.files), std::to_string(p.test_files),
                        std::to_string(p.methods_with_asserts), std::to_string(p.methods_with_messaged_asserts),
                        std::to_string(p.asserts_with_message), std::to_string(p.asserts_without_message)});
  }
  out.emplace_back("projects", std::move(projects));

  std::vector<std::vector<std::string>> summary = {{"metric", "n", "min", "q1", "median", "mean", "q3", "max"}};
  for (const auto& m : project_metrics()) {
    const auto s = project_summary(r, m.field);
    summary.push_back({m.name, std::to_string(s.n), detail::summary_cell(s, &stats::Summary::min),
                       detail::summary_cell(s, &stats::Summary::q1), detail::summary_cell(s, &stats::Summary::median),
                       detail::summary_cell(s, &stats::Summary::mean), detail::summary_cell(s, &stats::Summary::q3),
                       detail::summary_cell(s, &stats::Summary::max)});
  }
  out.emplace_back("project_summary", std::move(summary));

  std::vector<std::vector<std::string>> kinds = {{"assert_kind", "count", "percent"}};
  for (const auto& row : assert_kind_table(r, options.top_assert_kinds)) {
    kinds.push_back({row.label, std::to_string(row.count), fixed2(row.percent)});
  }
  out.emplace_back("assert_kinds", std::move(kinds));

  std::vector<std::vector<std::string>> categories = {{"category", "sub_category", "count", "percent"}};
  for (const auto& c : category_table(r)) {
    categories.push_back({c.row.label, "", std::to_string(c.row.count), fixed2(c.row.percent)});
    for (const auto& s : c.subs) categories.push_back({c.row.label, s.label, std::to_string(s.count), fixed2(s.percent)});
  }
  out.emplace_back("categories", std::move(categories));

  std::vector<std::vector<std::string>> readability = {
      {"category", "n", "min", "q1", "median", "mean", "q3", "max", "mode", "note"}};
  for (const auto& [top, s] : readability_table(r)) {
    readability.push_back({to_string(top), std::to_string(s.n), detail::summary_cell(s, &stats::Summary::min),
                           detail::summary_cell(s, &stats::Summary::q1),
                           detail::summary_cell(s, &stats::Summary::median),
                           detail::summary_cell(s, &stats::Summary::mean), detail::summary_cell(s, &stats::Summary::q3),
                           detail::summary_cell(s, &stats::Summary::max), detail::summary_cell(s, &stats::Summary::mode),
                           top == TopCategory::Identifier ? std::string(kIdentifierScoreNote) : std::string{}});
  }
  out.emplace_back("readability", std::move(readability));

  std::vector<std::vector<std::string>> terms = {{"assert_kind", "ngram", "term", "count"}};
  for (const auto& [kind, tc] : r.terms) {
    for (const auto& [term, count] : tc.unigrams) terms.push_back({kind, "1", term, std::to_string(count)});
    for (const auto& [term, count] : tc.bigrams) terms.push_back({kind, "2", term, std::to_string(count)});
  }
  out.emplace_back("terms", std::move(terms));

  std::vector<std::vector<std::string>> pos = {{"prefix_len", "pattern", "count", "percent"}};
  for (std::size_t len = 1; len <= kMaxPrefixLength; ++len) {
    for (const auto& row : r.pos_patterns.table(len, options.top_pos_patterns)) {
      pos.push_back({std::to_string(len), row.label, std::to_string(row.count), fixed2(row.percent)});
    }
  }
  out.emplace_back("pos_patterns", std::move(pos));

  std::vector<std::vector<std::string>> findings = {{"rule_id", "count"}};
  for (const auto& [rule, count] : r.findings) findings.push_back({rule, std::to_string(count)});
  out.emplace_back("findings", std::move(findings));
  return out;
}

inline void write_csv(std::ostream& os, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << detail::csv_field(row[i]);
    }
    os << '\n';
  }
}

/// Writes `<dir>/<table>.csv` for every section, creating `dir`.
inline void write_csv_directory(const CorpusReport& r, const std::filesystem::path& dir,
                                const ReportOptions& options = {}) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error(dir.string() + ": " + ec.message());
  for (const auto& [name, rows] : csv_tables(r, options)) {
    const auto path = dir / (name + ".csv");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path.string() + ": cannot write");
    write_csv(out, rows);
    if (!out) throw std::runtime_error(path.string() + ": write failed");
  }
}

namespace detail {

inline void print_aligned(std::ostream& os, const std::string& title, const std::vector<std::vector<std::string>>& rows) {
  os << title << '\n';
  if (rows.size() <= 1) {
    os << "  (no rows)\n\n";
    return;
  }
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  auto numeric = [](const std::string& s) {
    return !s.empty() && s.find_first_not_of("0123456789.-") == std::string::npos;
  };
  // Right-align columns whose non-empty cells are all numbers.
  std::vector<bool> right(width.size(), true);
  for (std::size_t r = 1; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      if (!rows[r][i].empty() && !numeric(rows[r][i])) right[i] = false;
    }
  }
  for (std::size_t r = 0; r < rows.size(); ++r) {
    os << "  ";
    for (std::size_t i = 0; i < rows[r].size(); ++i) {
      const std::string& cell = rows[r][i];
      const std::string pad(width[i] - cell.size(), ' ');
      if (i) os << "  ";
      if (r > 0 && right[i]) {
        os << pad << cell;
      } else {
        os << cell;
        if (i + 1 < rows[r].size()) os << pad;
      }
    }
    os << '\n';
    if (r == 0) {
      os << "  ";
      for (std::size_t i = 0; i < width.size(); ++i) os << (i ? "  " : "") << std::string(width[i], '-');
      os << '\n';
    }
  }
  os << '\n';
}

}  // namespace detail

/// Aligned terminal rendering of the report sections.
inline void write_tables(std::ostream& os, const CorpusReport& r, const ReportOptions& options = {}) {
  const auto& t = r.totals;
  os << "Corpus: " << t.files << " files, " << t.test_files << " test files, " << t.assertions << " assertions ("
     << t.with_message << " with message, " << t.without_message << " without)\n\n";
  for (const auto& [name, rows] : csv_tables(r, options)) {
    if (name == "terms") {
      std::vector<std::vector<std::string>> top = {{"assert_kind", "ngram", "term", "count"}};
      for (const auto& [kind, tc] : r.terms) {
        for (const auto& [term, count] : detail::top_terms(tc.unigrams, options.top_terms)) {
          top.push_back({kind, "1", term, std::to_string(count)});
        }
        for (const auto& [term, count] : detail::top_terms(tc.bigrams, options.top_terms)) {
          top.push_back({kind, "2", term, std::to_string(count)});
        }
      }
      detail::print_aligned(os, "terms (top " + std::to_string(options.top_terms) + " per method)", top);
      continue;
    }
    detail::print_aligned(os, name, rows);
  }
  if (t.with_message == 0) os << "note: no assertions with messages were found\n";
}

}  // namespace assertlint
