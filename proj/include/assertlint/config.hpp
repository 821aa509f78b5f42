#pragma once

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "assertlint/antipatterns.hpp"
#include "assertlint/junit.hpp"
#include "assertlint/pipeline.hpp"

namespace assertlint {

enum class OutputFormat { Json, Csv, Table };

inline const char* to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::Json: return "json";
    case OutputFormat::Csv: return "csv";
    case OutputFormat::Table: return "table";
  }
  return "?";
}

inline std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "json") return OutputFormat::Json;
  if (s == "csv") return OutputFormat::Csv;
  if (s == "table") return OutputFormat::Table;
  return std::nullopt;
}

/// Effective settings: built-in defaults, then the config file, then flags.
struct Config {
  // [scan]
  std::vector<std::string> roots;
  std::vector<std::string> include = {"**/*.java"};
  std::vector<std::string> exclude;
  bool per_subdir = false;
  unsigned jobs = 0;
  // [extractor]
  std::string assertion_table;
  std::string tolerance_pattern = std::string(kDefaultTolerancePattern);
  bool require_junit_import = false;
  bool include_helpers = false;
  // [rules]
  std::set<std::string> disabled;
  int min_words = 2;
  bool require_messages = false;
  Severity fail_on = Severity::Info;
  // [pos]
  std::string lexicon;
  std::size_t top_pos_patterns = 2;
  // [report]
  OutputFormat format = OutputFormat::Json;
  std::string out;
  std::size_t top_assert_kinds = 4;
  std::size_t top_terms = 10;

  friend bool operator==(const Config&, const Config&) = default;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "true" || v == "1") return true;
  if (v == "false" || v == "0") return false;
  throw ConfigError(key + ": expected true or false, got '" + v + "'");
}

inline long parse_int(const std::string& key, const std::string& v, long min) {
  try {
    std::size_t used = 0;
    const long n = std::stol(v, &used);
    if (used != v.size() || n < min) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError(key + ": expected an integer >= " + std::to_string(min) + ", got '" + v + "'");
  }
}

inline std::string canonical_rule(const std::string& key, const std::string& name) {
  const auto id = resolve_rule(name);
  if (!id) throw ConfigError(key + ": unknown rule '" + name + "'");
  return std::string(*id);
}

/// Turns a rule on: NO-MESSAGE via `require_messages`, others by removal
/// from the disabled set.
inline void enable_rule(Config& c, const std::string& id) {
  if (id == rules::kNoMessage) c.require_messages = true;
  c.disabled.erase(id);
}

inline void disable_rule(Config& c, const std::string& id) {
  if (id == rules::kNoMessage) {
    c.require_messages = false;
  } else {
    c.disabled.insert(id);
  }
}

inline std::string toml_string(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + '"';
}

inline std::string toml_array(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + toml_string(items[i]);
  return out + "]";
}

}  // namespace detail

/// Applies one `section.key = value` setting.
inline void apply_setting(Config& c, const std::string& key, const std::vector<std::string>& values) {
  auto single = [&]() -> const std::string& {
    if (values.size() != 1) throw ConfigError(key + ": expected a single value");
    return values.front();
  };
  if (key == "scan.roots") {
    c.roots = values;
  } else if (key == "scan.include") {
    c.include = values;
  } else if (key == "scan.exclude") {
    c.exclude = values;
  } else if (key == "scan.per_subdir") {
    c.per_subdir = detail::parse_bool(key, single());
  } else if (key == "scan.jobs") {
    c.jobs = static_cast<unsigned>(detail::parse_int(key, single(), 0));
  } else if (key == "extractor.assertion_table") {
    c.assertion_table = single();
  } else if (key == "extractor.tolerance_pattern") {
    c.tolerance_pattern = single();
  } else if (key == "extractor.require_junit_import") {
    c.require_junit_import = detail::parse_bool(key, single());
  } else if (key == "extractor.include_helpers") {
    c.include_helpers = detail::parse_bool(key, single());
  } else if (key == "rules.disable") {
    for (const auto& v : values) detail::disable_rule(c, detail::canonical_rule(key, v));
  } else if (key == "rules.enable") {
    for (const auto& v : values) detail::enable_rule(c, detail::canonical_rule(key, v));
  } else if (key == "rules.min_words") {
    c.min_words = static_cast<int>(detail::parse_int(key, single(), 0));
  } else if (key == "rules.require_messages") {
    c.require_messages = detail::parse_bool(key, single());
  } else if (key == "rules.fail_on") {
    const auto s = parse_severity(single());
    if (!s) throw ConfigError(key + ": expected info or warning");
    c.fail_on = *s;
  } else if (key == "pos.lexicon") {
    c.lexicon = single();
  } else if (key == "pos.top_k") {
    c.top_pos_patterns = static_cast<std::size_t>(detail::parse_int(key, single(), 1));
  } else if (key == "report.format") {
    const auto f = parse_output_format(single());
    if (!f) throw ConfigError(key + ": expected json, csv or table");
    c.format = *f;
  } else if (key == "report.out") {
    c.out = single();
  } else if (key == "report.top_assert_kinds") {
    c.top_assert_kinds = static_cast<std::size_t>(detail::parse_int(key, single(), 1));
  } else if (key == "report.top_terms") {
    c.top_terms = static_cast<std::size_t>(detail::parse_int(key, single(), 1));
  } else {
    throw ConfigError("unknown setting '" + key + "'");
  }
}

/// Reads a TOML-style document of `[section]` tables with `key = value` pairs.
inline void apply_config_text(Config& c, const std::string& text, const std::string& origin = "<config>") {
  std::istringstream in(text);
  std::vector<CLI::ConfigItem> items;
  try {
    items = CLI::ConfigTOML().from_config(in);
  } catch (const std::exception& e) {
    throw ConfigError(origin + ": " + e.what());
  }
  for (const CLI::ConfigItem& item : items) {
    if (item.name == "++" || item.name == "--") continue;
    std::string key;
    for (const auto& p : item.parents) key += p + '.';
    key += item.name;
    try {
      apply_setting(c, key, item.inputs);
    } catch (const ConfigError& e) {
      throw ConfigError(origin + ": " + e.what());
    }
  }
}

inline void apply_config_file(Config& c, const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot read config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config_text(c, buffer.str(), path.string());
}

/// The effective configuration as a config document that reproduces it.
inline std::string to_toml(const Config& c) {
  using detail::toml_array;
  using detail::toml_string;
  std::ostringstream os;
  os << "[scan]\n"
     << "roots = " << toml_array(c.roots) << '\n'
     << "include = " << toml_array(c.include) << '\n'
     << "exclude = " << toml_array(c.exclude) << '\n'
     << "per_subdir = " << (c.per_subdir ? "true" : "false") << '\n'
     << "jobs = " << c.jobs << "\n\n"
     << "[extractor]\n"
     << "assertion_table = " << toml_string(c.assertion_table) << '\n'
     << "tolerance_pattern = " << toml_string(c.tolerance_pattern) << '\n'
     << "require_junit_import = " << (c.require_junit_import ? "true" : "false") << '\n'
     << "include_helpers = " << (c.include_helpers ? "true" : "false") << "\n\n"
     << "[rules]\n"
     << "disable = " << toml_array({c.disabled.begin(), c.disabled.end()}) << '\n'
     << "min_words = " << c.min_words << '\n'
     << "require_messages = " << (c.require_messages ? "true" : "false") << '\n'
     << "fail_on = " << toml_string(to_string(c.fail_on)) << "\n\n"
     << "[pos]\n"
     << "lexicon = " << toml_string(c.lexicon) << '\n'
     << "top_k = " << c.top_pos_patterns << "\n\n"
     << "[report]\n"
     << "format = " << toml_string(to_string(c.format)) << '\n'
     << "out = " << toml_string(c.out) << '\n'
     << "top_assert_kinds = " << c.top_assert_kinds << '\n'
     << "top_terms = " << c.top_terms << '\n';
  return os.str();
}

/// Analysis settings derived from a config. Loads the assertion table and
/// lexicon overrides; the returned lexicon must outlive the options.
struct ResolvedAnalysis {
  AnalysisOptions options;
  std::optional<Lexicon> lexicon;
  DiscoveryOptions discovery;
  ReportOptions report;
};

inline std::unique_ptr<ResolvedAnalysis> resolve_analysis(const Config& c) {
  auto out = std::make_unique<ResolvedAnalysis>();
  if (!c.assertion_table.empty()) out->options.table = AssertionTable::load(c.assertion_table);
  try {
    out->options.extractor.tolerance = ToleranceMatcher(c.tolerance_pattern);
  } catch (const std::regex_error& e) {
    throw ConfigError("tolerance_pattern: invalid regex '" + c.tolerance_pattern + "': " + e.what());
  }
  out->options.extractor.require_junit_import = c.require_junit_import;
  if (!c.lexicon.empty()) {
    out->lexicon = Lexicon::load(c.lexicon);
    out->options.lexicon = &*out->lexicon;
  }
  out->options.rules.disabled.insert(c.disabled.begin(), c.disabled.end());
  out->options.rules.min_words = c.min_words;
  out->options.rules.require_messages = c.require_messages;
  out->options.rules.lexicon = out->options.lexicon;
  out->discovery.include = c.include;
  out->discovery.exclude = c.exclude;
  out->discovery.per_subdir = c.per_subdir;
  out->report.top_assert_kinds = c.top_assert_kinds;
  out->report.top_pos_patterns = c.top_pos_patterns;
  out->report.top_terms = c.top_terms;
  return out;
}

}  // namespace assertlint
