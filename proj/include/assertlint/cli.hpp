#pragma once

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "assertlint/config.hpp"
#include "assertlint/pipeline.hpp"
#include "assertlint/report.hpp"

namespace assertlint {

inline constexpr std::string_view kVersion = "1.0.0";

namespace exit_code {
inline constexpr int kClean = 0;
inline constexpr int kFindings = 1;
inline constexpr int kError = 2;
}  // namespace exit_code

namespace detail {

/// UTC timestamp, or SOURCE_DATE_EPOCH when set, for reproducible output.
inline std::string timestamp_now() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    try {
      t = static_cast<std::time_t>(std::stoll(epoch));
    } catch (const std::exception&) {
    }
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

inline std::string format_location(const std::string& file, const Location& loc) {
  return file + ':' + std::to_string(loc.line) + ':' + std::to_string(loc.column);
}

/// Flag values as given on the command line; unset ones leave the config alone.
struct CliArgs {
  std::string config;
  std::vector<std::string> roots;
  std::string format;
  std::string out;
  std::vector<std::string> disable;
  std::vector<std::string> enable;
  int min_words = 0;
  bool require_messages = false;
  bool require_junit_import = false;
  bool include_helpers = false;
  bool per_subdir = false;
  unsigned jobs = 0;
  std::string fail_on;
  std::string assertion_table;
  std::string lexicon;
  std::string tolerance_pattern;
  std::vector<std::string> include;
  std::vector<std::string> exclude;
  std::size_t top_k = 0;
  bool print_config = false;
  bool verbose = false;
};

inline void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << content;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error(path + ": cannot open for writing");
  file << content;
  if (!file) throw std::runtime_error(path + ": write failed");
}

inline void emit_report(const CorpusReport& report, OutputFormat format, const Config& config,
                        const ReportOptions& options, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json:
      write_output(config.out, to_json(report, options, timestamp_now()).dump(2) + "\n", out);
      break;
    case OutputFormat::Csv:
      if (!config.out.empty() && config.out != "-") {
        write_csv_directory(report, config.out, options);
      } else {
        bool first = true;
        for (const auto& [name, rows] : csv_tables(report, options)) {
          if (!first) out << '\n';
          first = false;
          out << "# " << name << ".csv\n";
          write_csv(out, rows);
        }
      }
      break;
    case OutputFormat::Table: {
      std::ostringstream os;
      write_tables(os, report, options);
      write_output(config.out, os.str(), out);
      break;
    }
  }
}

}  // namespace detail

/// Entry point shared by the executable and the integration tests.
inline int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lint and measure explanation messages of JUnit 4 assertions.", "assertlint"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  detail::CliArgs args;

  auto* config_opt = app.add_option("--config", args.config, "Config file (TOML sections)")
                         ->envname("ASSERTLINT_CONFIG");
  app.add_option("roots", args.roots, "Directories or .java files to analyze");
  auto* format_opt = app.add_option("--format", args.format, "Output format")
                         ->check(CLI::IsMember({"json", "csv", "table"}));
  auto* out_opt = app.add_option("--out", args.out, "Output file (csv: directory)");
  auto* disable_opt = app.add_option("--disable", args.disable, "Disable a rule (AP1..AP4, NO-MESSAGE)")
                          ->allow_extra_args(false);
  auto* enable_opt = app.add_option("--enable", args.enable, "Enable a rule")
                          ->allow_extra_args(false);
  auto* min_words_opt = app.add_option("--min-words", args.min_words, "Minimum words in a text message")
                            ->check(CLI::NonNegativeNumber);
  auto* require_messages_opt = app.add_flag("--require-messages", args.require_messages,
                                            "Report assertions without a message");
  auto* require_import_opt = app.add_flag("--require-junit-import", args.require_junit_import,
                                          "Accept unqualified asserts only in files importing org.junit");
  auto* helpers_opt = app.add_flag("--include-helpers", args.include_helpers,
                                   "Count asserts in non-@Test methods in statistics");
  auto* per_subdir_opt = app.add_flag("--per-subdir", args.per_subdir,
                                      "Treat each subdirectory of a root as a project");
  auto* jobs_opt = app.add_option("--jobs,-j", args.jobs, "Worker threads (0 = all cores)");
  auto* fail_on_opt = app.add_option("--fail-on", args.fail_on, "Lowest lint severity that fails the run")
                          ->check(CLI::IsMember({"info", "warning"}));
  auto* table_opt = app.add_option("--assertion-table", args.assertion_table, "Assertion method table file");
  auto* lexicon_opt = app.add_option("--lexicon", args.lexicon, "Part-of-speech lexicon file");
  auto* tolerance_opt = app.add_option("--tolerance-pattern", args.tolerance_pattern,
                                       "Regex for delta argument names");
  auto* include_opt = app.add_option("--include", args.include, "Glob of files to analyze")
                          ->allow_extra_args(false);
  auto* exclude_opt = app.add_option("--exclude", args.exclude, "Glob of files to skip")
                          ->allow_extra_args(false);
  auto* top_k_opt = app.add_option("--top-k", args.top_k, "Part-of-speech patterns listed before Others")
                        ->check(CLI::PositiveNumber);
  app.add_flag("--print-config", args.print_config, "Print the effective configuration and exit");
  app.add_flag("--verbose,-v", args.verbose, "Print parse diagnostics");

  app.add_subcommand("scan", "Write the corpus report")->fallthrough();
  auto* lint = app.add_subcommand("lint", "Print anti-pattern findings")->fallthrough();
  auto* stats = app.add_subcommand("stats", "Print the corpus tables")->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_code::kClean : exit_code::kError;
  }

  Config config;
  try {
    if (config_opt->count() > 0 || !args.config.empty()) apply_config_file(config, args.config);
    if (!args.roots.empty()) config.roots = args.roots;
    if (format_opt->count()) config.format = *parse_output_format(args.format);
    if (out_opt->count()) config.out = args.out;
    if (disable_opt->count()) apply_setting(config, "rules.disable", args.disable);
    if (enable_opt->count()) apply_setting(config, "rules.enable", args.enable);
    if (min_words_opt->count()) config.min_words = args.min_words;
    if (require_messages_opt->count()) config.require_messages = true;
    if (require_import_opt->count()) config.require_junit_import = true;
    if (helpers_opt->count()) config.include_helpers = true;
    if (per_subdir_opt->count()) config.per_subdir = true;
    if (jobs_opt->count()) config.jobs = args.jobs;
    if (fail_on_opt->count()) config.fail_on = *parse_severity(args.fail_on);
    if (table_opt->count()) config.assertion_table = args.assertion_table;
    if (lexicon_opt->count()) config.lexicon = args.lexicon;
    if (tolerance_opt->count()) config.tolerance_pattern = args.tolerance_pattern;
    if (include_opt->count()) config.include = args.include;
    if (exclude_opt->count()) config.exclude = args.exclude;
    if (top_k_opt->count()) config.top_pos_patterns = args.top_k;
  } catch (const std::exception& e) {
    err << "assertlint: " << e.what() << '\n';
    return exit_code::kError;
  }

  if (args.print_config) {
    out << to_toml(config);
    return exit_code::kClean;
  }
  if (config.roots.empty()) {
    err << "assertlint: no input roots given\n";
    return exit_code::kError;
  }

  try {
    const auto resolved = resolve_analysis(config);
    std::vector<std::filesystem::path> roots(config.roots.begin(), config.roots.end());
    const auto inputs = discover(roots, resolved->discovery);
    const auto files = analyze_all(inputs, resolved->options, config.jobs);

    bool io_error = false;
    std::size_t test_files = 0;
    for (const FileAnalysis& f : files) {
      if (f.is_test_file) ++test_files;
      for (const Diagnostic& d : f.diagnostics) {
        if (d.kind == DiagnosticKind::Io) {
          io_error = true;
          err << "assertlint: error: " << d.message << '\n';
        } else if (args.verbose) {
          err << detail::format_location(f.path, d.location) << ": " << to_string(d.kind) << ": " << d.message
              << '\n';
        }
      }
    }
    if (test_files == 0) err << "assertlint: warning: no JUnit 4 test files found\n";

    if (lint->parsed()) {
      std::size_t total = 0;
      bool failing = false;
      if (config.format == OutputFormat::Json && format_opt->count()) {
        nlohmann::ordered_json findings = nlohmann::ordered_json::array();
        for (const FileAnalysis& f : files) {
          for (const AssertionRecord& r : f.records) {
            for (const Finding& fd : r.findings) {
              ++total;
              failing = failing || fd.severity >= config.fail_on;
              findings.push_back({{"file", f.path},
                                  {"line", fd.location.line},
                                  {"column", fd.location.column},
                                  {"rule_id", fd.rule_id},
                                  {"severity", to_string(fd.severity)},
                                  {"excerpt", fd.excerpt},
                                  {"rationale", fd.rationale}});
            }
          }
        }
        detail::write_output(config.out, findings.dump(2) + "\n", out);
      } else {
        std::ostringstream os;
        for (const FileAnalysis& f : files) {
          for (const AssertionRecord& r : f.records) {
            for (const Finding& fd : r.findings) {
              ++total;
              failing = failing || fd.severity >= config.fail_on;
              os << detail::format_location(f.path, fd.location) << ' ' << fd.rule_id << " [" << to_string(fd.severity)
                 << "] " << fd.rationale << ": " << fd.excerpt << '\n';
            }
          }
        }
        detail::write_output(config.out, os.str(), out);
      }
      err << "assertlint: " << total << " finding" << (total == 1 ? "" : "s") << " in " << files.size() << " file"
          << (files.size() == 1 ? "" : "s") << '\n';
      if (io_error) return exit_code::kError;
      return failing ? exit_code::kFindings : exit_code::kClean;
    }

    const CorpusReport report = build_report(files, config.include_helpers);
    OutputFormat format = config.format;
    if (stats->parsed() && !format_opt->count()) format = OutputFormat::Table;
    detail::emit_report(report, format, config, resolved->report, out);
    return io_error ? exit_code::kError : exit_code::kClean;
  } catch (const std::exception& e) {
    err << "assertlint: " << e.what() << '\n';
    return exit_code::kError;
  }
}

}  // namespace assertlint
