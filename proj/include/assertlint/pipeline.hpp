#pragma once

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "assertlint/antipatterns.hpp"
#include "assertlint/categorizer.hpp"
#include "assertlint/diagnostic.hpp"
#include "assertlint/junit.hpp"
#include "assertlint/parser.hpp"
#include "assertlint/pos_tagger.hpp"
#include "assertlint/readability.hpp"
#include "assertlint/report.hpp"
#include "assertlint/source.hpp"

namespace assertlint {

struct AnalysisOptions {
  AssertionTable table = AssertionTable::junit4();
  ExtractorOptions extractor;
  RuleConfig rules;
  /// Lexicon for tagging; the bundled one when null.
  const Lexicon* lexicon = nullptr;
};

struct FileAnalysis {
  std::string path;
  std::string project;
  bool is_test_file = false;
  std::vector<Diagnostic> diagnostics;
  std::vector<AssertionRecord> records;
};

/// Runs categorization, rendering, scoring, tagging and the rules on one site.
inline AssertionRecord analyze_site(const AssertionSite& site, const std::string& project, const std::string& file,
                                    const AnalysisOptions& options) {
  const Lexicon& lexicon = options.lexicon != nullptr ? *options.lexicon : Lexicon::builtin();
  AssertionRecord r;
  r.project = project;
  r.file = file;
  r.location = site.location;
  r.assert_kind = site.assert_kind;
  r.enclosing_class = site.enclosing_class;
  r.enclosing_method = site.enclosing_method;
  r.method_location = site.method_location;
  r.in_test_method = site.in_test_method;
  r.unknown_overload = site.unknown_overload;
  r.has_message = site.message.has_value();

  RenderedMessage rendered;
  TextMetrics metrics;
  if (site.message) {
    r.category = categorize(*site.message);
    rendered = render(*site.message);
    metrics = score(rendered);
    r.rendered = rendered.text;
    r.metrics = metrics;
    if (r.category && r.category->top == TopCategory::Text && metrics.words > 0) {
      r.pos_prefixes = leading_prefixes(tag_message(segment(rendered.text), lexicon));
    }
  }
  RuleConfig rules = options.rules;
  if (rules.lexicon == nullptr) rules.lexicon = &lexicon;
  r.findings = detect(site, r.category, rendered, metrics, rules);
  return r;
}

/// Parses one file and produces a record per assertion when it is a JUnit 4
/// test file. Every class in a file counts once any class is a test class.
inline FileAnalysis analyze_source(const SourceFile& source, const std::string& project,
                                   const AnalysisOptions& options) {
  FileAnalysis out;
  out.path = source.path();
  out.project = project;
  ParseResult parsed = parse_file(source);
  out.diagnostics = std::move(parsed.diagnostics);
  out.is_test_file = std::any_of(parsed.classes.begin(), parsed.classes.end(),
                                 [](const ClassDecl& c) { return classify_test_file(c).is_test_file; });
  if (!out.is_test_file) return out;
  for (const ClassDecl& c : parsed.classes) {
    for (const AssertionSite& site : find_assertions(c, source, options.table, options.extractor)) {
      if (site.unknown_overload) {
        out.diagnostics.push_back({DiagnosticKind::UnknownOverload, site.location,
                                   site.assert_kind + " called with " + std::to_string(site.args.size()) +
                                       " arguments matches no known overload"});
      }
      if (site.message && !categorize(*site.message)) {
        out.diagnostics.push_back({DiagnosticKind::Unclassifiable, site.location,
                                   "message '" + site.message->raw_source + "' fits no category"});
      }
      out.records.push_back(analyze_site(site, project, out.path, options));
    }
  }
  std::stable_sort(out.records.begin(), out.records.end(),
                   [](const AssertionRecord& a, const AssertionRecord& b) { return a.location < b.location; });
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.location < b.location; });
  return out;
}

inline FileAnalysis analyze_file(const std::filesystem::path& path, const std::string& project,
                                 const AnalysisOptions& options) {
  try {
    return analyze_source(SourceFile::load(path), project, options);
  } catch (const std::exception& e) {
    FileAnalysis out;
    out.path = path.generic_string();
    out.project = project;
    out.diagnostics.push_back({DiagnosticKind::Io, {}, e.what()});
    return out;
  }
}

// ---------------------------------------------------------------------------
// file discovery

namespace detail {

inline bool glob_match_at(std::string_view pattern, std::size_t p, std::string_view path, std::size_t s) {
  while (p < pattern.size()) {
    if (pattern.compare(p, 3, "**/") == 0) {
      if (glob_match_at(pattern, p + 3, path, s)) return true;
      for (std::size_t k = s; k < path.size(); ++k) {
        if (path[k] == '/' && glob_match_at(pattern, p + 3, path, k + 1)) return true;
      }
      return false;
    }
    if (pattern.compare(p, 2, "**") == 0) {
      for (std::size_t k = s; k <= path.size(); ++k) {
        if (glob_match_at(pattern, p + 2, path, k)) return true;
      }
      return false;
    }
    const char c = pattern[p];
    if (c == '*') {
      for (std::size_t k = s;; ++k) {
        if (glob_match_at(pattern, p + 1, path, k)) return true;
        if (k == path.size() || path[k] == '/') return false;
      }
    }
    if (s == path.size()) return false;
    if (c == '?') {
      if (path[s] == '/') return false;
    } else if (c == '[' && pattern.find(']', p + 1) != std::string_view::npos) {
      const std::size_t close = pattern.find(']', p + 1);
      std::string_view set = pattern.substr(p + 1, close - p - 1);
      const bool negate = !set.empty() && (set.front() == '!' || set.front() == '^');
      if (negate) set.remove_prefix(1);
      bool hit = false;
      for (std::size_t i = 0; i < set.size(); ++i) {
        if (i + 2 < set.size() && set[i + 1] == '-') {
          hit = hit || (path[s] >= set[i] && path[s] <= set[i + 2]);
          i += 2;
        } else {
          hit = hit || path[s] == set[i];
        }
      }
      if (hit == negate || path[s] == '/') return false;
      p = close;
    } else if (c != path[s]) {
      return false;
    }
    ++p;
    ++s;
  }
  return s == path.size();
}

}  // namespace detail

/// Shell-style glob over `/`-separated paths: `*` and `?` stay within a
/// segment, `**` spans segments, `[...]` is a character class.
inline bool glob_match(std::string_view pattern, std::string_view path) {
  return detail::glob_match_at(pattern, 0, path, 0);
}

struct ScanInput {
  std::filesystem::path path;
  std::string project;
};

struct DiscoveryOptions {
  std::vector<std::string> include = {"**/*.java"};
  std::vector<std::string> exclude;
  /// Treat each immediate subdirectory of a root as its own project.
  bool per_subdir = false;
};

/// Lists `.java` files under each root, sorted by path. Throws when a root
/// does not exist or cannot be read.
inline std::vector<ScanInput> discover(const std::vector<std::filesystem::path>& roots,
                                       const DiscoveryOptions& options = {}) {
  namespace fs = std::filesystem;
  std::vector<ScanInput> out;
  for (const fs::path& root : roots) {
    std::error_code ec;
    const auto status = fs::status(root, ec);
    if (ec || !fs::exists(status)) throw std::runtime_error(root.string() + ": no such file or directory");
    const fs::path canonical = fs::weakly_canonical(root, ec);
    if (fs::is_regular_file(status)) {
      const std::string parent = canonical.parent_path().filename().string();
      out.push_back({root, parent.empty() ? root.parent_path().string() : parent});
      continue;
    }
    std::string root_name = canonical.filename().string();
    if (root_name.empty()) root_name = canonical.parent_path().filename().string();
    if (root_name.empty()) root_name = root.string();
    fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
    if (ec) throw std::runtime_error(root.string() + ": " + ec.message());
    std::vector<ScanInput> found;
    for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
      if (ec) throw std::runtime_error(root.string() + ": " + ec.message());
      if (!it->is_regular_file(ec)) continue;
      const std::string rel = fs::relative(it->path(), root, ec).generic_string();
      auto matches = [&](const std::vector<std::string>& globs) {
        return std::any_of(globs.begin(), globs.end(), [&](const std::string& g) { return glob_match(g, rel); });
      };
      if (!matches(options.include) || matches(options.exclude)) continue;
      std::string project = root_name;
      if (options.per_subdir) {
        const std::size_t slash = rel.find('/');
        if (slash != std::string::npos) project = rel.substr(0, slash);
      }
      found.push_back({it->path(), project});
    }
    std::sort(found.begin(), found.end(), [](const ScanInput& a, const ScanInput& b) {
      return a.path.generic_string() < b.path.generic_string();
    });
    out.insert(out.end(), found.begin(), found.end());
  }
  return out;
}

/// Analyzes files on `jobs` threads (0 = hardware concurrency). Results come
/// back in input order regardless of scheduling.
inline std::vector<FileAnalysis> analyze_all(const std::vector<ScanInput>& inputs, const AnalysisOptions& options,
                                             unsigned jobs = 0) {
  std::vector<FileAnalysis> results(inputs.size());
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(1, inputs.size())));
  // Force the shared lexicon to load before workers start.
  if (options.lexicon == nullptr) (void)Lexicon::builtin();
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      results[i] = analyze_file(inputs[i].path, inputs[i].project, options);
    }
  };
  if (jobs <= 1) {
    worker();
    return results;
  }
  std::vector<std::jthread> threads;
  threads.reserve(jobs);
  for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(worker);
  threads.clear();
  return results;
}

/// Single-owner reduction of per-file results, in input order.
inline CorpusReport build_report(const std::vector<FileAnalysis>& files, bool include_helpers = false) {
  CorpusAccumulator acc(include_helpers);
  for (const FileAnalysis& f : files) {
    CorpusAccumulator part(include_helpers);
    part.add_file(f.project, f.is_test_file, f.diagnostics.size());
    for (const AssertionRecord& r : f.records) part.add(r);
    acc.merge(part);
  }
  return acc.finalize();
}

}  // namespace assertlint
