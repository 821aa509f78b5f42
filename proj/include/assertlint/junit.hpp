#pragma once

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "assertlint/ast.hpp"
#include "assertlint/source.hpp"

namespace assertlint {

// ---------------------------------------------------------------------------
// assertion-method table

/// Overload families of the JUnit 4 `Assert` API, keyed by where the optional
/// message sits for each arity.
enum class OverloadFamily {
  Fail,       // fail() / fail(msg)
  Condition,  // assertTrue(c) / assertTrue(msg, c), also assertNull & friends
  Equality,   // assertEquals(e, a) / (msg, e, a) / (e, a, delta) / (msg, e, a, delta)
  Matcher,    // assertThat(actual, matcher) / assertThat(msg, actual, matcher)
};

inline const char* to_string(OverloadFamily family) {
  switch (family) {
    case OverloadFamily::Fail: return "fail";
    case OverloadFamily::Condition: return "condition";
    case OverloadFamily::Equality: return "equality";
    case OverloadFamily::Matcher: return "matcher";
  }
  return "?";
}

inline std::optional<OverloadFamily> parse_overload_family(std::string_view text) {
  if (text == "fail") return OverloadFamily::Fail;
  if (text == "condition") return OverloadFamily::Condition;
  if (text == "equality") return OverloadFamily::Equality;
  if (text == "matcher") return OverloadFamily::Matcher;
  return std::nullopt;
}

struct AssertionMethod {
  std::string name;
  OverloadFamily family = OverloadFamily::Condition;
};

/// Which call names count as assertions and how their messages are located.
///
/// Override files hold one `name family` pair per line; `#` starts a comment.
/// Families are `fail`, `condition`, `equality` and `matcher`.
class AssertionTable {
 public:
  AssertionTable() = default;
  explicit AssertionTable(std::vector<AssertionMethod> methods) : methods_(std::move(methods)) {}

  /// The JUnit 4 org.junit.Assert API.
  static AssertionTable junit4() {
    return AssertionTable({
        {"assertEquals", OverloadFamily::Equality},
        {"assertTrue", OverloadFamily::Condition},
        {"assertFalse", OverloadFamily::Condition},
        {"assertNull", OverloadFamily::Condition},
        {"assertNotNull", OverloadFamily::Condition},
        {"assertSame", OverloadFamily::Equality},
        {"assertNotSame", OverloadFamily::Equality},
        {"assertArrayEquals", OverloadFamily::Equality},
        {"assertThat", OverloadFamily::Matcher},
        {"fail", OverloadFamily::Fail},
    });
  }

  static AssertionTable parse(std::string_view text) {
    std::vector<AssertionMethod> methods;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream fields(line);
      std::string name, family;
      if (!(fields >> name)) continue;
      if (!(fields >> family)) {
        throw std::runtime_error("assertion table line " + std::to_string(line_no) +
                                 ": missing overload family for '" + name + "'");
      }
      const auto parsed = parse_overload_family(family);
      if (!parsed) {
        throw std::runtime_error("assertion table line " + std::to_string(line_no) +
                                 ": unknown overload family '" + family + "'");
      }
      methods.push_back({name, *parsed});
    }
    return AssertionTable(std::move(methods));
  }

  static AssertionTable load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read assertion table " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str());
  }

  const AssertionMethod* find(std::string_view name) const {
    for (const auto& m : methods_) {
      if (m.name == name) return &m;
    }
    return nullptr;
  }

  bool contains(std::string_view name) const { return find(name) != nullptr; }
  const std::vector<AssertionMethod>& methods() const { return methods_; }

 private:
  std::vector<AssertionMethod> methods_;
};

// ---------------------------------------------------------------------------
// options

inline constexpr std::string_view kDefaultTolerancePattern = "(?i)(eps|epsilon|delta|tol|tolerance).*";

/// Full-match name test for tolerance-like identifiers. A leading `(?i)`
/// makes the match case-insensitive.
class ToleranceMatcher {
 public:
  ToleranceMatcher() : ToleranceMatcher(kDefaultTolerancePattern) {}
  explicit ToleranceMatcher(std::string_view pattern) : pattern_(pattern) {
    auto flags = std::regex::ECMAScript;
    std::string body(pattern);
    if (body.starts_with("(?i)")) {
      body.erase(0, 4);
      flags |= std::regex::icase;
    }
    regex_ = std::regex(body, flags);
  }

  bool matches(std::string_view name) const {
    return std::regex_match(name.begin(), name.end(), regex_);
  }
  const std::string& pattern() const { return pattern_; }

 private:
  std::string pattern_;
  std::regex regex_;
};

struct ExtractorOptions {
  ToleranceMatcher tolerance;
  /// Only accept `assertX(...)`/`Assert.assertX(...)` when the file imports org.junit.
  bool require_junit_import = false;
};

// ---------------------------------------------------------------------------
// test file classification

enum class TestEvidence { Junit4Import, TestAnnotation, RunWithAnnotation, ExtendsTestCase };

inline const char* to_string(TestEvidence e) {
  switch (e) {
    case TestEvidence::Junit4Import: return "junit4-import";
    case TestEvidence::TestAnnotation: return "@Test";
    case TestEvidence::RunWithAnnotation: return "@RunWith";
    case TestEvidence::ExtendsTestCase: return "extends-TestCase";
  }
  return "?";
}

struct TestClassification {
  bool is_test_file = false;
  std::vector<TestEvidence> evidence;
};

inline bool is_junit4_import(std::string_view path) {
  return path.starts_with("org.junit.") && !path.starts_with("org.junit.jupiter");
}

inline bool has_junit4_import(const ClassDecl& c) {
  return std::any_of(c.imports.begin(), c.imports.end(),
                     [](const std::string& i) { return is_junit4_import(i); });
}

inline TestClassification classify_test_file(const ClassDecl& c) {
  TestClassification out;
  if (has_junit4_import(c)) out.evidence.push_back(TestEvidence::Junit4Import);
  if (std::any_of(c.methods.begin(), c.methods.end(),
                  [](const MethodDecl& m) { return m.has_annotation("Test"); })) {
    out.evidence.push_back(TestEvidence::TestAnnotation);
  }
  if (c.has_annotation("RunWith")) out.evidence.push_back(TestEvidence::RunWithAnnotation);
  if (c.superclass == "TestCase" || c.superclass.ends_with(".TestCase")) {
    out.evidence.push_back(TestEvidence::ExtendsTestCase);
  }
  out.is_test_file = !out.evidence.empty();
  return out;
}

// ---------------------------------------------------------------------------
// assertion sites

struct MessageExpr {
  std::vector<Expr> parts;
  std::string raw_source;
};

struct AssertionSite {
  std::string assert_kind;
  std::vector<Expr> args;
  std::vector<std::string> arg_sources;
  std::optional<MessageExpr> message;
  bool unknown_overload = false;
  Location location;
  std::string enclosing_method;
  Location method_location;
  std::string enclosing_class;
  bool in_test_method = false;
};

struct MessageResolution {
  std::optional<MessageExpr> message;
  bool unknown_overload = false;
};

namespace detail {

inline bool is_numeric_literal(const Expr& e) { return e.kind == ExprKind::NumericLiteral; }

inline bool is_tolerance_name(const Expr& e, const ToleranceMatcher& tolerance) {
  if (e.kind == ExprKind::Identifier) return tolerance.matches(e.text);
  if (e.kind == ExprKind::FieldAccess && !e.chain.empty()) return tolerance.matches(e.chain.back());
  return false;
}

inline bool is_string_like(const Expr& e) {
  if (e.kind == ExprKind::StringLiteral) return true;
  if (e.kind != ExprKind::BinaryConcat) return false;
  const auto parts = extract_concat_tree(e);
  return std::any_of(parts.begin(), parts.end(),
                     [](const Expr& p) { return p.kind == ExprKind::StringLiteral; });
}

/// Trailing arguments that look like `(expected, actual, delta)`.
inline bool has_delta_tail(const Expr& second, const Expr& third, const ToleranceMatcher& tolerance) {
  const bool both_numeric = is_numeric_literal(second) && is_numeric_literal(third);
  return both_numeric || is_numeric_literal(third) || is_tolerance_name(third, tolerance);
}

}  // namespace detail

/// Applies the JUnit 4 overload rules to pick the message argument.
///
/// For three-argument equality asserts the message-vs-delta ambiguity is
/// settled syntactically: a string-like first argument is always a message;
/// otherwise a numeric or tolerance-named tail means the delta overload,
/// except when the first argument is a method call, which is read as a
/// message (`assertEquals(r.getLowerBound(), 1.0, EPSILON)`).
inline MessageResolution resolve_message(const AssertionSite& site, const AssertionTable& table,
                                         const ExtractorOptions& options = {}) {
  MessageResolution out;
  const AssertionMethod* method = table.find(site.assert_kind);
  if (method == nullptr) {
    out.unknown_overload = true;
    return out;
  }
  const std::size_t arity = site.args.size();
  bool has_message = false;
  switch (method->family) {
    case OverloadFamily::Fail:
      if (arity > 1) out.unknown_overload = true;
      has_message = arity == 1;
      break;
    case OverloadFamily::Condition:
      if (arity < 1 || arity > 2) out.unknown_overload = true;
      has_message = arity == 2;
      break;
    case OverloadFamily::Matcher:
      if (arity < 2 || arity > 3) out.unknown_overload = true;
      has_message = arity == 3;
      break;
    case OverloadFamily::Equality:
      if (arity == 3) {
        const Expr& first = site.args[0];
        if (detail::is_string_like(first)) {
          has_message = true;
        } else {
          const bool delta = detail::has_delta_tail(site.args[1], site.args[2], options.tolerance);
          has_message = !delta || first.kind == ExprKind::MethodCall;
        }
      } else if (arity == 4) {
        has_message = true;
      } else if (arity != 2) {
        out.unknown_overload = true;
      }
      break;
  }
  if (has_message && !out.unknown_overload) {
    MessageExpr message;
    message.parts = extract_concat_tree(site.args[0]);
    message.raw_source = site.arg_sources.empty() ? std::string{} : site.arg_sources[0];
    out.message = std::move(message);
  }
  return out;
}

/// Collects every JUnit assertion call in `c`, including calls nested in
/// arguments, lambdas and anonymous classes, ordered by source position.
/// True when `name` is explicitly imported from a class other than the JUnit
/// assertion classes, e.g. AssertJ's `assertThat`.
inline bool imported_elsewhere(const ClassDecl& c, std::string_view name) {
  for (const std::string& path : c.imports) {
    const std::size_t dot = path.rfind('.');
    if (dot == std::string::npos || std::string_view(path).substr(dot + 1) != name) continue;
    const std::string_view owner = std::string_view(path).substr(0, dot);
    if (owner != "org.junit.Assert" && owner != "junit.framework.Assert" && owner != "junit.framework.TestCase") {
      return true;
    }
  }
  return false;
}

inline std::vector<AssertionSite> find_assertions(const ClassDecl& c, const SourceFile& source,
                                                  const AssertionTable& table,
                                                  const ExtractorOptions& options = {}) {
  std::vector<AssertionSite> sites;
  const bool imports_junit = has_junit4_import(c);
  for (const MethodDecl& method : c.methods) {
    const bool is_test = method.has_annotation("Test");
    auto visit = [&](const CallExpr& call) {
      if (call.has_receiver() || !table.contains(call.name())) return;
      const std::string qualifier = call.qualifier();
      if (!qualifier.empty() && qualifier != "Assert" && qualifier != "org.junit.Assert") return;
      if (qualifier.empty() && imported_elsewhere(c, call.name())) return;
      if (options.require_junit_import && qualifier != "org.junit.Assert" && !imports_junit) return;
      AssertionSite site;
      site.assert_kind = call.name();
      site.args = call.args;
      for (const auto& a : call.args) site.arg_sources.emplace_back(source.slice(a.range));
      site.location = call.location;
      site.enclosing_method = method.name;
      site.method_location = method.location;
      site.enclosing_class = c.name;
      site.in_test_method = is_test;
      MessageResolution resolution = resolve_message(site, table, options);
      site.message = std::move(resolution.message);
      site.unknown_overload = resolution.unknown_overload;
      sites.push_back(std::move(site));
    };
    for (const CallExpr& call : method.body_calls) for_each_call(call, visit);
  }
  std::stable_sort(sites.begin(), sites.end(),
                   [](const AssertionSite& a, const AssertionSite& b) { return a.location < b.location; });
  return sites;
}

}  // namespace assertlint
