#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "assertlint/assertlint.hpp"

namespace testing_support {

inline std::string fixture(const std::string& relative) { return std::string(ASSERTLINT_FIXTURES) + "/" + relative; }

/// Wraps statements in a JUnit 4 test class.
inline std::string test_class(const std::string& body, const std::string& extra_members = "") {
  return "import static org.junit.Assert.*;\nimport org.junit.Test;\n"
         "public class T {\n" + extra_members + "  @Test public void t() {\n" + body + "\n  }\n}\n";
}

inline std::vector<assertlint::AssertionSite> sites_of(const std::string& java,
                                                       const assertlint::ExtractorOptions& options = {}) {
  const auto source = assertlint::SourceFile::from_string(java);
  const auto parsed = assertlint::parse_file(source);
  std::vector<assertlint::AssertionSite> out;
  for (const auto& c : parsed.classes) {
    for (auto& s : assertlint::find_assertions(c, source, assertlint::AssertionTable::junit4(), options)) {
      out.push_back(std::move(s));
    }
  }
  return out;
}

/// The single assertion in `statement`.
inline assertlint::AssertionSite site_of(const std::string& statement) {
  auto sites = sites_of(test_class(statement));
  if (sites.size() != 1) throw std::runtime_error("expected one assertion in: " + statement);
  return sites.front();
}

/// Parts of `expr` as the message of `fail(expr)`.
inline assertlint::MessageExpr message_of(const std::string& expr) {
  auto site = site_of("fail(" + expr + ");");
  if (!site.message) throw std::runtime_error("no message in: " + expr);
  return *site.message;
}

inline assertlint::AssertionRecord record_of(const std::string& statement,
                                             const assertlint::AnalysisOptions& options = {}) {
  return assertlint::analyze_site(site_of(statement), "p", "T.java", options);
}

}  // namespace testing_support
