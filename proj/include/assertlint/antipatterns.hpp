#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <regex>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "assertlint/categorizer.hpp"
#include "assertlint/junit.hpp"
#include "assertlint/pos_tagger.hpp"
#include "assertlint/readability.hpp"
#include "assertlint/source.hpp"

namespace assertlint {

namespace rules {
inline constexpr std::string_view kCodeAsLiteral = "AP1-code-as-literal";
inline constexpr std::string_view kMisleading = "AP2-misleading";
inline constexpr std::string_view kTooShort = "AP3-too-short";
inline constexpr std::string_view kDigitsOnly = "AP4-digits-only";
inline constexpr std::string_view kNoMessage = "NO-MESSAGE";
inline constexpr std::array<std::string_view, 5> kAll = {kCodeAsLiteral, kMisleading, kTooShort, kDigitsOnly,
                                                         kNoMessage};
}  // namespace rules

enum class Severity { Info, Warning };

inline const char* to_string(Severity s) { return s == Severity::Info ? "info" : "warning"; }

inline std::optional<Severity> parse_severity(std::string_view s) {
  if (s == "info") return Severity::Info;
  if (s == "warning") return Severity::Warning;
  return std::nullopt;
}

struct Finding {
  std::string rule_id;
  Severity severity = Severity::Warning;
  Location location;
  std::string excerpt;
  std::string rationale;

  friend bool operator==(const Finding&, const Finding&) = default;
};

/// Resolves a user-supplied rule name (`AP4`, `ap4-digits-only`, `NO-MESSAGE`)
/// to its canonical id.
inline std::optional<std::string_view> resolve_rule(std::string_view name) {
  auto iequals = [](std::string_view a, std::string_view b) {
    return a.size() == b.size() && std::equal(a.begin(), a.end(), b.begin(), [](char x, char y) {
             return std::toupper(static_cast<unsigned char>(x)) == std::toupper(static_cast<unsigned char>(y));
           });
  };
  for (std::string_view id : rules::kAll) {
    if (iequals(id, name)) return id;
    const std::size_t dash = id.find('-');
    if (id.starts_with("AP") && iequals(id.substr(0, dash), name)) return id;
  }
  return std::nullopt;
}

struct RuleConfig {
  /// Canonical ids of disabled rules. NO-MESSAGE is governed by `require_messages`.
  std::set<std::string, std::less<>> disabled;
  int min_words = 2;
  bool require_messages = false;
  const Lexicon* lexicon = nullptr;

  bool enabled(std::string_view id) const {
    if (id == rules::kNoMessage && !require_messages) return false;
    return disabled.find(id) == disabled.end();
  }
};

namespace detail {

inline std::string excerpt_of(std::string_view raw, std::size_t limit = 80) {
  std::string out;
  bool space = false;
  for (char c : raw) {
    if (c == '\n' || c == '\r' || c == '\t') c = ' ';
    if (c == ' ' && space) continue;
    space = c == ' ';
    out.push_back(c);
  }
  if (out.size() > limit) out = out.substr(0, limit - 3) + "...";
  return out;
}

inline std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

/// `ident(.ident)*` with an optional `()`, and either a dot or the parens.
inline bool looks_like_code(std::string_view text) {
  static const std::regex code(R"([A-Za-z_$][A-Za-z0-9_$]*(\.[A-Za-z_$][A-Za-z0-9_$]*)*(\(\))?)");
  const std::string t = trim(text);
  if (!std::regex_match(t, code)) return false;
  return t.find('.') != std::string::npos || t.ends_with("()");
}

inline std::string literal_text(const MessageExpr& message) {
  std::string out;
  for (const Expr& part : message.parts) {
    if (part.kind == ExprKind::StringLiteral || part.kind == ExprKind::CharLiteral) {
      if (!out.empty()) out.push_back(' ');
      out += part.text;
    }
  }
  return out;
}

inline std::vector<std::string> lowered_words(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& token : segment(text).tokens) out.push_back(ascii_lower(token));
  return out;
}

inline bool is_negation(const std::string& token, const Lexicon& lexicon) {
  if (token == "not" || token == "no" || token == "never" || token == "missing" || token == "cannot" ||
      token.ends_with("n't")) {
    return true;
  }
  return token.size() > 4 && token.starts_with("un") && lexicon.contains(token.substr(2));
}

inline bool is_condition_assert(std::string_view kind) {
  return kind == "assertTrue" || kind == "assertFalse" || kind == "assertNull" || kind == "assertNotNull";
}

inline std::vector<std::string> abbreviations(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
  std::vector<std::string> out;
  for (const auto& token : tokens) {
    if (token.size() > 4) continue;
    const bool caps = std::all_of(token.begin(), token.end(),
                                  [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
    if (caps && !lexicon.contains(ascii_lower(token)) &&
        closed_class_words().find(ascii_lower(token)) == closed_class_words().end()) {
      out.push_back(token);
    }
  }
  return out;
}

}  // namespace detail

/// Runs every enabled rule over one assertion site.
inline std::vector<Finding> detect(const AssertionSite& site, const std::optional<MessageCategory>& category,
                                   const RenderedMessage& rendered, const TextMetrics& metrics,
                                   const RuleConfig& config) {
  std::vector<Finding> out;
  const Lexicon& lexicon = config.lexicon != nullptr ? *config.lexicon : Lexicon::builtin();
  auto emit = [&](std::string_view id, Severity severity, std::string rationale) {
    if (!config.enabled(id)) return;
    Finding f;
    f.rule_id = std::string(id);
    f.severity = severity;
    f.location = site.location;
    f.excerpt = site.message ? detail::excerpt_of(site.message->raw_source) : site.assert_kind;
    f.rationale = std::move(rationale);
    out.push_back(std::move(f));
  };

  if (!site.message) {
    emit(rules::kNoMessage, Severity::Warning, site.assert_kind + " has no explanation message");
    return out;
  }
  const bool is_text = category && category->top == TopCategory::Text;
  const bool is_combination = category && category->top == TopCategory::Combination;

  if (is_text && detail::looks_like_code(rendered.text)) {
    emit(rules::kCodeAsLiteral, Severity::Warning,
         "message is a code expression in quotes, not a description of what is expected");
  }

  if ((is_text || is_combination) && detail::is_condition_assert(site.assert_kind) && !site.args.empty()) {
    static const std::set<std::string, std::less<>> stopwords = {"the", "a",    "an",   "is", "are",
                                                                 "was", "were", "be", "been", "of"};
    std::vector<std::string> content;
    bool negated = false;
    for (const auto& token : detail::lowered_words(detail::literal_text(*site.message))) {
      if (detail::is_negation(token, lexicon)) negated = true;
      if (!stopwords.contains(token) && detail::has_letter(token)) content.push_back(token);
    }
    const auto asserted = detail::lowered_words(detail::render_expr(site.args.back()));
    const bool subset = !content.empty() && std::all_of(content.begin(), content.end(), [&](const std::string& t) {
      return std::find(asserted.begin(), asserted.end(), t) != asserted.end();
    });
    if (subset && !negated) {
      emit(rules::kMisleading, Severity::Info,
           "message only restates the asserted expression; it is shown when that expression fails");
    }
  }

  if (is_text && metrics.words < config.min_words) {
    std::string rationale = "message has " + std::to_string(metrics.words) + " word" +
                            (metrics.words == 1 ? "" : "s") + ", fewer than " + std::to_string(config.min_words);
    const auto abbrevs = detail::abbreviations(segment(rendered.text).tokens, lexicon);
    if (!abbrevs.empty()) {
      rationale += "; unexplained abbreviation";
      for (std::size_t i = 0; i < abbrevs.size(); ++i) rationale += (i ? ", " : " ") + abbrevs[i];
    }
    emit(rules::kTooShort, Severity::Warning, std::move(rationale));
  }

  const bool blank = std::all_of(rendered.text.begin(), rendered.text.end(),
                                 [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
  const bool any_letter = std::any_of(rendered.text.begin(), rendered.text.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || u >= 0x80;
  });
  if (!blank && !any_letter) {
    emit(rules::kDigitsOnly, Severity::Warning, "message contains only digits and punctuation");
  }
  return out;
}

}  // namespace assertlint
