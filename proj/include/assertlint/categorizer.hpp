#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "assertlint/ast.hpp"
#include "assertlint/junit.hpp"

namespace assertlint {

enum class TopCategory { Text, Identifier, Combination };

enum class SubCategory {
  None,
  // Identifier
  Method,
  Variable,
  // Combination
  StringPlusVariable,
  StringPlusMethod,
  StringPlusVariablePlusMethod,
  StringPlusDigit,
};

inline const char* to_string(TopCategory c) {
  switch (c) {
    case TopCategory::Text: return "Text";
    case TopCategory::Identifier: return "Identifier";
    case TopCategory::Combination: return "Combination";
  }
  return "?";
}

inline const char* to_string(SubCategory s) {
  switch (s) {
    case SubCategory::None: return "";
    case SubCategory::Method: return "Method";
    case SubCategory::Variable: return "Variable";
    case SubCategory::StringPlusVariable: return "StringPlusVariable";
    case SubCategory::StringPlusMethod: return "StringPlusMethod";
    case SubCategory::StringPlusVariablePlusMethod: return "StringPlusVariablePlusMethod";
    case SubCategory::StringPlusDigit: return "StringPlusDigit";
  }
  return "?";
}

inline std::optional<TopCategory> parse_top_category(std::string_view s) {
  if (s == "Text") return TopCategory::Text;
  if (s == "Identifier") return TopCategory::Identifier;
  if (s == "Combination") return TopCategory::Combination;
  return std::nullopt;
}

inline std::optional<SubCategory> parse_sub_category(std::string_view s) {
  for (auto sub : {SubCategory::None, SubCategory::Method, SubCategory::Variable,
                   SubCategory::StringPlusVariable, SubCategory::StringPlusMethod,
                   SubCategory::StringPlusVariablePlusMethod, SubCategory::StringPlusDigit}) {
    if (s == to_string(sub)) return sub;
  }
  return std::nullopt;
}

struct MessageCategory {
  TopCategory top = TopCategory::Text;
  SubCategory sub = SubCategory::None;
  /// A char literal was treated as text.
  bool has_char_literal = false;

  /// "Text", "Identifier/Method", "Combination/StringPlusDigit", ...
  std::string label() const {
    std::string out = to_string(top);
    if (sub != SubCategory::None) {
      out += '/';
      out += to_string(sub);
    }
    return out;
  }

  friend bool operator==(const MessageCategory& a, const MessageCategory& b) {
    return a.top == b.top && a.sub == b.sub;
  }
};

/// Places a message's concatenation parts into the Text / Identifier /
/// Combination taxonomy. Returns nullopt for messages outside the taxonomy
/// (numeric-only, or built from unmodeled expressions).
inline std::optional<MessageCategory> categorize(const MessageExpr& message) {
  bool any_text = false;
  bool any_char = false;
  bool any_variable = false;
  bool any_method = false;
  bool any_numeric = false;
  bool any_other = false;
  for (const Expr& part : message.parts) {
    switch (part.kind) {
      case ExprKind::StringLiteral: any_text = true; break;
      case ExprKind::CharLiteral:
        any_text = true;
        any_char = true;
        break;
      case ExprKind::Identifier:
      case ExprKind::FieldAccess: any_variable = true; break;
      case ExprKind::MethodCall: any_method = true; break;
      case ExprKind::NumericLiteral: any_numeric = true; break;
      default: any_other = true; break;
    }
  }
  if (message.parts.empty()) return std::nullopt;

  MessageCategory out;
  out.has_char_literal = any_char;
  const bool any_non_text = any_variable || any_method || any_numeric || any_other;
  if (any_text && !any_non_text) {
    out.top = TopCategory::Text;
    return out;
  }
  if (any_text) {
    out.top = TopCategory::Combination;
    if (any_variable && any_method) {
      out.sub = SubCategory::StringPlusVariablePlusMethod;
    } else if (any_method) {
      out.sub = SubCategory::StringPlusMethod;
    } else if (any_numeric && !any_variable && !any_other) {
      out.sub = SubCategory::StringPlusDigit;
    } else {
      out.sub = SubCategory::StringPlusVariable;
    }
    return out;
  }
  if ((any_variable || any_method) && !any_numeric && !any_other) {
    out.top = TopCategory::Identifier;
    out.sub = any_method ? SubCategory::Method : SubCategory::Variable;
    return out;
  }
  return std::nullopt;
}

}  // namespace assertlint
