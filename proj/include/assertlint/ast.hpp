#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "assertlint/source.hpp"

namespace assertlint {

enum class ExprKind {
  StringLiteral,
  CharLiteral,
  NumericLiteral,
  BooleanLiteral,
  NullLiteral,
  Identifier,
  FieldAccess,
  MethodCall,
  BinaryConcat,
  Other,
};

inline const char* to_string(ExprKind kind) {
  switch (kind) {
    case ExprKind::StringLiteral: return "StringLiteral";
    case ExprKind::CharLiteral: return "CharLiteral";
    case ExprKind::NumericLiteral: return "NumericLiteral";
    case ExprKind::BooleanLiteral: return "BooleanLiteral";
    case ExprKind::NullLiteral: return "NullLiteral";
    case ExprKind::Identifier: return "Identifier";
    case ExprKind::FieldAccess: return "FieldAccess";
    case ExprKind::MethodCall: return "MethodCall";
    case ExprKind::BinaryConcat: return "BinaryConcat";
    case ExprKind::Other: return "Other";
  }
  return "?";
}

struct CallExpr;

/// Expression tree node.
///
/// Which members are meaningful depends on `kind`:
///   - literals: `text` holds the decoded string/char value or the raw numeric,
///     boolean or null spelling;
///   - Identifier: `text` is the name;
///   - FieldAccess: `chain` holds the dotted segments (`obj.field` -> {obj, field});
///   - MethodCall: `calls` holds exactly one CallExpr;
///   - BinaryConcat: `operands` holds exactly {left, right};
///   - Other: `text` is the raw source slice, `operands` the sub-expressions the
///     parser recovered (including calls found inside lambda and anonymous class
///     bodies, wrapped as MethodCall nodes).
struct Expr {
  ExprKind kind = ExprKind::Other;
  std::string text;
  std::vector<std::string> chain;
  std::vector<CallExpr> calls;
  std::vector<Expr> operands;
  SourceRange range;

  const CallExpr& call() const { return calls.front(); }
  const Expr& left() const { return operands.at(0); }
  const Expr& right() const { return operands.at(1); }
};

/// One method invocation `receiver.a.b(args)`.
///
/// `callee` holds the dotted name segments written before `(`; when the
/// qualifier is itself a non-name expression (`foo().bar()`, `new X().y()`),
/// it is kept in `receiver` and `callee` holds only the trailing names.
struct CallExpr {
  std::vector<Expr> receiver;  // zero or one element
  std::vector<std::string> callee;
  std::vector<Expr> args;
  /// Start of the method-name token that directly precedes `(`.
  Location location;
  SourceRange range;

  const std::string& name() const { return callee.back(); }
  bool has_receiver() const { return !receiver.empty(); }

  /// Dotted qualifier in front of the method name, empty when unqualified.
  std::string qualifier() const {
    std::string out;
    for (std::size_t i = 0; i + 1 < callee.size(); ++i) {
      if (!out.empty()) out.push_back('.');
      out += callee[i];
    }
    return out;
  }

  std::string callee_text() const {
    std::string out = qualifier();
    if (!out.empty()) out.push_back('.');
    return out + name();
  }
};

struct MethodDecl {
  std::string name;
  std::vector<std::string> annotations;
  /// Outermost call expressions of the body in source order. Calls nested in
  /// receivers, arguments or other expressions hang off these as child Exprs.
  std::vector<CallExpr> body_calls;
  Location location;

  bool has_annotation(std::string_view simple_name) const;
};

struct ClassDecl {
  std::string name;
  std::vector<std::string> annotations;
  std::vector<std::string> imports;
  std::string superclass;
  std::vector<MethodDecl> methods;
  Location location;

  bool has_annotation(std::string_view simple_name) const;
};

namespace detail {

inline bool annotation_matches(std::string_view written, std::string_view simple_name) {
  if (!written.ends_with(simple_name)) return false;
  const std::size_t rest = written.size() - simple_name.size();
  return rest == 0 || written[rest - 1] == '.';
}

}  // namespace detail

inline bool MethodDecl::has_annotation(std::string_view simple_name) const {
  for (const auto& a : annotations) {
    if (detail::annotation_matches(a, simple_name)) return true;
  }
  return false;
}

inline bool ClassDecl::has_annotation(std::string_view simple_name) const {
  for (const auto& a : annotations) {
    if (detail::annotation_matches(a, simple_name)) return true;
  }
  return false;
}

/// Visits every call reachable from `call` (itself first, then receiver, then
/// arguments), depth first.
template <typename Visitor>
void for_each_call(const CallExpr& call, Visitor&& visit);

template <typename Visitor>
void for_each_call(const Expr& expr, Visitor&& visit) {
  for (const auto& c : expr.calls) for_each_call(c, visit);
  for (const auto& e : expr.operands) for_each_call(e, visit);
}

template <typename Visitor>
void for_each_call(const CallExpr& call, Visitor&& visit) {
  visit(call);
  for (const auto& r : call.receiver) for_each_call(r, visit);
  for (const auto& a : call.args) for_each_call(a, visit);
}

/// Left-to-right flattening of nested `+` concatenations.
inline std::vector<Expr> extract_concat_tree(const Expr& e) {
  std::vector<Expr> parts;
  std::vector<const Expr*> stack{&e};
  while (!stack.empty()) {
    const Expr* node = stack.back();
    stack.pop_back();
    if (node->kind == ExprKind::BinaryConcat && node->operands.size() == 2) {
      stack.push_back(&node->operands[1]);
      stack.push_back(&node->operands[0]);
    } else {
      parts.push_back(*node);
    }
  }
  return parts;
}

}  // namespace assertlint
