#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "assertlint/ast.hpp"
#include "assertlint/diagnostic.hpp"
#include "assertlint/lexer.hpp"
#include "assertlint/source.hpp"

namespace assertlint {

struct ParseResult {
  std::vector<ClassDecl> classes;
  std::vector<Diagnostic> diagnostics;
  /// Set when the file has unbalanced braces; `classes` then holds whatever
  /// was recovered before the structural error.
  bool partial = false;
};

namespace detail {

inline constexpr std::array<std::string_view, 17> kModifiers = {
    "public", "protected", "private", "static", "final", "abstract", "native", "synchronized",
    "transient", "volatile", "strictfp", "default", "sealed", "non-sealed", "open", "transitive",
    "const"};

inline constexpr std::array<std::string_view, 9> kPrimitiveTypes = {
    "int", "long", "short", "byte", "char", "boolean", "float", "double", "void"};

inline bool contains(auto const& table, std::string_view word) {
  return std::find(table.begin(), table.end(), word) != table.end();
}

/// Recursive-descent recognizer for the subset of Java needed to recover
/// class/method structure and call expressions with argument trees.
class JavaParser {
 public:
  JavaParser(const SourceFile& source, LexResult lexed)
      : source_(source), tokens_(std::move(lexed.tokens)) {
    result_.diagnostics = std::move(lexed.diagnostics);
    match_brackets();
  }

  ParseResult run() {
    while (!at_end()) {
      const std::size_t before = pos_;
      if (peek().is_op(";")) {
        advance();
      } else if (peek().is_ident("package")) {
        skip_past_semicolon();
      } else if (peek().is_ident("import")) {
        parse_import();
      } else if (peek().is_op("}")) {
        error(peek(), "unbalanced braces: unexpected '}'");
        result_.partial = true;
        advance();
      } else {
        std::vector<std::string> annotations = parse_modifiers();
        if (is_type_decl_start()) {
          if (!parse_type_decl(std::move(annotations))) break;
        } else if (pos_ == before) {
          advance();
        }
      }
      if (pos_ == before) advance();
    }
    for (auto& c : result_.classes) c.imports = imports_;
    return std::move(result_);
  }

 private:
  static constexpr std::size_t kNoMatch = static_cast<std::size_t>(-1);
  static constexpr int kMaxDepth = 200;

  // ---------------------------------------------------------------------
  // token helpers

  const Token& peek(std::size_t k = 0) const {
    const std::size_t i = std::min(pos_ + k, tokens_.size() - 1);
    return tokens_[i];
  }
  const Token& advance() {
    const Token& t = tokens_[pos_];
    if (pos_ + 1 < tokens_.size()) ++pos_;
    return t;
  }
  bool at_end() const { return tokens_[pos_].kind == TokenKind::End; }
  bool accept_op(std::string_view op) {
    if (peek().is_op(op)) {
      advance();
      return true;
    }
    return false;
  }
  bool adjacent(std::size_t a, std::size_t b) const {
    return tokens_[a].range.end == tokens_[b].range.begin;
  }
  void error(const Token& at, std::string message) {
    result_.diagnostics.push_back(
        {DiagnosticKind::ParseError, source_.location(at.range.begin), std::move(message)});
  }

  SourceRange range_from(std::size_t first_token) const {
    const std::size_t last = pos_ > first_token ? pos_ - 1 : first_token;
    return SourceRange{tokens_[first_token].range.begin, tokens_[last].range.end};
  }

  void match_brackets() {
    match_.assign(tokens_.size(), kNoMatch);
    std::vector<std::size_t> parens, brackets, braces;
    for (std::size_t i = 0; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.kind != TokenKind::Operator) continue;
      auto close = [&](std::vector<std::size_t>& stack) {
        if (!stack.empty()) {
          match_[stack.back()] = i;
          match_[i] = stack.back();
          stack.pop_back();
        }
      };
      if (t.text == "(") parens.push_back(i);
      else if (t.text == "[") brackets.push_back(i);
      else if (t.text == "{") braces.push_back(i);
      else if (t.text == ")") close(parens);
      else if (t.text == "]") close(brackets);
      else if (t.text == "}") close(braces);
    }
  }

  /// Skips a balanced (), [] or {} group starting at the current opener.
  void skip_group() {
    const std::size_t m = match_[pos_];
    if (m == kNoMatch) {
      // Unmatched opener: consume it alone so callers keep making progress.
      advance();
      return;
    }
    pos_ = m;
    advance();
  }

  bool at_opener() const {
    return peek().is_op("(") || peek().is_op("[") || peek().is_op("{");
  }

  /// Skips a `<...>` type-argument list. Returns false (and leaves pos_
  /// untouched) when the angle brackets do not close as a type list.
  bool skip_type_args() {
    const std::size_t end = match_type_args(pos_);
    if (end == kNoMatch) return false;
    pos_ = end;
    return true;
  }

  /// Returns the token index just past a `<...>` list starting at `i`, or kNoMatch.
  std::size_t match_type_args(std::size_t i) const {
    if (!tokens_[i].is_op("<")) return kNoMatch;
    int depth = 0;
    for (; i < tokens_.size(); ++i) {
      const Token& t = tokens_[i];
      if (t.is_op("<")) {
        ++depth;
      } else if (t.is_op(">")) {
        if (--depth == 0) return i + 1;
      } else if (t.is_op(">=") || t.is_op(">>>=")) {
        return kNoMatch;
      } else if (t.kind == TokenKind::Identifier || t.is_op(",") || t.is_op(".") || t.is_op("?") ||
                 t.is_op("&") || t.is_op("[") || t.is_op("]") || t.is_op("@")) {
        continue;
      } else {
        return kNoMatch;
      }
    }
    return kNoMatch;
  }

  /// Returns the index just past a type starting at `i` (annotations, dotted
  /// name, type arguments, array dimensions), or kNoMatch.
  std::size_t match_type(std::size_t i) const {
    while (tokens_[i].is_op("@") && tokens_[i + 1].is_ident()) {
      i += 2;
      while (tokens_[i].is_op(".") && tokens_[i + 1].is_ident()) i += 2;
      if (tokens_[i].is_op("(") && match_[i] != kNoMatch) i = match_[i] + 1;
    }
    if (!tokens_[i].is_ident()) return kNoMatch;
    ++i;
    for (;;) {
      if (tokens_[i].is_op("<")) {
        const std::size_t end = match_type_args(i);
        if (end == kNoMatch) return kNoMatch;
        i = end;
      }
      if (tokens_[i].is_op(".") && tokens_[i + 1].is_ident()) {
        i += 2;
        continue;
      }
      break;
    }
    while (tokens_[i].is_op("[") && tokens_[i + 1].is_op("]")) i += 2;
    return i;
  }

  void skip_past_semicolon() {
    while (!at_end()) {
      if (peek().is_op(";")) {
        advance();
        return;
      }
      if (peek().is_op("}")) return;
      if (at_opener()) {
        skip_group();
      } else {
        advance();
      }
    }
  }

  /// Statement-level recovery: skip to the next `;` (consumed) or to a `}`
  /// closing the enclosing block (not consumed), stepping over balanced groups.
  void recover_statement() {
    skip_past_semicolon();
  }

  // ---------------------------------------------------------------------
  // declarations

  void parse_import() {
    advance();  // import
    if (peek().is_ident("static")) advance();
    std::string path;
    while (!at_end() && !peek().is_op(";")) {
      if (peek().is_op("}") || peek().is_op("{")) return;
      path += advance().text;
    }
    accept_op(";");
    imports_.push_back(std::move(path));
  }

  std::vector<std::string> parse_modifiers() {
    std::vector<std::string> annotations;
    for (;;) {
      if (peek().is_op("@") && peek(1).is_ident() && !peek(1).is_ident("interface")) {
        advance();
        std::string name = advance().text;
        while (peek().is_op(".") && peek(1).is_ident()) {
          advance();
          name += "." + advance().text;
        }
        if (peek().is_op("(")) skip_group();
        annotations.push_back(std::move(name));
      } else if (peek().is_ident("non") && peek(1).is_op("-") && peek(2).is_ident("sealed")) {
        advance();
        advance();
        advance();
      } else if (peek().is_ident() && contains(kModifiers, peek().text) &&
                 !(peek().is_ident("default") && (peek(1).is_op(":") || peek(1).is_op("->")))) {
        advance();
      } else {
        return annotations;
      }
    }
  }

  bool is_type_decl_start() const {
    const Token& t = peek();
    if (t.is_op("@") && peek(1).is_ident("interface")) return true;
    if (t.is_ident("class") || t.is_ident("interface") || t.is_ident("enum")) {
      return peek(1).is_ident();
    }
    if (t.is_ident("record")) return peek(1).is_ident() && (peek(2).is_op("(") || peek(2).is_op("<"));
    return false;
  }

  /// Parses a class/interface/enum/record/annotation declaration. Returns
  /// false if the body ran off the end of the file.
  bool parse_type_decl(std::vector<std::string> annotations) {
    if (++depth_ > kMaxDepth) {
      --depth_;
      skip_to_body_and_skip();
      return true;
    }
    bool is_enum = peek().is_ident("enum");
    if (peek().is_op("@")) advance();
    advance();  // class / interface / enum / record
    ClassDecl decl;
    decl.annotations = std::move(annotations);
    decl.location = source_.location(peek().range.begin);
    decl.name = advance().text;
    if (peek().is_op("<")) skip_type_args();
    if (peek().is_op("(")) skip_group();
    while (!at_end() && !peek().is_op("{")) {
      if (peek().is_op(";") || peek().is_op("}")) {
        --depth_;
        return true;
      }
      if (peek().is_ident("extends") && decl.superclass.empty()) {
        advance();
        if (peek().is_ident()) {
          decl.superclass = advance().text;
          while (peek().is_op(".") && peek(1).is_ident()) {
            advance();
            decl.superclass += "." + advance().text;
          }
        }
        if (peek().is_op("<")) skip_type_args();
        continue;
      }
      if (peek().is_op("(") || peek().is_op("[")) {
        skip_group();
      } else {
        advance();
      }
    }
    const std::size_t slot = result_.classes.size();
    result_.classes.emplace_back();
    const bool closed = parse_class_body(decl, is_enum);
    result_.classes[slot] = std::move(decl);
    --depth_;
    if (!closed) {
      error(tokens_.back(), "unbalanced braces: missing '}' at end of file");
      result_.partial = true;
    }
    return closed;
  }

  void skip_to_body_and_skip() {
    while (!at_end() && !peek().is_op("{")) advance();
    if (!at_end()) skip_group();
  }

  /// Parses `{ members }`. Returns false when the end of file is reached
  /// before the closing brace.
  bool parse_class_body(ClassDecl& decl, bool is_enum) {
    if (!accept_op("{")) return !at_end();
    if (is_enum) skip_enum_constants();
    for (;;) {
      if (at_end()) return false;
      if (accept_op("}")) return true;
      const std::size_t before = pos_;
      if (accept_op(";")) continue;
      std::vector<std::string> annotations = parse_modifiers();
      if (peek().is_op("{")) {
        // Instance or static initializer block; its calls belong to no method.
        std::vector<CallExpr> ignored;
        if (!parse_block(ignored)) return false;
      } else if (is_type_decl_start()) {
        if (!parse_type_decl(std::move(annotations))) return false;
      } else if (!at_end() && !peek().is_op("}")) {
        if (!parse_member(decl, std::move(annotations))) return false;
      }
      if (pos_ == before) advance();
    }
  }

  void skip_enum_constants() {
    while (!at_end()) {
      if (peek().is_op(";")) {
        advance();
        return;
      }
      if (peek().is_op("}")) return;
      if (at_opener()) {
        skip_group();
      } else {
        advance();
      }
    }
  }

  /// Parses a field, method or constructor. Returns false on end of file
  /// inside a method body.
  bool parse_member(ClassDecl& decl, std::vector<std::string> annotations) {
    if (peek().is_op("<")) skip_type_args();
    while (!at_end()) {
      const Token& t = peek();
      if (t.is_op("(")) {
        const Token& name_token = tokens_[pos_ > 0 ? pos_ - 1 : 0];
        MethodDecl method;
        method.name = name_token.is_ident() ? name_token.text : std::string{};
        method.annotations = std::move(annotations);
        method.location = source_.location(name_token.range.begin);
        skip_group();
        while (!at_end() && !peek().is_op("{") && !peek().is_op(";") && !peek().is_op("}")) {
          if (peek().is_ident("default")) {
            skip_past_semicolon();
            decl.methods.push_back(std::move(method));
            return true;
          }
          if (at_opener()) {
            skip_group();
          } else {
            advance();
          }
        }
        bool closed = true;
        if (peek().is_op("{")) {
          closed = parse_block(method.body_calls);
        } else {
          accept_op(";");
        }
        if (!method.name.empty()) decl.methods.push_back(std::move(method));
        return closed;
      }
      if (t.is_op("=")) {
        advance();
        std::vector<CallExpr> ignored;
        parse_variable_initializers(ignored);
        return true;
      }
      if (t.is_op(";")) {
        advance();
        return true;
      }
      if (t.is_op("}")) return true;
      if (t.is_op("{")) {
        const Token& prev = tokens_[pos_ > 0 ? pos_ - 1 : 0];
        if (prev.is_ident(decl.name)) {
          // Compact record constructor.
          MethodDecl method;
          method.name = prev.text;
          method.annotations = std::move(annotations);
          method.location = source_.location(prev.range.begin);
          const bool closed = parse_block(method.body_calls);
          decl.methods.push_back(std::move(method));
          return closed;
        }
        skip_group();
        return true;
      }
      if (t.is_op("<")) {
        if (!skip_type_args()) advance();
        continue;
      }
      if (t.is_op("[")) {
        skip_group();
        continue;
      }
      advance();
    }
    return true;
  }

  // ---------------------------------------------------------------------
  // statements

  /// Parses `{ statements }` appending outermost calls to `calls`. Returns
  /// false when the block is not closed before end of file.
  bool parse_block(std::vector<CallExpr>& calls) {
    if (!accept_op("{")) return true;
    if (++depth_ > kMaxDepth) {
      --depth_;
      const std::size_t open = pos_ - 1;
      error(tokens_[open], "blocks nested too deeply");
      if (match_[open] == kNoMatch) {
        pos_ = tokens_.size() - 1;
        return false;
      }
      pos_ = match_[open];
      advance();
      return true;
    }
    bool closed = false;
    while (!at_end()) {
      if (accept_op("}")) {
        closed = true;
        break;
      }
      const std::size_t before = pos_;
      parse_statement(calls);
      if (pos_ == before) {
        error(peek(), "unexpected token '" + peek().text + "'");
        advance();
      }
    }
    --depth_;
    return closed;
  }

  void parse_statement(std::vector<CallExpr>& calls) {
    const Token& t = peek();
    if (t.is_op("{")) {
      parse_block(calls);
      return;
    }
    if (t.is_op(";")) {
      advance();
      return;
    }
    if (t.is_op("}")) return;
    if (t.kind == TokenKind::Identifier) {
      const std::string& w = t.text;
      if (w == "if" || w == "while" || w == "switch" || w == "synchronized") {
        advance();
        if (peek().is_op("(")) parse_parenthesized(calls);
        return;
      }
      if (w == "else" || w == "do" || w == "finally") {
        advance();
        return;
      }
      if (w == "try") {
        advance();
        if (peek().is_op("(")) parse_header_segments(calls);
        return;
      }
      if (w == "for") {
        advance();
        if (peek().is_op("(")) parse_header_segments(calls);
        return;
      }
      if (w == "catch") {
        advance();
        if (peek().is_op("(")) skip_group();
        return;
      }
      if (w == "return" || w == "throw" ||
          (w == "yield" && !peek(1).is_op("=") && !peek(1).is_op("(") && !peek(1).is_op("."))) {
        advance();
        if (!peek().is_op(";")) parse_expression_statement(calls);
        else advance();
        return;
      }
      if (w == "assert") {
        advance();
        collect(parse_expression(), calls);
        if (accept_op(":")) collect(parse_expression(), calls);
        if (!accept_op(";")) recover_statement();
        return;
      }
      if (w == "case") {
        advance();
        skip_case_label();
        return;
      }
      if (w == "default" && (peek(1).is_op(":") || peek(1).is_op("->"))) {
        advance();
        advance();
        return;
      }
      if (w == "break" || w == "continue") {
        skip_past_semicolon();
        return;
      }
      if (peek(1).is_op(":") && !contains(kPrimitiveTypes, w)) {
        advance();  // label
        advance();
        return;
      }
    }
    if (t.is_op("@") || (t.is_ident() && contains(kModifiers, t.text))) {
      std::vector<std::string> annotations = parse_modifiers();
      if (is_type_decl_start()) {
        parse_type_decl(std::move(annotations));
        return;
      }
      if (looks_like_local_decl()) {
        parse_local_decl(calls);
      } else {
        parse_expression_statement(calls);
      }
      return;
    }
    if (is_type_decl_start()) {
      parse_type_decl({});
      return;
    }
    if (looks_like_local_decl()) {
      parse_local_decl(calls);
      return;
    }
    parse_expression_statement(calls);
  }

  void parse_expression_statement(std::vector<CallExpr>& calls) {
    const std::size_t start = pos_;
    collect(parse_expression(), calls);
    if (accept_op(";")) return;
    if (peek().is_op("}") || peek().is_op(")")) {
      // Case-arrow expression bodies and lambda bodies end without ';'.
      if (peek().is_op(")")) {
        error(peek(), "unbalanced ')'");
        advance();
      }
      return;
    }
    if (pos_ == start || !at_end()) {
      error(peek(), "expected ';'");
      recover_statement();
    }
  }

  void skip_case_label() {
    while (!at_end()) {
      if (peek().is_op(":") || peek().is_op("->")) {
        advance();
        return;
      }
      if (peek().is_op(";") || peek().is_op("}") || peek().is_op("{")) return;
      if (peek().is_op("(") || peek().is_op("[")) {
        skip_group();
      } else {
        advance();
      }
    }
  }

  void parse_parenthesized(std::vector<CallExpr>& calls) {
    const std::size_t open = pos_;
    advance();
    collect(parse_expression(), calls);
    if (!accept_op(")")) {
      if (match_[open] != kNoMatch && match_[open] >= pos_) {
        pos_ = match_[open];
        advance();
      }
    }
  }

  /// `for (...)` and try-with-resources headers: `;`/`:`-separated segments
  /// of local declarations or expression lists.
  void parse_header_segments(std::vector<CallExpr>& calls) {
    const std::size_t open = pos_;
    const std::size_t close = match_[open];
    advance();
    while (!at_end() && pos_ != close) {
      const std::size_t before = pos_;
      if (peek().is_op(";") || peek().is_op(":") || peek().is_op(",")) {
        advance();
        continue;
      }
      parse_modifiers();
      if (looks_like_local_decl()) {
        parse_type_and_declarators(calls, /*in_header=*/true);
      } else {
        collect(parse_expression(), calls);
      }
      if (pos_ == before) advance();
      if (close == kNoMatch && (peek().is_op("{") || peek().is_op(";"))) break;
    }
    if (close != kNoMatch && pos_ == close) advance();
  }

  bool looks_like_local_decl() const {
    const Token& t = peek();
    if (!t.is_ident()) return false;
    static constexpr std::array<std::string_view, 10> kNotTypes = {
        "new", "this", "super", "return", "throw", "true", "false", "null", "instanceof", "yield"};
    if (contains(kNotTypes, t.text)) return false;
    const std::size_t end = match_type(pos_);
    if (end == kNoMatch) return false;
    const Token& name = tokens_[end];
    if (!name.is_ident() || name.text == "instanceof") return false;
    const Token& after = tokens_[end + 1];
    return after.is_op("=") || after.is_op(";") || after.is_op(",") || after.is_op(":") ||
           after.is_op("[") || after.is_op(")");
  }

  void parse_local_decl(std::vector<CallExpr>& calls) {
    parse_type_and_declarators(calls, /*in_header=*/false);
  }

  void parse_type_and_declarators(std::vector<CallExpr>& calls, bool in_header) {
    pos_ = match_type(pos_);
    for (;;) {
      if (!peek().is_ident()) break;
      advance();
      while (peek().is_op("[") && peek(1).is_op("]")) {
        advance();
        advance();
      }
      if (accept_op("=")) {
        if (peek().is_op("{")) {
          collect(parse_array_initializer(), calls);
        } else {
          collect(parse_expression(), calls);
        }
      }
      if (!accept_op(",")) break;
    }
    if (in_header) return;
    if (!accept_op(";")) {
      if (peek().is_op("}")) return;
      error(peek(), "expected ';' after declaration");
      recover_statement();
    }
  }

  void parse_variable_initializers(std::vector<CallExpr>& calls) {
    for (;;) {
      if (peek().is_op("{")) {
        collect(parse_array_initializer(), calls);
      } else {
        collect(parse_expression(), calls);
      }
      if (accept_op(",")) {
        // next declarator: name [dims] [= init]
        if (peek().is_ident()) advance();
        while (peek().is_op("[") && peek(1).is_op("]")) {
          advance();
          advance();
        }
        if (accept_op("=")) continue;
        if (peek().is_op(",")) continue;
      }
      break;
    }
    if (!accept_op(";")) recover_statement();
  }

  /// Adds the outermost calls of `e` to `calls`.
  static void collect(const Expr& e, std::vector<CallExpr>& calls) {
    if (e.kind == ExprKind::MethodCall) {
      calls.push_back(e.call());
      return;
    }
    for (const auto& c : e.calls) calls.push_back(c);
    for (const auto& o : e.operands) collect(o, calls);
  }

  // ---------------------------------------------------------------------
  // expressions

  Expr make(ExprKind kind, std::size_t first_token) const {
    Expr e;
    e.kind = kind;
    e.range = range_from(first_token);
    if (kind == ExprKind::Other) e.text = std::string(source_.slice(e.range));
    return e;
  }

  Expr other(std::size_t first_token, std::vector<Expr> operands) const {
    Expr e = make(ExprKind::Other, first_token);
    e.operands = std::move(operands);
    return e;
  }

  /// Consumes one token (or balanced group) as an opaque Other node.
  Expr opaque() {
    const std::size_t start = pos_;
    if (at_opener()) {
      skip_group();
    } else if (!at_end()) {
      advance();
    }
    return make(ExprKind::Other, start);
  }

  struct DepthGuard {
    int& depth;
    explicit DepthGuard(int& d) : depth(d) { ++depth; }
    ~DepthGuard() { --depth; }
    bool exceeded() const { return depth > kMaxDepth; }
  };

  Expr parse_expression() {
    DepthGuard guard(depth_);
    if (guard.exceeded()) {
      error(peek(), "expression nested too deeply");
      return opaque();
    }
    if (is_lambda_start()) return parse_lambda();
    const std::size_t start = pos_;
    Expr lhs = parse_ternary();
    if (is_assignment_operator()) {
      Expr rhs = parse_expression();
      return other(start, {std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  bool is_assignment_operator() {
    const Token& t = peek();
    if (t.kind != TokenKind::Operator) return false;
    static constexpr std::array<std::string_view, 11> kAssign = {
        "=", "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<=", ">>>="};
    if (contains(kAssign, t.text)) {
      advance();
      return true;
    }
    if (t.is_op(">") && peek(1).is_op(">=") && adjacent(pos_, pos_ + 1)) {
      advance();
      advance();
      return true;
    }
    return false;
  }

  Expr parse_ternary() {
    const std::size_t start = pos_;
    Expr cond = parse_binary(1);
    if (!peek().is_op("?")) return cond;
    advance();
    Expr yes = parse_expression();
    std::vector<Expr> operands{std::move(cond), std::move(yes)};
    if (accept_op(":")) operands.push_back(parse_expression());
    return other(start, std::move(operands));
  }

  /// Returns (precedence, token count) of the binary operator at the cursor,
  /// or precedence 0 when there is none.
  std::pair<int, std::size_t> peek_binary_operator() const {
    const Token& t = peek();
    if (t.is_ident("instanceof")) return {7, 1};
    if (t.kind != TokenKind::Operator) return {0, 0};
    if (t.text == ">") {
      if (peek(1).is_op(">") && adjacent(pos_, pos_ + 1)) {
        if (peek(2).is_op(">") && adjacent(pos_ + 1, pos_ + 2)) return {8, 3};
        if (peek(2).is_op(">=") && adjacent(pos_ + 1, pos_ + 2)) return {0, 0};
        return {8, 2};
      }
      if (peek(1).is_op(">=") && adjacent(pos_, pos_ + 1)) return {0, 0};
      return {7, 1};
    }
    const std::string& op = t.text;
    if (op == "||") return {1, 1};
    if (op == "&&") return {2, 1};
    if (op == "|") return {3, 1};
    if (op == "^") return {4, 1};
    if (op == "&") return {5, 1};
    if (op == "==" || op == "!=") return {6, 1};
    if (op == "<" || op == "<=" || op == ">=") return {7, 1};
    if (op == "<<") return {8, 1};
    if (op == "+" || op == "-") return {9, 1};
    if (op == "*" || op == "/" || op == "%") return {10, 1};
    return {0, 0};
  }

  Expr parse_binary(int min_precedence) {
    DepthGuard guard(depth_);
    if (guard.exceeded()) {
      error(peek(), "expression nested too deeply");
      return opaque();
    }
    const std::size_t start = pos_;
    Expr lhs = parse_unary();
    for (;;) {
      const auto [precedence, width] = peek_binary_operator();
      if (precedence == 0 || precedence < min_precedence) return lhs;
      const bool is_plus = peek().is_op("+");
      if (peek().is_ident("instanceof")) {
        advance();
        skip_instanceof_target();
        lhs = other(start, {std::move(lhs)});
        continue;
      }
      for (std::size_t i = 0; i < width; ++i) advance();
      Expr rhs = parse_binary(precedence + 1);
      if (is_plus) {
        Expr concat = make(ExprKind::BinaryConcat, start);
        concat.operands = {std::move(lhs), std::move(rhs)};
        lhs = std::move(concat);
      } else {
        lhs = other(start, {std::move(lhs), std::move(rhs)});
      }
    }
  }

  void skip_instanceof_target() {
    if (peek().is_ident("final")) advance();
    const std::size_t end = match_type(pos_);
    if (end == kNoMatch) return;
    pos_ = end;
    if (peek().is_op("(")) {
      skip_group();  // record pattern
    }
    if (peek().is_ident() && !peek().is_ident("instanceof")) advance();  // binding
  }

  Expr parse_unary() {
    DepthGuard guard(depth_);
    if (guard.exceeded()) {
      error(peek(), "expression nested too deeply");
      return opaque();
    }
    const std::size_t start = pos_;
    const Token& t = peek();
    if ((t.is_op("-") || t.is_op("+")) && peek(1).kind == TokenKind::Number) {
      advance();
      advance();
      Expr e = make(ExprKind::NumericLiteral, start);
      e.text = std::string(source_.slice(e.range));
      e.text.erase(std::remove_if(e.text.begin(), e.text.end(),
                                  [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }),
                   e.text.end());
      return parse_postfix(std::move(e), start);
    }
    if (t.is_op("-") || t.is_op("+") || t.is_op("!") || t.is_op("~") || t.is_op("++") || t.is_op("--")) {
      advance();
      Expr operand = parse_unary();
      return other(start, {std::move(operand)});
    }
    if (t.is_op("(")) {
      if (is_cast()) {
        skip_group();
        Expr operand = is_lambda_start() ? parse_lambda() : parse_unary();
        return other(start, {std::move(operand)});
      }
      const std::size_t open = pos_;
      advance();
      Expr inner = parse_expression();
      if (!accept_op(")")) {
        if (match_[open] != kNoMatch && match_[open] >= pos_) {
          pos_ = match_[open];
          advance();
        }
      }
      return parse_postfix(std::move(inner), start);
    }
    if (t.is_ident("switch") && peek(1).is_op("(")) {
      advance();
      std::vector<CallExpr> calls;
      parse_parenthesized(calls);
      if (peek().is_op("{")) parse_block(calls);
      return parse_postfix(other_with_calls(start, std::move(calls)), start);
    }
    return parse_postfix(parse_primary(), start);
  }

  Expr other_with_calls(std::size_t start, std::vector<CallExpr> calls) const {
    Expr e = make(ExprKind::Other, start);
    e.calls = std::move(calls);
    return e;
  }

  bool is_cast() const {
    const std::size_t open = pos_;
    const std::size_t close = match_[open];
    if (close == kNoMatch || close == open + 1) return false;
    std::size_t i = open + 1;
    bool primitive = tokens_[i].is_ident() && contains(kPrimitiveTypes, tokens_[i].text);
    std::size_t end = match_type(i);
    if (end == kNoMatch) return false;
    while (end < close && tokens_[end].is_op("&")) {
      end = match_type(end + 1);
      if (end == kNoMatch) return false;
      primitive = false;
    }
    if (end != close) return false;
    if (primitive) return true;
    const Token& next = tokens_[close + 1];
    if (next.kind == TokenKind::String || next.kind == TokenKind::Char || next.kind == TokenKind::Number) {
      return true;
    }
    if (next.is_op("(") || next.is_op("!") || next.is_op("~")) return true;
    return next.is_ident() && next.text != "instanceof";
  }

  bool is_lambda_start() const {
    const Token& t = peek();
    if (t.is_ident() && peek(1).is_op("->")) return true;
    if (t.is_op("(")) {
      const std::size_t close = match_[pos_];
      return close != kNoMatch && tokens_[close + 1].is_op("->");
    }
    return false;
  }

  Expr parse_lambda() {
    const std::size_t start = pos_;
    if (peek().is_op("(")) {
      skip_group();
    } else {
      advance();
    }
    advance();  // ->
    if (peek().is_op("{")) {
      std::vector<CallExpr> calls;
      parse_block(calls);
      return other_with_calls(start, std::move(calls));
    }
    Expr body = parse_expression();
    return other(start, {std::move(body)});
  }

  Expr parse_array_initializer() {
    const std::size_t start = pos_;
    const std::size_t close = match_[pos_];
    advance();  // {
    std::vector<Expr> elements;
    while (!at_end() && !peek().is_op("}")) {
      const std::size_t before = pos_;
      if (peek().is_op("{")) {
        elements.push_back(parse_array_initializer());
      } else {
        elements.push_back(parse_expression());
      }
      if (!accept_op(",")) {
        if (!peek().is_op("}")) {
          if (close != kNoMatch && close >= pos_) pos_ = close;
          break;
        }
      }
      if (pos_ == before) advance();
    }
    accept_op("}");
    return other(start, std::move(elements));
  }

  Expr parse_primary() {
    const std::size_t start = pos_;
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number: {
        Expr e = make(ExprKind::NumericLiteral, start);
        e.text = t.text;
        advance();
        e.range = range_from(start);
        return e;
      }
      case TokenKind::String:
      case TokenKind::Char: {
        const ExprKind kind = t.kind == TokenKind::String ? ExprKind::StringLiteral : ExprKind::CharLiteral;
        std::string value = t.text;
        advance();
        Expr e = make(kind, start);
        e.text = std::move(value);
        return e;
      }
      case TokenKind::Identifier: {
        if (t.text == "true" || t.text == "false" || t.text == "null") {
          std::string value = t.text;
          advance();
          Expr e = make(value == "null" ? ExprKind::NullLiteral : ExprKind::BooleanLiteral, start);
          e.text = std::move(value);
          return e;
        }
        if (t.text == "new") return parse_new();
        if (peek(1).is_op("(")) return parse_call({}, {}, start);
        std::string name = t.text;
        advance();
        Expr e = make(ExprKind::Identifier, start);
        e.text = std::move(name);
        return e;
      }
      case TokenKind::Operator:
        if (t.is_op(")") || t.is_op("]") || t.is_op("}") || t.is_op(";") || t.is_op(",")) {
          // Missing operand; leave the closer for the enclosing construct.
          Expr e;
          e.range = SourceRange{t.range.begin, t.range.begin};
          return e;
        }
        if (t.is_op("{")) return parse_array_initializer();
        if (t.is_op("<")) {
          // Generic method call without explicit receiver: <T>foo()
          if (skip_type_args() && peek().is_ident() && peek(1).is_op("(")) {
            return parse_call({}, {}, start);
          }
        }
        return opaque();
      default:
        return opaque();
    }
  }

  /// Parses `name(args)` at the cursor. `receiver` and `qualifier` describe
  /// whatever precedes the name.
  Expr parse_call(std::vector<Expr> receiver, std::vector<std::string> qualifier, std::size_t start) {
    CallExpr call;
    call.receiver = std::move(receiver);
    call.callee = std::move(qualifier);
    call.location = source_.location(peek().range.begin);
    call.callee.push_back(advance().text);
    call.args = parse_arguments();
    Expr e = make(ExprKind::MethodCall, start);
    call.range = e.range;
    e.calls.push_back(std::move(call));
    return e;
  }

  std::vector<Expr> parse_arguments() {
    std::vector<Expr> args;
    const std::size_t open = pos_;
    const std::size_t close = match_[open];
    advance();  // (
    if (accept_op(")")) return args;
    while (!at_end()) {
      const std::size_t arg_start = pos_;
      args.push_back(parse_expression());
      if (accept_op(",")) continue;
      if (accept_op(")")) return args;
      // Unmodeled tokens inside the argument: fold them into an Other node.
      while (!at_end() && !peek().is_op(",") && !peek().is_op(")") && !peek().is_op(";") &&
             !peek().is_op("}")) {
        if (at_opener()) {
          skip_group();
        } else {
          advance();
        }
      }
      if (pos_ > arg_start) {
        Expr last = std::move(args.back());
        args.back() = other(arg_start, {std::move(last)});
      }
      if (accept_op(",")) continue;
      if (accept_op(")")) return args;
      break;
    }
    if (close != kNoMatch && close >= pos_) {
      pos_ = close;
      advance();
    }
    return args;
  }

  Expr parse_new() {
    const std::size_t start = pos_;
    advance();  // new
    parse_modifiers();
    if (peek().is_op("<")) skip_type_args();
    const std::size_t type_end = match_type(pos_);
    if (type_end != kNoMatch) {
      pos_ = type_end;
    } else if (peek().is_ident()) {
      advance();
    }
    if (peek().is_op("<")) skip_type_args();
    std::vector<Expr> operands;
    std::vector<CallExpr> body_calls;
    if (peek().is_op("[")) {
      while (peek().is_op("[")) {
        const std::size_t open = pos_;
        advance();
        if (!accept_op("]")) {
          operands.push_back(parse_expression());
          if (!accept_op("]") && match_[open] != kNoMatch && match_[open] >= pos_) {
            pos_ = match_[open];
            advance();
          }
        }
      }
      if (peek().is_op("{")) operands.push_back(parse_array_initializer());
    } else if (peek().is_op("(")) {
      operands = parse_arguments();
      if (peek().is_op("{")) {
        ClassDecl anonymous;
        parse_class_body(anonymous, false);
        for (auto& m : anonymous.methods) {
          for (auto& c : m.body_calls) body_calls.push_back(std::move(c));
        }
      }
    }
    Expr e = other(start, std::move(operands));
    e.calls = std::move(body_calls);
    return e;
  }

  Expr parse_postfix(Expr base, std::size_t start) {
    // Dotted names not yet attached to a call or field access node.
    std::vector<std::string> names;
    bool has_base = true;
    if (base.kind == ExprKind::Identifier) {
      names.push_back(base.text);
      has_base = false;
    } else if (base.kind == ExprKind::FieldAccess) {
      names = base.chain;
      has_base = false;
    }

    auto materialize = [&]() -> Expr {
      if (!has_base) {
        if (names.size() == 1) {
          Expr e = make(ExprKind::Identifier, start);
          e.text = names.front();
          return e;
        }
        Expr e = make(ExprKind::FieldAccess, start);
        e.chain = names;
        return e;
      }
      if (names.empty()) return base;
      return other(start, {base});
    };

    for (;;) {
      DepthGuard guard(depth_);
      if (guard.exceeded()) break;
      if (peek().is_op(".")) {
        if (peek(1).is_op("<")) {
          const std::size_t dot = pos_;
          advance();
          if (!skip_type_args()) {
            pos_ = dot;
            break;
          }
          if (peek().is_ident() && peek(1).is_op("(")) {
            base = call_on(std::move(base), names, has_base, start);
            has_base = true;
            names.clear();
            continue;
          }
          break;
        }
        if (peek(1).is_ident("new")) {
          advance();
          Expr outer = materialize();
          Expr created = parse_new();
          base = other(start, {std::move(outer), std::move(created)});
          has_base = true;
          names.clear();
          continue;
        }
        if (peek(1).is_ident()) {
          advance();
          if (peek(1).is_op("(")) {
            base = call_on(std::move(base), names, has_base, start);
            has_base = true;
            names.clear();
          } else {
            names.push_back(advance().text);
            if (has_base) {
              // Field access on a non-name expression such as foo().bar
              // stays pending so a following call can use it as qualifier.
            }
          }
          continue;
        }
        break;
      }
      if (peek().is_op("[")) {
        if (peek(1).is_op("]")) {
          while (peek().is_op("[") && peek(1).is_op("]")) {
            advance();
            advance();
          }
          continue;
        }
        Expr target = materialize();
        const std::size_t open = pos_;
        advance();
        Expr index = parse_expression();
        if (!accept_op("]") && match_[open] != kNoMatch && match_[open] >= pos_) {
          pos_ = match_[open];
          advance();
        }
        base = other(start, {std::move(target), std::move(index)});
        has_base = true;
        names.clear();
        continue;
      }
      if (peek().is_op("++") || peek().is_op("--")) {
        Expr target = materialize();
        advance();
        base = other(start, {std::move(target)});
        has_base = true;
        names.clear();
        continue;
      }
      if (peek().is_op("::")) {
        Expr target = materialize();
        advance();
        if (peek().is_op("<")) skip_type_args();
        if (peek().is_ident()) advance();
        base = other(start, {std::move(target)});
        has_base = true;
        names.clear();
        continue;
      }
      if (peek().is_op("<") && !has_base && !names.empty()) {
        // Generic type before a method reference: List<String>::new
        const std::size_t end = match_type_args(pos_);
        if (end != kNoMatch && tokens_[end].is_op("::")) {
          pos_ = end;
          continue;
        }
      }
      break;
    }
    return materialize();
  }

  Expr call_on(Expr base, const std::vector<std::string>& names, bool has_base, std::size_t start) {
    std::vector<Expr> receiver;
    if (has_base) receiver.push_back(std::move(base));
    return parse_call(std::move(receiver), names, start);
  }

  const SourceFile& source_;
  std::vector<Token> tokens_;
  std::vector<std::size_t> match_;
  std::size_t pos_ = 0;
  int depth_ = 0;
  std::vector<std::string> imports_;
  ParseResult result_;
};

}  // namespace detail

/// Parses a Java file into its class declarations. Never throws on malformed
/// input; problems are reported through ParseResult::diagnostics.
inline ParseResult parse_file(const SourceFile& source) {
  return detail::JavaParser(source, lex(source)).run();
}

}  // namespace assertlint
