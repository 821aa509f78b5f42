#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "assertlint/diagnostic.hpp"
#include "assertlint/source.hpp"

namespace assertlint {

enum class TokenKind {
  Identifier,  // includes keywords and the literals true/false/null
  Number,
  String,      // ordinary string literals and text blocks
  Char,
  Operator,    // operators and punctuation
  Error,       // a byte sequence the lexer does not understand
  End,
};

struct Token {
  TokenKind kind = TokenKind::End;
  /// Decoded value for String/Char, raw spelling otherwise.
  std::string text;
  SourceRange range;

  bool is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool is_op(std::string_view t) const { return is(TokenKind::Operator, t); }
  bool is_ident() const { return kind == TokenKind::Identifier; }
  bool is_ident(std::string_view t) const { return is(TokenKind::Identifier, t); }
};

struct LexResult {
  std::vector<Token> tokens;  // always terminated by a TokenKind::End token
  std::vector<Diagnostic> diagnostics;
};

namespace detail {

inline bool is_ident_start(unsigned char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

inline bool is_ident_part(unsigned char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

inline bool is_digit(unsigned char c) { return c >= '0' && c <= '9'; }

inline bool is_hex(unsigned char c) {
  return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

inline void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

/// Decodes Java escape sequences in the body of a string or char literal.
inline std::string decode_escapes(std::string_view body) {
  std::string out;
  out.reserve(body.size());
  std::uint32_t pending_high = 0;
  auto flush_high = [&] {
    if (pending_high != 0) {
      append_utf8(out, pending_high);
      pending_high = 0;
    }
  };
  for (std::size_t i = 0; i < body.size(); ++i) {
    const char c = body[i];
    if (c != '\\' || i + 1 == body.size()) {
      flush_high();
      out.push_back(c);
      continue;
    }
    const char e = body[++i];
    if (e == 'u') {
      std::size_t j = i;
      while (j < body.size() && body[j] == 'u') ++j;
      if (j + 4 <= body.size() && std::all_of(body.begin() + j, body.begin() + j + 4,
                                              [](char h) { return is_hex(h); })) {
        const auto cp = static_cast<std::uint32_t>(std::stoul(std::string(body.substr(j, 4)), nullptr, 16));
        i = j + 3;
        if (cp >= 0xD800 && cp <= 0xDBFF) {
          flush_high();
          pending_high = cp;
        } else if (cp >= 0xDC00 && cp <= 0xDFFF && pending_high != 0) {
          append_utf8(out, 0x10000 + ((pending_high - 0xD800) << 10) + (cp - 0xDC00));
          pending_high = 0;
        } else {
          flush_high();
          append_utf8(out, cp);
        }
        continue;
      }
      flush_high();
      out += "\\u";
      continue;
    }
    flush_high();
    switch (e) {
      case 'n': out.push_back('\n'); break;
      case 't': out.push_back('\t'); break;
      case 'b': out.push_back('\b'); break;
      case 'r': out.push_back('\r'); break;
      case 'f': out.push_back('\f'); break;
      case 's': out.push_back(' '); break;
      case '"': out.push_back('"'); break;
      case '\'': out.push_back('\''); break;
      case '\\': out.push_back('\\'); break;
      case '\n': break;  // text block line continuation
      default:
        if (e >= '0' && e <= '7') {
          // Octal escapes take up to three digits, but only when the value stays <= 0377.
          std::uint32_t value = static_cast<std::uint32_t>(e - '0');
          const std::size_t max_digits = e <= '3' ? 3 : 2;
          std::size_t used = 1;
          while (used < max_digits && i + 1 < body.size() && body[i + 1] >= '0' && body[i + 1] <= '7') {
            value = value * 8 + static_cast<std::uint32_t>(body[++i] - '0');
            ++used;
          }
          append_utf8(out, value);
        } else {
          out.push_back('\\');
          out.push_back(e);
        }
    }
  }
  flush_high();
  return out;
}

/// Applies text block indentation stripping to the raw content between the
/// opening line terminator and the closing delimiter.
inline std::string strip_text_block(std::string_view raw) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= raw.size(); ++i) {
    if (i == raw.size() || raw[i] == '\n') {
      std::string_view line = raw.substr(start, i - start);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      lines.push_back(line);
      start = i + 1;
    }
  }
  auto indent_of = [](std::string_view line) {
    std::size_t n = 0;
    while (n < line.size() && (line[n] == ' ' || line[n] == '\t')) ++n;
    return n;
  };
  auto blank = [&](std::string_view line) { return indent_of(line) == line.size(); };

  std::size_t common = std::string_view::npos;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    // The last line holds the closing delimiter's indentation and always counts.
    if (blank(lines[i]) && i + 1 != lines.size()) continue;
    common = std::min(common, indent_of(lines[i]));
  }
  if (common == std::string_view::npos) common = 0;

  std::string out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    const bool last = i + 1 == lines.size();
    if (last && blank(line)) break;
    line.remove_prefix(std::min(common, line.size()));
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    out.append(line);
    if (!last) out.push_back('\n');
  }
  return decode_escapes(out);
}

inline constexpr std::array<std::string_view, 38> kOperators = {
    ">>>=", "<<=", "...", "->", "::", "++", "--", "&&", "||", "==", "!=", "<=", ">=",
    "+=", "-=", "*=", "/=", "&=", "|=", "^=", "%=", "<<",
    "(", ")", "{", "}", "[", "]", ";", ",", ".", "@", "=", ">", "<", "!", "~", "?"};

inline constexpr std::string_view kSingleOperators = ":+-*/&|^%";

}  // namespace detail

/// Splits Java source into tokens, dropping whitespace and comments.
///
/// `>` is always emitted as a single-character token (except inside `>=` and
/// `>>>=`) so that nested generic closers like `List<List<T>>` stay separable;
/// the parser reassembles shift operators from adjacent tokens.
inline LexResult lex(const SourceFile& source) {
  LexResult result;
  const std::string_view text = source.content();
  const std::size_t n = text.size();
  std::size_t i = 0;

  auto error = [&](std::size_t at, std::string message) {
    result.diagnostics.push_back({DiagnosticKind::LexError, source.location(at), std::move(message)});
  };
  auto next_line = [&](std::size_t from) {
    while (from < n && text[from] != '\n' && text[from] != '\r') ++from;
    return from;
  };
  auto push = [&](TokenKind kind, std::string value, std::size_t begin, std::size_t end) {
    result.tokens.push_back(Token{kind, std::move(value), SourceRange{begin, end}});
  };

  while (i < n) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f') {
      ++i;
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '/') {
      i = next_line(i);
      continue;
    }
    if (c == '/' && i + 1 < n && text[i + 1] == '*') {
      const std::size_t close = text.find("*/", i + 2);
      if (close == std::string_view::npos) {
        error(i, "unterminated comment");
        i = next_line(i);
      } else {
        i = close + 2;
      }
      continue;
    }
    if (c == '"') {
      const std::size_t begin = i;
      if (text.substr(i, 3) == "\"\"\"") {
        std::size_t j = i + 3;
        while (j < n && (text[j] == ' ' || text[j] == '\t' || text[j] == '\f')) ++j;
        if (j < n && (text[j] == '\n' || text[j] == '\r')) {
          if (text[j] == '\r' && j + 1 < n && text[j + 1] == '\n') ++j;
          const std::size_t body = j + 1;
          std::size_t k = body;
          std::size_t close = std::string_view::npos;
          while (k + 3 <= n) {
            if (text[k] == '\\') {
              k += 2;
              continue;
            }
            if (text.substr(k, 3) == "\"\"\"") {
              close = k;
              break;
            }
            ++k;
          }
          if (close == std::string_view::npos) {
            error(begin, "unterminated text block");
            i = next_line(i);
            continue;
          }
          push(TokenKind::String, detail::strip_text_block(text.substr(body, close - body)), begin,
               close + 3);
          i = close + 3;
          continue;
        }
      }
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n && text[j] != '\n' && text[j] != '\r') {
        if (text[j] == '\\' && j + 1 < n && text[j + 1] != '\n' && text[j + 1] != '\r') {
          j += 2;
          continue;
        }
        if (text[j] == '"') {
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) {
        error(begin, "unterminated string literal");
        i = next_line(i);
        continue;
      }
      push(TokenKind::String, detail::decode_escapes(text.substr(begin + 1, j - begin - 1)), begin,
           j + 1);
      i = j + 1;
      continue;
    }
    if (c == '\'') {
      const std::size_t begin = i;
      std::size_t j = i + 1;
      bool closed = false;
      while (j < n && text[j] != '\n' && text[j] != '\r') {
        if (text[j] == '\\' && j + 1 < n && text[j + 1] != '\n' && text[j + 1] != '\r') {
          j += 2;
          continue;
        }
        if (text[j] == '\'') {
          closed = true;
          break;
        }
        ++j;
      }
      if (!closed) {
        error(begin, "unterminated character literal");
        i = next_line(i);
        continue;
      }
      push(TokenKind::Char, detail::decode_escapes(text.substr(begin + 1, j - begin - 1)), begin, j + 1);
      i = j + 1;
      continue;
    }
    if (detail::is_ident_start(c)) {
      std::size_t j = i + 1;
      while (j < n && detail::is_ident_part(static_cast<unsigned char>(text[j]))) ++j;
      push(TokenKind::Identifier, std::string(text.substr(i, j - i)), i, j);
      i = j;
      continue;
    }
    if (detail::is_digit(c) || (c == '.' && i + 1 < n && detail::is_digit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      auto digits = [&](auto pred) {
        while (j < n && (pred(static_cast<unsigned char>(text[j])) || text[j] == '_')) ++j;
      };
      if (c == '0' && i + 1 < n && (text[i + 1] == 'x' || text[i + 1] == 'X')) {
        j += 2;
        digits(detail::is_hex);
        if (j < n && text[j] == '.') {
          ++j;
          digits(detail::is_hex);
        }
        if (j < n && (text[j] == 'p' || text[j] == 'P')) {
          ++j;
          if (j < n && (text[j] == '+' || text[j] == '-')) ++j;
          digits(detail::is_digit);
        }
      } else if (c == '0' && i + 1 < n && (text[i + 1] == 'b' || text[i + 1] == 'B')) {
        j += 2;
        digits([](unsigned char d) { return d == '0' || d == '1'; });
      } else {
        digits(detail::is_digit);
        if (j < n && text[j] == '.' && !(j + 1 < n && detail::is_ident_start(static_cast<unsigned char>(text[j + 1])) &&
                                         text[j + 1] != 'e' && text[j + 1] != 'E' && text[j + 1] != 'f' &&
                                         text[j + 1] != 'F' && text[j + 1] != 'd' && text[j + 1] != 'D')) {
          ++j;
          digits(detail::is_digit);
        }
        if (j < n && (text[j] == 'e' || text[j] == 'E')) {
          std::size_t k = j + 1;
          if (k < n && (text[k] == '+' || text[k] == '-')) ++k;
          if (k < n && detail::is_digit(static_cast<unsigned char>(text[k]))) {
            j = k;
            digits(detail::is_digit);
          }
        }
      }
      if (j < n && std::string_view("lLfFdD").find(text[j]) != std::string_view::npos) ++j;
      push(TokenKind::Number, std::string(text.substr(i, j - i)), i, j);
      i = j;
      continue;
    }
    bool matched = false;
    for (std::string_view op : detail::kOperators) {
      if (text.substr(i, op.size()) == op) {
        push(TokenKind::Operator, std::string(op), i, i + op.size());
        i += op.size();
        matched = true;
        break;
      }
    }
    if (matched) continue;
    if (detail::kSingleOperators.find(static_cast<char>(c)) != std::string_view::npos) {
      push(TokenKind::Operator, std::string(1, static_cast<char>(c)), i, i + 1);
      ++i;
      continue;
    }
    error(i, "unexpected character");
    push(TokenKind::Error, std::string(1, static_cast<char>(c)), i, i + 1);
    ++i;
  }
  result.tokens.push_back(Token{TokenKind::End, {}, SourceRange{n, n}});
  return result;
}

}  // namespace assertlint
