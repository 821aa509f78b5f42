#pragma once

#include <cctype>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "assertlint/ast.hpp"
#include "assertlint/junit.hpp"
#include "assertlint/splitter.hpp"

namespace assertlint {

struct RenderedMessage {
  std::string text;
};

namespace detail {

inline void append_terms(std::string& out, std::string_view name) {
  for (const auto& term : split(name).terms) {
    if (!out.empty()) out.push_back(' ');
    out += term;
  }
}

/// Identifier-like runs of an unmodeled expression, split into terms.
inline std::string render_raw(std::string_view raw) {
  std::string out;
  std::size_t i = 0;
  while (i < raw.size()) {
    const auto c = static_cast<unsigned char>(raw[i]);
    if (std::isalnum(c) || c == '_' || c == '$' || c >= 0x80) {
      std::size_t j = i;
      while (j < raw.size()) {
        const auto d = static_cast<unsigned char>(raw[j]);
        if (!(std::isalnum(d) || d == '_' || d == '$' || d >= 0x80)) break;
        ++j;
      }
      append_terms(out, raw.substr(i, j - i));
      i = j;
    } else {
      ++i;
    }
  }
  return out;
}

inline std::string render_expr(const Expr& e) {
  switch (e.kind) {
    case ExprKind::StringLiteral:
    case ExprKind::CharLiteral:
    case ExprKind::NumericLiteral:
    case ExprKind::BooleanLiteral:
    case ExprKind::NullLiteral:
      return e.text;
    case ExprKind::Identifier: {
      std::string out;
      append_terms(out, e.text);
      return out;
    }
    case ExprKind::FieldAccess: {
      std::string out;
      for (const auto& segment : e.chain) append_terms(out, segment);
      return out;
    }
    case ExprKind::MethodCall: {
      const CallExpr& call = e.call();
      std::string out;
      for (const auto& r : call.receiver) out = render_expr(r);
      for (const auto& segment : call.callee) append_terms(out, segment);
      return out;
    }
    case ExprKind::BinaryConcat: {
      std::string out;
      for (const auto& part : extract_concat_tree(e)) {
        const std::string piece = render_expr(part);
        if (piece.empty()) continue;
        if (!out.empty()) out.push_back(' ');
        out += piece;
      }
      return out;
    }
    case ExprKind::Other:
      return render_raw(e.text);
  }
  return {};
}

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

}  // namespace detail

/// Renders a message as prose: literal text verbatim, identifiers and calls
/// as their split terms (receivers included, argument lists dropped). Pieces
/// are separated by one space unless whitespace is already there; adjacent
/// string literals are joined as written.
inline RenderedMessage render(const MessageExpr& message) {
  RenderedMessage out;
  bool previous_literal = false;
  for (const Expr& part : message.parts) {
    const bool literal = part.kind == ExprKind::StringLiteral || part.kind == ExprKind::CharLiteral;
    const std::string piece = detail::render_expr(part);
    if (piece.empty()) continue;
    const bool needs_space = !out.text.empty() && !(previous_literal && literal) &&
                             !detail::is_space(out.text.back()) && !detail::is_space(piece.front());
    if (needs_space) out.text.push_back(' ');
    out.text += piece;
    previous_literal = literal;
  }
  return out;
}

/// Vowel-group syllable estimate: maximal runs of a/e/i/o/u/y, minus a silent
/// final `e` (kept for consonant + `le`), never below one. Tokens without
/// letters count as one syllable.
inline int count_syllables(std::string_view word) {
  std::string letters;
  for (char c : word) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isalpha(u) && u < 0x80) letters.push_back(static_cast<char>(std::tolower(u)));
  }
  if (letters.empty()) return 1;
  auto is_vowel = [](char c) {
    return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u' || c == 'y';
  };
  int count = 0;
  bool in_run = false;
  for (char c : letters) {
    const bool v = is_vowel(c);
    if (v && !in_run) ++count;
    in_run = v;
  }
  const std::size_t n = letters.size();
  if (n >= 2 && letters[n - 1] == 'e' && !is_vowel(letters[n - 2])) {
    const bool consonant_le = letters[n - 2] == 'l' && n >= 3 && !is_vowel(letters[n - 3]);
    if (!consonant_le) --count;
  }
  return count < 1 ? 1 : count;
}

struct Segmentation {
  int words = 0;
  int sentences = 0;
  std::vector<std::string> tokens;
  /// Index into `tokens` of the first word of each sentence.
  std::vector<std::size_t> sentence_starts;
};

namespace detail {

/// Decodes one UTF-8 sequence at `i`; malformed bytes decode as themselves.
inline char32_t decode_utf8(std::string_view s, std::size_t i, std::size_t& length) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  length = 1;
  if (b0 < 0x80) return b0;
  int extra = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    extra = 1;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    extra = 2;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    extra = 3;
    cp = b0 & 0x07;
  } else {
    return b0;
  }
  if (i + static_cast<std::size_t>(extra) >= s.size()) return b0;
  for (int k = 1; k <= extra; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return b0;
    cp = (cp << 6) | (b & 0x3F);
  }
  length = static_cast<std::size_t>(extra) + 1;
  return cp;
}

/// Letters and digits outside ASCII: everything except the Latin-1
/// punctuation block, general punctuation, arrows, math and dingbats.
inline bool is_word_code_point(char32_t cp) {
  if (cp < 0x80) return std::isalnum(static_cast<unsigned char>(cp)) || cp == U'\'';
  if (cp < 0xC0 || cp == 0xD7 || cp == 0xF7) return false;
  if (cp >= 0x2000 && cp <= 0x2BFF) return false;
  if (cp >= 0x3000 && cp <= 0x303F) return false;
  if (cp >= 0xFE30 && cp <= 0xFE4F) return false;
  if (cp >= 0xFF00 && cp <= 0xFF0F) return false;
  if (cp >= 0x1F000) return false;
  return true;
}

}  // namespace detail

/// Splits prose into words (runs of letters, digits and apostrophes) and
/// counts sentences ending in `.`, `!` or `?` before whitespace or the end.
inline Segmentation segment(std::string_view text) {
  Segmentation out;
  auto terminator = [](char c) { return c == '.' || c == '!' || c == '?'; };
  int words_in_sentence = 0;
  std::size_t i = 0;
  while (i < text.size()) {
    std::size_t length = 1;
    if (detail::is_word_code_point(detail::decode_utf8(text, i, length))) {
      std::size_t j = i + length;
      while (j < text.size()) {
        std::size_t next = 1;
        if (!detail::is_word_code_point(detail::decode_utf8(text, j, next))) break;
        j += next;
      }
      std::string_view word = text.substr(i, j - i);
      while (!word.empty() && word.front() == '\'') word.remove_prefix(1);
      while (!word.empty() && word.back() == '\'') word.remove_suffix(1);
      if (!word.empty()) {
        if (words_in_sentence == 0) out.sentence_starts.push_back(out.tokens.size());
        out.tokens.emplace_back(word);
        ++words_in_sentence;
      }
      i = j;
      continue;
    }
    if (terminator(text[i]) && (i + 1 == text.size() || detail::is_space(text[i + 1]))) {
      if (words_in_sentence > 0) {
        ++out.sentences;
        words_in_sentence = 0;
      }
    }
    i += length;
  }
  if (words_in_sentence > 0) ++out.sentences;
  out.words = static_cast<int>(out.tokens.size());
  return out;
}

struct TextMetrics {
  int words = 0;
  int sentences = 0;
  int syllables = 0;
  int polysyllables = 0;
  /// Absent when the rendering has no words.
  std::optional<double> reading_ease;
  std::optional<double> grade_level;

  bool scorable() const { return reading_ease.has_value(); }
};

inline double flesch_reading_ease(double words, double sentences, double syllables) {
  return 206.835 - 1.015 * (words / sentences) - 84.6 * (syllables / words);
}

inline double flesch_kincaid_grade(double words, double sentences, double syllables) {
  return 0.39 * (words / sentences) + 11.8 * (syllables / words) - 15.59;
}

inline TextMetrics score(const RenderedMessage& message) {
  TextMetrics out;
  const Segmentation seg = segment(message.text);
  out.words = seg.words;
  out.sentences = seg.sentences;
  for (const auto& token : seg.tokens) {
    const int s = count_syllables(token);
    out.syllables += s;
    if (s >= 3) ++out.polysyllables;
  }
  if (out.words > 0) {
    out.reading_ease = flesch_reading_ease(out.words, out.sentences, out.syllables);
    out.grade_level = flesch_kincaid_grade(out.words, out.sentences, out.syllables);
  }
  return out;
}

inline double round2(double value) { return std::round(value * 100.0) / 100.0; }

}  // namespace assertlint
