#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace assertlint {

struct TermList {
  std::vector<std::string> terms;
  std::string origin;
};

namespace detail {

enum class CharClass { Separator, Upper, Lower, Digit };

inline CharClass classify_char(char c) {
  if (c == '_' || c == '$') return CharClass::Separator;
  if (c >= 'A' && c <= 'Z') return CharClass::Upper;
  if (c >= '0' && c <= '9') return CharClass::Digit;
  // Lowercase ASCII and everything else (including UTF-8 bytes) never starts a new term.
  return CharClass::Lower;
}

}  // namespace detail

/// Conservative identifier splitting: `_` and `$` separate terms, as do
/// letter/digit transitions and lower-to-upper camel humps. An uppercase run
/// hands its last capital to a following lowercase word, so `HTMLParser`
/// becomes {HTML, Parser}. Same-case compounds are never split.
inline TermList split(std::string_view name) {
  using detail::CharClass;
  TermList out;
  out.origin = std::string(name);
  std::string current;
  auto flush = [&] {
    if (!current.empty()) out.terms.push_back(std::move(current));
    current.clear();
  };
  for (std::size_t i = 0; i < name.size(); ++i) {
    const char c = name[i];
    const CharClass cls = detail::classify_char(c);
    if (cls == CharClass::Separator) {
      flush();
      continue;
    }
    if (!current.empty()) {
      const CharClass prev = detail::classify_char(current.back());
      const bool digit_boundary = (prev == CharClass::Digit) != (cls == CharClass::Digit);
      const bool hump = prev == CharClass::Lower && cls == CharClass::Upper;
      const bool acronym_end = prev == CharClass::Upper && cls == CharClass::Upper &&
                               i + 1 < name.size() &&
                               detail::classify_char(name[i + 1]) == CharClass::Lower;
      if (digit_boundary || hump || acronym_end) flush();
    }
    current.push_back(c);
  }
  flush();
  return out;
}

}  // namespace assertlint
