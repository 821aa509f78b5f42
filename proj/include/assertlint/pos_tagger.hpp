#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "assertlint/detail/default_lexicon.hpp"
#include "assertlint/readability.hpp"

namespace assertlint {

enum class PosTag {
  NounSingular,
  NounPlural,
  ProperNoun,
  Adjective,
  VerbBase,
  VerbPast,
  VerbPastParticiple,
  Verb3rd,
  Adverb,
  Determiner,
  Preposition,
  Modal,
  Pronoun,
  Conjunction,
  Number,
  Symbol,
  Unknown,
};

inline constexpr std::array<PosTag, 17> kAllPosTags = {
    PosTag::NounSingular, PosTag::NounPlural,  PosTag::ProperNoun,         PosTag::Adjective,
    PosTag::VerbBase,     PosTag::VerbPast,    PosTag::VerbPastParticiple, PosTag::Verb3rd,
    PosTag::Adverb,       PosTag::Determiner,  PosTag::Preposition,        PosTag::Modal,
    PosTag::Pronoun,      PosTag::Conjunction, PosTag::Number,             PosTag::Symbol,
    PosTag::Unknown,
};

inline const char* to_string(PosTag tag) {
  switch (tag) {
    case PosTag::NounSingular: return "Noun-singular";
    case PosTag::NounPlural: return "Noun-plural";
    case PosTag::ProperNoun: return "Proper-noun";
    case PosTag::Adjective: return "Adjective";
    case PosTag::VerbBase: return "Verb-base";
    case PosTag::VerbPast: return "Verb-past";
    case PosTag::VerbPastParticiple: return "Verb-past-participle";
    case PosTag::Verb3rd: return "Verb-3rd";
    case PosTag::Adverb: return "Adverb";
    case PosTag::Determiner: return "Determiner";
    case PosTag::Preposition: return "Preposition";
    case PosTag::Modal: return "Modal";
    case PosTag::Pronoun: return "Pronoun";
    case PosTag::Conjunction: return "Conjunction";
    case PosTag::Number: return "Number";
    case PosTag::Symbol: return "Symbol";
    case PosTag::Unknown: return "Unknown";
  }
  return "Unknown";
}

/// Accepts the condensed tag names and Penn Treebank tags.
inline std::optional<PosTag> parse_pos_tag(std::string_view text) {
  for (PosTag tag : kAllPosTags) {
    if (text == to_string(tag)) return tag;
  }
  static const std::unordered_map<std::string_view, PosTag> penn = {
      {"NN", PosTag::NounSingular},  {"NNS", PosTag::NounPlural},       {"NNP", PosTag::ProperNoun},
      {"NNPS", PosTag::ProperNoun},  {"JJ", PosTag::Adjective},         {"JJR", PosTag::Adjective},
      {"JJS", PosTag::Adjective},    {"VB", PosTag::VerbBase},          {"VBP", PosTag::VerbBase},
      {"VBG", PosTag::VerbBase},     {"VBD", PosTag::VerbPast},         {"VBN", PosTag::VerbPastParticiple},
      {"VBZ", PosTag::Verb3rd},      {"RB", PosTag::Adverb},            {"RBR", PosTag::Adverb},
      {"RBS", PosTag::Adverb},       {"WRB", PosTag::Adverb},           {"DT", PosTag::Determiner},
      {"WDT", PosTag::Determiner},   {"PDT", PosTag::Determiner},       {"IN", PosTag::Preposition},
      {"TO", PosTag::Preposition},   {"RP", PosTag::Preposition},       {"MD", PosTag::Modal},
      {"PRP", PosTag::Pronoun},      {"PRP$", PosTag::Pronoun},         {"WP", PosTag::Pronoun},
      {"WP$", PosTag::Pronoun},      {"EX", PosTag::Pronoun},           {"CC", PosTag::Conjunction},
      {"CD", PosTag::Number},        {"SYM", PosTag::Symbol},
  };
  if (auto it = penn.find(text); it != penn.end()) return it->second;
  return std::nullopt;
}

/// Open-class word list: `word<TAB>tag` lines, `#` comments.
class Lexicon {
 public:
  Lexicon() = default;

  static Lexicon parse(std::string_view text, std::string_view origin = "<lexicon>") {
    Lexicon out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view line = text.substr(pos, end - pos);
      pos = end + 1;
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (line.empty() || line.front() == '#') continue;
      const std::size_t tab = line.find('\t');
      if (tab == std::string_view::npos || tab == 0) {
        throw std::runtime_error(std::string(origin) + ":" + std::to_string(line_no) +
                                 ": expected word<TAB>tag");
      }
      const auto tag = parse_pos_tag(line.substr(tab + 1));
      if (!tag) {
        throw std::runtime_error(std::string(origin) + ":" + std::to_string(line_no) + ": unknown tag '" +
                                 std::string(line.substr(tab + 1)) + "'");
      }
      out.entries_.emplace(std::string(line.substr(0, tab)), *tag);
      if (end == text.size()) break;
    }
    return out;
  }

  static Lexicon load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path.string() + ": cannot open lexicon");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse(buffer.str(), path.string());
  }

  /// The bundled lexicon (data/lexicon.tsv, embedded at build time).
  static const Lexicon& builtin() {
    static const Lexicon lexicon = parse(detail::kDefaultLexicon, "<builtin lexicon>");
    return lexicon;
  }

  std::optional<PosTag> find(std::string_view word) const {
    if (auto it = entries_.find(std::string(word)); it != entries_.end()) return it->second;
    return std::nullopt;
  }

  bool contains(std::string_view word) const { return entries_.count(std::string(word)) != 0; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, PosTag> entries_;
};

namespace detail {

inline std::string ascii_lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

inline const std::unordered_map<std::string_view, PosTag>& closed_class_words() {
  static const std::unordered_map<std::string_view, PosTag> words = [] {
    std::unordered_map<std::string_view, PosTag> m;
    for (std::string_view w : {"a", "an", "the", "this", "that", "these", "those", "each", "every", "some",
                               "any", "no", "all", "both", "either", "neither", "another", "such"}) {
      m.emplace(w, PosTag::Determiner);
    }
    for (std::string_view w : {"in",     "on",      "at",     "of",      "for",     "to",      "from",
                               "with",   "by",      "about",  "after",   "before",  "into",    "onto",
                               "over",   "under",   "between", "among",  "through", "during",  "without",
                               "within", "against", "across", "along",   "around",  "behind",  "below",
                               "above",  "beyond",  "upon",   "via",     "per",     "than",    "until",
                               "since",  "toward",  "towards", "despite", "inside", "outside", "like"}) {
      m.emplace(w, PosTag::Preposition);
    }
    for (std::string_view w : {"can", "could", "may", "might", "must", "shall", "should", "will", "would"}) {
      m.emplace(w, PosTag::Modal);
    }
    for (std::string_view w : {"i",     "me",   "my",     "mine",  "we",    "us",     "our",   "ours",
                               "you",   "your", "yours",  "he",    "him",   "his",    "she",   "her",
                               "hers",  "it",   "its",    "they",  "them",  "their",  "theirs", "itself",
                               "myself", "themselves", "who", "whom", "whose", "what", "which", "there"}) {
      m.emplace(w, PosTag::Pronoun);
    }
    for (std::string_view w : {"and", "or", "but", "nor", "yet", "so", "because", "although", "though",
                               "whereas", "unless", "if", "while"}) {
      m.emplace(w, PosTag::Conjunction);
    }
    return m;
  }();
  return words;
}

inline bool has_letter(std::string_view word) {
  return std::any_of(word.begin(), word.end(), [](char c) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || u >= 0x80;
  });
}

inline bool has_digit(std::string_view word) {
  return std::any_of(word.begin(), word.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

inline bool starts_upper(std::string_view word) {
  return !word.empty() && std::isupper(static_cast<unsigned char>(word.front()));
}

inline bool has_inner_upper(std::string_view word) {
  return std::any_of(word.begin() + (word.empty() ? 0 : 1), word.end(),
                     [](char c) { return std::isupper(static_cast<unsigned char>(c)); });
}

inline std::optional<PosTag> suffix_tag(const std::string& lower, const Lexicon& lexicon) {
  auto ends = [&](std::string_view suffix) {
    return lower.size() > suffix.size() + 1 && lower.ends_with(suffix);
  };
  if (ends("ed")) return PosTag::VerbPastParticiple;
  if (ends("ing")) return PosTag::VerbBase;
  if (ends("ly")) return PosTag::Adverb;
  if (ends("ion") || ends("ness") || ends("ity")) return PosTag::NounSingular;
  if (ends("able") || ends("ful") || ends("ive") || ends("ous") || ends("al")) return PosTag::Adjective;
  if (ends("s") && !ends("ss")) {
    const std::string stem = lower.substr(0, lower.size() - 1);
    if (lexicon.find(stem) == PosTag::NounSingular) return PosTag::NounPlural;
    if (stem.ends_with("ion") || stem.ends_with("ness") || stem.ends_with("ity")) return PosTag::NounPlural;
    if (lower.ends_with("es")) {
      const std::string es_stem = lower.substr(0, lower.size() - 2);
      if (lexicon.find(es_stem) == PosTag::NounSingular) return PosTag::NounPlural;
    }
  }
  return std::nullopt;
}

}  // namespace detail

struct TaggedWord {
  std::string word;
  PosTag tag = PosTag::Unknown;
};

/// Tags one sentence; `words[0]` is treated as sentence-initial.
///
/// Cascade: closed-class words; sentence-initial "Expected"/"Unexpected";
/// the lexicon (exact form, then lowercased); numbers; capitalized
/// non-initial or camel-case words as proper nouns; suffix rules;
/// capitalized sentence-initial unknowns as proper nouns; else Unknown.
inline std::vector<TaggedWord> tag_sentence(const std::vector<std::string>& words,
                                            const Lexicon& lexicon = Lexicon::builtin()) {
  std::vector<TaggedWord> out;
  out.reserve(words.size());
  for (std::size_t i = 0; i < words.size(); ++i) {
    const std::string& word = words[i];
    const bool initial = i == 0;
    const std::string lower = detail::ascii_lower(word);
    const PosTag tag = [&]() -> PosTag {
      if (auto it = detail::closed_class_words().find(lower); it != detail::closed_class_words().end()) {
        return it->second;
      }
      if (initial && (lower == "expected" || lower == "unexpected")) return PosTag::VerbPastParticiple;
      if (auto t = lexicon.find(word)) return *t;
      if (auto t = lexicon.find(lower)) return *t;
      const bool letters = detail::has_letter(word);
      if (!letters) return detail::has_digit(word) ? PosTag::Number : PosTag::Symbol;
      if (detail::starts_upper(word) && (!initial || detail::has_inner_upper(word))) return PosTag::ProperNoun;
      if (auto t = detail::suffix_tag(lower, lexicon)) return *t;
      if (detail::starts_upper(word)) return PosTag::ProperNoun;
      return PosTag::Unknown;
    }();
    out.push_back({word, tag});
  }
  return out;
}

/// Tags every sentence of a segmented message, in order.
inline std::vector<TaggedWord> tag_message(const Segmentation& seg, const Lexicon& lexicon = Lexicon::builtin()) {
  std::vector<TaggedWord> out;
  for (std::size_t s = 0; s < seg.sentence_starts.size(); ++s) {
    const std::size_t begin = seg.sentence_starts[s];
    const std::size_t end = s + 1 < seg.sentence_starts.size() ? seg.sentence_starts[s + 1] : seg.tokens.size();
    std::vector<std::string> words(seg.tokens.begin() + static_cast<std::ptrdiff_t>(begin),
                                   seg.tokens.begin() + static_cast<std::ptrdiff_t>(end));
    for (auto& tw : tag_sentence(words, lexicon)) out.push_back(std::move(tw));
  }
  return out;
}

inline constexpr std::size_t kMaxPrefixLength = 3;

struct PosPattern {
  std::vector<PosTag> tags;

  std::size_t prefix_len() const { return tags.size(); }

  std::string label() const {
    std::string out;
    for (std::size_t i = 0; i < tags.size(); ++i) {
      if (i) out += ", ";
      out += to_string(tags[i]);
    }
    return out;
  }

  friend auto operator<=>(const PosPattern&, const PosPattern&) = default;
};

/// The 1-, 2- and 3-tag prefixes of a message (as many as it has words).
inline std::vector<PosPattern> leading_prefixes(const std::vector<TaggedWord>& tagged) {
  std::vector<PosPattern> out;
  PosPattern current;
  for (std::size_t i = 0; i < tagged.size() && i < kMaxPrefixLength; ++i) {
    current.tags.push_back(tagged[i].tag);
    out.push_back(current);
  }
  return out;
}

struct PatternRow {
  std::string label;
  std::uint64_t count = 0;
  double percent = 0.0;
};

/// Pattern frequencies per prefix length. Mergeable by addition.
class PatternCounts {
 public:
  void add_message(const std::vector<PosPattern>& prefixes) {
    for (const PosPattern& p : prefixes) {
      if (p.prefix_len() == 0 || p.prefix_len() > kMaxPrefixLength) continue;
      ++counts_[p.prefix_len() - 1][p];
      ++totals_[p.prefix_len() - 1];
    }
  }

  void add(const PosPattern& pattern, std::uint64_t count) {
    if (pattern.prefix_len() == 0 || pattern.prefix_len() > kMaxPrefixLength) return;
    counts_[pattern.prefix_len() - 1][pattern] += count;
    totals_[pattern.prefix_len() - 1] += count;
  }

  void merge(const PatternCounts& other) {
    for (std::size_t k = 0; k < kMaxPrefixLength; ++k) {
      for (const auto& [pattern, count] : other.counts_[k]) counts_[k][pattern] += count;
      totals_[k] += other.totals_[k];
    }
  }

  /// Messages contributing to the given prefix length.
  std::uint64_t total(std::size_t prefix_len) const { return totals_.at(prefix_len - 1); }

  const std::map<PosPattern, std::uint64_t>& counts(std::size_t prefix_len) const {
    return counts_.at(prefix_len - 1);
  }

  /// The `top_k` most frequent patterns (ties by label) plus an "Others" row
  /// for the remainder, with percentages of `total(prefix_len)`.
  std::vector<PatternRow> table(std::size_t prefix_len, std::size_t top_k) const {
    std::vector<PatternRow> rows;
    for (const auto& [pattern, count] : counts(prefix_len)) rows.push_back({pattern.label(), count, 0.0});
    std::sort(rows.begin(), rows.end(), [](const PatternRow& a, const PatternRow& b) {
      return a.count != b.count ? a.count > b.count : a.label < b.label;
    });
    if (rows.size() > top_k) {
      std::uint64_t rest = 0;
      for (std::size_t i = top_k; i < rows.size(); ++i) rest += rows[i].count;
      rows.resize(top_k);
      rows.push_back({"Others", rest, 0.0});
    }
    const auto denominator = static_cast<double>(total(prefix_len));
    for (auto& row : rows) row.percent = denominator > 0 ? round2(100.0 * static_cast<double>(row.count) / denominator) : 0.0;
    return rows;
  }

  friend bool operator==(const PatternCounts&, const PatternCounts&) = default;

 private:
  std::array<std::map<PosPattern, std::uint64_t>, kMaxPrefixLength> counts_{};
  std::array<std::uint64_t, kMaxPrefixLength> totals_{};
};

}  // namespace assertlint
