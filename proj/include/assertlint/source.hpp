#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace assertlint {

/// 1-based line/column pair. Columns count bytes, not code points.
struct Location {
  std::uint32_t line = 0;
  std::uint32_t column = 0;

  friend bool operator==(const Location&, const Location&) = default;
  friend auto operator<=>(const Location&, const Location&) = default;
};

/// Half-open byte range into SourceFile::content().
struct SourceRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const SourceRange&, const SourceRange&) = default;
};

/// An immutable Java source buffer with a line-offset index.
///
/// A leading UTF-8 byte order mark is stripped on construction, so every
/// offset refers to the text after the BOM. Line terminators are `\n`,
/// `\r\n` and a lone `\r`, matching the Java language definition.
class SourceFile {
 public:
  SourceFile() { index_lines(); }

  SourceFile(std::filesystem::path path, std::string content)
      : path_(std::move(path)), content_(std::move(content)) {
    if (content_.size() >= 3 && static_cast<unsigned char>(content_[0]) == 0xEF &&
        static_cast<unsigned char>(content_[1]) == 0xBB &&
        static_cast<unsigned char>(content_[2]) == 0xBF) {
      content_.erase(0, 3);
    }
    index_lines();
  }

  static SourceFile from_string(std::string content, std::filesystem::path path = "<memory>") {
    return SourceFile(std::move(path), std::move(content));
  }

  static SourceFile load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
      throw std::runtime_error("cannot read " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return SourceFile(path, buffer.str());
  }

  const std::filesystem::path& path() const { return path_; }
  std::string_view content() const { return content_; }
  std::size_t line_count() const { return line_starts_.size(); }

  /// Maps a byte offset in [0, size] to its (line, column).
  Location location(std::size_t offset) const {
    offset = std::min(offset, content_.size());
    auto it = std::upper_bound(line_starts_.begin(), line_starts_.end(), offset);
    const auto line = static_cast<std::size_t>(it - line_starts_.begin());
    const std::size_t start = line_starts_[line - 1];
    return Location{static_cast<std::uint32_t>(line),
                    static_cast<std::uint32_t>(offset - start + 1)};
  }

  std::string_view slice(SourceRange range) const {
    const std::size_t begin = std::min(range.begin, content_.size());
    const std::size_t end = std::clamp(range.end, begin, content_.size());
    return std::string_view(content_).substr(begin, end - begin);
  }

 private:
  void index_lines() {
    line_starts_.assign(1, 0);
    for (std::size_t i = 0; i < content_.size(); ++i) {
      if (content_[i] == '\n') {
        line_starts_.push_back(i + 1);
      } else if (content_[i] == '\r') {
        if (i + 1 < content_.size() && content_[i + 1] == '\n') {
          ++i;
        }
        line_starts_.push_back(i + 1);
      }
    }
  }

  std::filesystem::path path_;
  std::string content_;
  std::vector<std::size_t> line_starts_;
};

}  // namespace assertlint
