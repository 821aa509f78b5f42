#pragma once

#include <string>

#include "assertlint/source.hpp"

namespace assertlint {

enum class DiagnosticKind {
  LexError,
  ParseError,
  UnknownOverload,
  Unclassifiable,
  Io,
};

inline const char* to_string(DiagnosticKind kind) {
  switch (kind) {
    case DiagnosticKind::LexError: return "lex-error";
    case DiagnosticKind::ParseError: return "parse-error";
    case DiagnosticKind::UnknownOverload: return "unknown-overload";
    case DiagnosticKind::Unclassifiable: return "unclassifiable";
    case DiagnosticKind::Io: return "io-error";
  }
  return "unknown";
}

/// Recoverable problem found while processing one file.
struct Diagnostic {
  DiagnosticKind kind = DiagnosticKind::ParseError;
  Location location;
  std::string message;
};

}  // namespace assertlint
