#include <gtest/gtest.h>

#include "support.hpp"

using namespace assertlint;

TEST(SourceFile, LocationsAreOneBased) {
  const auto f = SourceFile::from_string("ab\ncd\r\nef\rgh");
  EXPECT_EQ(f.line_count(), 4u);
  EXPECT_EQ(f.location(0), (Location{1, 1}));
  EXPECT_EQ(f.location(4), (Location{2, 2}));
  EXPECT_EQ(f.location(7), (Location{3, 1}));
  EXPECT_EQ(f.location(10), (Location{4, 1}));
}

TEST(SourceFile, StripsByteOrderMark) {
  const auto f = SourceFile::from_string("\xEF\xBB\xBF" "class A {}");
  EXPECT_EQ(f.content().substr(0, 5), "class");
}

TEST(SourceFile, LoadMissingFileThrows) {
  EXPECT_THROW(SourceFile::load("/nonexistent/dir/File.java"), std::runtime_error);
}

TEST(Lexer, DecodesStringEscapes) {
  const auto r = lex(SourceFile::from_string(R"(x = "a\"b\nA";)"));
  ASSERT_TRUE(r.diagnostics.empty());
  const auto it = std::find_if(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.kind == TokenKind::String; });
  ASSERT_NE(it, r.tokens.end());
  EXPECT_EQ(it->text, "a\"b\nA");
}

TEST(Lexer, TextBlockStripsIndentation) {
  const auto r = lex(SourceFile::from_string("s = \"\"\"\n    hello\n      world\n    \"\"\";"));
  const auto it = std::find_if(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.kind == TokenKind::String; });
  ASSERT_NE(it, r.tokens.end());
  EXPECT_EQ(it->text, "hello\n  world\n");
}

TEST(Lexer, SkipsComments) {
  const auto r = lex(SourceFile::from_string("a /* assertTrue(\"x\", y) */ b // fail(\"z\")\nc"));
  std::vector<std::string> idents;
  for (const auto& t : r.tokens) {
    if (t.kind == TokenKind::Identifier) idents.push_back(t.text);
  }
  EXPECT_EQ(idents, (std::vector<std::string>{"a", "b", "c"}));
}

TEST(Lexer, UnterminatedStringIsDiagnosedAndRecovers) {
  const auto r = lex(SourceFile::from_string("a = \"open\nb = 1;"));
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].kind, DiagnosticKind::LexError);
  EXPECT_EQ(r.diagnostics[0].location.line, 1);
  const bool saw_b = std::any_of(r.tokens.begin(), r.tokens.end(), [](const Token& t) { return t.is_ident("b"); });
  EXPECT_TRUE(saw_b);
}

TEST(Lexer, AlwaysEndsWithEndToken) {
  for (const char* text : {"", "\"", "/*", "'", "@@@", "\"\"\""}) {
    const auto r = lex(SourceFile::from_string(text));
    ASSERT_FALSE(r.tokens.empty());
    EXPECT_EQ(r.tokens.back().kind, TokenKind::End) << text;
  }
}

TEST(Lexer, NumbersAndCharLiterals) {
  const auto r = lex(SourceFile::from_string("1.0e-9 0x1F 10L 'c' '\\n'"));
  std::vector<TokenKind> kinds;
  for (const auto& t : r.tokens) kinds.push_back(t.kind);
  EXPECT_EQ(kinds, (std::vector<TokenKind>{TokenKind::Number, TokenKind::Number, TokenKind::Number, TokenKind::Char,
                                           TokenKind::Char, TokenKind::End}));
}
