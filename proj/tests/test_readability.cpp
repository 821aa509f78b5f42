#include <gtest/gtest.h>

#include "support.hpp"

using namespace assertlint;
using testing_support::message_of;

namespace {

std::string rendered(const std::string& expr) { return render(message_of(expr)).text; }

double ease(const std::string& text) { return *score(RenderedMessage{text}).reading_ease; }

}  // namespace

TEST(Render, LiteralsAndIdentifiers) {
  EXPECT_EQ(rendered(R"("interpolate")"), "interpolate");
  EXPECT_EQ(rendered("r.getLowerBound()"), "r get Lower Bound");
  EXPECT_EQ(rendered(R"("file " + file.getAbsolutePath() + " should exist")"), "file file get Absolute Path should exist");
  EXPECT_EQ(rendered(R"("" + c)"), "c");
  EXPECT_EQ(rendered(R"("a" + "b")"), "ab");
  EXPECT_EQ(rendered(R"("Incorrect id:" + actualId)"), "Incorrect id: actual Id");
}

TEST(Render, MethodArgumentsAreDropped) {
  EXPECT_EQ(rendered("format(x, y)"), "format");
  EXPECT_EQ(rendered("String.valueOf(count)"), "String value Of");
}

TEST(Syllables, Heuristic) {
  EXPECT_EQ(count_syllables("works"), 1);
  EXPECT_EQ(count_syllables("Serialization"), 5);
  EXPECT_EQ(count_syllables("make"), 1);
  EXPECT_EQ(count_syllables("table"), 2);
  EXPECT_EQ(count_syllables("the"), 1);
  EXPECT_EQ(count_syllables("rhythm"), 1);
  EXPECT_EQ(count_syllables("x"), 1);
  EXPECT_EQ(count_syllables("interpolate"), 4);
}

TEST(Segment, WordsAndSentences) {
  const auto s = segment("Results should not be empty");
  EXPECT_EQ(s.words, 5);
  EXPECT_EQ(s.sentences, 1);
  const auto t = segment("First one. Second one! Third?");
  EXPECT_EQ(t.words, 5);
  EXPECT_EQ(t.sentences, 3);
  EXPECT_EQ(t.sentence_starts, (std::vector<std::size_t>{0, 2, 4}));
}

TEST(Segment, PunctuationOnlyHasNoWords) {
  EXPECT_EQ(segment("(0,0)").words, 2);
  EXPECT_EQ(segment("!!! ...").words, 0);
  EXPECT_EQ(segment("").words, 0);
  EXPECT_EQ(segment("\xE2\x80\x94 \xE2\x86\x92").words, 0);
  EXPECT_EQ(segment("caf\xC3\xA9 ok").words, 2);
}

TEST(Score, SingleWordAnchors) {
  EXPECT_NEAR(ease("works"), 121.22, 0.005);
  EXPECT_NEAR(round2(ease("Serialization")), -217.18, 1e-9);
}

TEST(Score, EmptyIsUnscorable) {
  const auto m = score(RenderedMessage{"..."});
  EXPECT_FALSE(m.scorable());
  EXPECT_EQ(m.words, 0);
}

TEST(Score, FormulaIdentity) {
  const auto m = score(RenderedMessage{"The buffer is not available for reading."});
  ASSERT_TRUE(m.scorable());
  const double wps = static_cast<double>(m.words) / m.sentences;
  const double spw = static_cast<double>(m.syllables) / m.words;
  EXPECT_DOUBLE_EQ(*m.reading_ease, 206.835 - 1.015 * wps - 84.6 * spw);
  EXPECT_DOUBLE_EQ(*m.grade_level, 0.39 * wps + 11.8 * spw - 15.59);
}

TEST(Score, MoreSyllablesLowerEase) {
  EXPECT_GT(ease("the cat sat"), ease("the elephant deliberated"));
  EXPECT_GT(ease("Short. Words."), ease("Short words"));
}

TEST(Score, Rounding) {
  EXPECT_DOUBLE_EQ(round2(1.005000001), 1.01);
  EXPECT_DOUBLE_EQ(round2(-24.855000001), -24.86);
  EXPECT_DOUBLE_EQ(round2(78.8725), 78.87);
}
