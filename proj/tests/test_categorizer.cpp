#include <gtest/gtest.h>

#include "support.hpp"

using namespace assertlint;
using testing_support::message_of;

namespace {

std::string label_of(const std::string& expr) {
  const auto c = categorize(message_of(expr));
  return c ? c->label() : "Unclassifiable";
}

}  // namespace

TEST(Categorize, Text) {
  EXPECT_EQ(label_of(R"("interpolate")"), "Text");
  EXPECT_EQ(label_of(R"("a" + "b")"), "Text");
}

TEST(Categorize, Identifier) {
  EXPECT_EQ(label_of("r.getLowerBound()"), "Identifier/Method");
  EXPECT_EQ(label_of("msg"), "Identifier/Variable");
  EXPECT_EQ(label_of("this.msg"), "Identifier/Variable");
  EXPECT_EQ(label_of("a + b.c()"), "Identifier/Method");
}

TEST(Categorize, Combination) {
  EXPECT_EQ(label_of(R"("too big at " + count)"), "Combination/StringPlusVariable");
  EXPECT_EQ(label_of(R"("Incorrect id: " + actual)"), "Combination/StringPlusVariable");
  EXPECT_EQ(label_of(R"("file " + file.getAbsolutePath() + " should exist")"), "Combination/StringPlusMethod");
  EXPECT_EQ(label_of(R"("x=" + x + " y=" + p.y())"), "Combination/StringPlusVariablePlusMethod");
  EXPECT_EQ(label_of(R"("attempt " + 3)"), "Combination/StringPlusDigit");
  EXPECT_EQ(label_of(R"("value " + (a + b))"), "Combination/StringPlusVariable");
}

TEST(Categorize, CharLiteralsCountAsText) {
  const auto c = categorize(message_of("'x'"));
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(c->top, TopCategory::Text);
  EXPECT_TRUE(c->has_char_literal);
  EXPECT_EQ(label_of("\"a\" + 'b' + c"), "Combination/StringPlusVariable");
}

TEST(Categorize, UnclassifiableMessages) {
  EXPECT_EQ(label_of("42"), "Unclassifiable");
  EXPECT_EQ(label_of("cond ? a : b"), "Unclassifiable");
  EXPECT_EQ(label_of("1 + 2"), "Unclassifiable");
}

TEST(Categorize, EmptyPartsAreUnclassifiable) { EXPECT_FALSE(categorize(MessageExpr{}).has_value()); }

TEST(Categorize, LabelsRoundTrip) {
  for (auto top : {TopCategory::Text, TopCategory::Identifier, TopCategory::Combination}) {
    EXPECT_EQ(parse_top_category(to_string(top)), top);
  }
  for (auto sub : {SubCategory::Method, SubCategory::Variable, SubCategory::StringPlusVariable,
                   SubCategory::StringPlusMethod, SubCategory::StringPlusVariablePlusMethod,
                   SubCategory::StringPlusDigit}) {
    EXPECT_EQ(parse_sub_category(to_string(sub)), sub);
  }
}
