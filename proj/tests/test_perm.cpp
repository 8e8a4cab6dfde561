#include <gtest/gtest.h>

#include "hurwitz/alphabet.hpp"
#include "hurwitz/perm.hpp"

using namespace hurwitz;

namespace {

Perm P(std::string_view s, int d) { return parse_perm(s, d); }

}  // namespace

TEST(Perm, ComposeAppliesRightFactorFirst) {
  EXPECT_EQ(to_cycle_string(compose(P("(1,2)", 3), P("(2,3)", 3))), "(1,2,3)");
  EXPECT_EQ(P("(1,2)", 3) * P("(2,3)", 3), P("(1,2,3)", 3));
}

TEST(Perm, Conjugation) {
  EXPECT_EQ(to_cycle_string(conj(P("(1,2)", 3), P("(2,3)", 3))), "(1,3)");
  EXPECT_EQ(to_cycle_string(conj(P("(1,3)", 3), P("(1,2)", 3))), "(2,3)");
  EXPECT_EQ(conj(P("(1,2,3,4)", 4), P("(1,3)", 4)), P("(2,4)", 4));
}

TEST(Perm, InverseAndIdentity) {
  const Perm p = P("(1,4,2)(3,5)", 5);
  EXPECT_TRUE((p * inverse(p)).is_identity());
  EXPECT_EQ(inverse(p), P("(1,2,4)(3,5)", 5));
  EXPECT_EQ(to_cycle_string(Perm::identity(4)), "()");
}

TEST(Perm, ParseBothNotations) {
  EXPECT_EQ(P("[2,1,4,3]", 4), P("(1,2)(3,4)", 4));
  EXPECT_EQ(parse_perm("(1,3)").degree(), 3);
  EXPECT_EQ(parse_perm("[3,1,2]").degree(), 3);
  EXPECT_EQ(to_one_line_string(P("(1,2,3)", 4)), "[2,3,1,4]");
  EXPECT_EQ(P("(1)(2,3)", 3), P("(2,3)", 3));
}

TEST(Perm, ParseErrors) {
  EXPECT_THROW(parse_perm(""), ParseError);
  EXPECT_THROW(parse_perm("(1,2"), ParseError);
  EXPECT_THROW(parse_perm("(1,x)"), ParseError);
  EXPECT_THROW(parse_perm("[1,1]"), Error);
  EXPECT_THROW(parse_perm("(1,5)", 4), Error);
  EXPECT_THROW(parse_perm("[2,1,3]", 4), DegreeMismatch);
}

TEST(Perm, DegreeMismatchOnCompose) {
  EXPECT_THROW(compose(Perm::identity(3), Perm::identity(4)), DegreeMismatch);
}

TEST(Perm, RoundTripAllOfS5) {
  for (const auto& c : partitions(5)) {
    for (const auto& p : class_elements(5, c)) {
      EXPECT_EQ(parse_perm(to_cycle_string(p), 5), p);
      EXPECT_EQ(parse_perm(to_one_line_string(p), 5), p);
      EXPECT_EQ(class_of(p), c);
    }
  }
}

TEST(Perm, OrderIsLexOnOneLine) {
  // [1,3,2] < [2,1,3] < [3,2,1]
  EXPECT_LT(P("(2,3)", 3), P("(1,2)", 3));
  EXPECT_LT(P("(1,2)", 3), P("(1,3)", 3));
}

TEST(ClassLabel, Basics) {
  const ClassLabel t = parse_class(4, "2");
  EXPECT_EQ(t.to_string(), "2,1,1");
  EXPECT_EQ(t.parity(), Parity::odd);
  EXPECT_EQ(t.order(), 2u);
  EXPECT_EQ(t.fixed_points(), 2);
  EXPECT_EQ(t.class_size(), 6u);
  EXPECT_EQ(parse_class(4, "4").class_size(), 6u);
  EXPECT_EQ(parse_class(6, "3,2").order(), 6u);
  EXPECT_EQ(parse_class(4, "2,2").parity(), Parity::even);
  EXPECT_THROW(parse_class(4, "3,3"), Error);
  EXPECT_THROW(parse_class(4, "0"), Error);
}

TEST(ClassLabel, SizesSumToFactorial) {
  for (int d = 1; d <= 8; ++d) {
    std::uint64_t total = 0;
    for (const auto& c : partitions(d)) total += c.class_size();
    EXPECT_EQ(total, factorial(d)) << "d=" << d;
  }
  EXPECT_EQ(partitions(4).size(), 5u);
  EXPECT_EQ(partitions(6).size(), 11u);
}

TEST(ClassLabel, ElementsMatchSize) {
  for (const auto& c : partitions(6)) EXPECT_EQ(class_elements(6, c).size(), c.class_size()) << c.to_string();
  EXPECT_EQ(class_elements(4, parse_class(4, "4")).size(), 6u);
}

TEST(Closure, SubgroupSizes) {
  EXPECT_EQ(subgroup_closure(4, class_elements(4, parse_class(4, "3"))).size(), 12u);
  EXPECT_EQ(subgroup_closure(4, {P("(1,2)(3,4)", 4), P("(1,3)(2,4)", 4)}).size(), 4u);
  EXPECT_EQ(subgroup_closure(5, {P("(1,2)", 5), P("(1,2,3,4,5)", 5)}).size(), 120u);
  EXPECT_EQ(subgroup_closure(3, {}).size(), 1u);
}

TEST(Alphabet, LettersFollowPermOrder) {
  const Alphabet A = Alphabet::of_classes(4, {parse_class(4, "2"), parse_class(4, "3")});
  ASSERT_EQ(A.size(), 6u + 8u);
  for (std::size_t i = 1; i < A.size(); ++i) EXPECT_LT(A.perm(static_cast<Letter>(i - 1)), A.perm(static_cast<Letter>(i)));
  for (Letter a = 0; a < A.size(); ++a) {
    EXPECT_EQ(A.perm(A.inv(a)), inverse(A.perm(a)));
    for (Letter b = 0; b < A.size(); ++b) EXPECT_EQ(A.perm(A.conj(a, b)), conj(A.perm(a), A.perm(b)));
  }
  EXPECT_FALSE(A.find(P("(1,2)(3,4)", 4)).has_value());
}
