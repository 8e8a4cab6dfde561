#include <gtest/gtest.h>

#include "hurwitz/class_metrics.hpp"

using namespace hurwitz;

TEST(ClassMetrics, Transpositions) {
  const auto m = compute_class_metrics(4, parse_class(4, "2"));
  EXPECT_EQ(m.n_C, 2u);
  EXPECT_EQ(m.k_C, 6u);
  EXPECT_EQ(m.f_C, 2);
  ASSERT_TRUE(m.m_C.found());
  EXPECT_EQ(m.m_C.length, 1);
  ASSERT_TRUE(m.m_C_constrained.has_value());
  EXPECT_EQ(m.m_C_constrained->length, 1);
  EXPECT_TRUE(m.generates_full);
}

TEST(ClassMetrics, FourCycles) {
  const auto w = min_word_to_transposition(4, parse_class(4, "4"));
  ASSERT_TRUE(w.found());
  EXPECT_EQ(w.length, 3);
  Perm prod = Perm::identity(4);
  for (const auto& f : w.witness) {
    EXPECT_EQ(class_of(f), parse_class(4, "4"));
    prod = prod * f;
  }
  EXPECT_EQ(prod, Perm::transposition(4, 1, 2));
  const auto m = compute_class_metrics(4, parse_class(4, "4"));
  EXPECT_EQ(m.f_C, 0);
  EXPECT_FALSE(m.m_C_constrained.has_value());
  EXPECT_THROW(bound_N_C(m), PreconditionError);
}

TEST(ClassMetrics, ConstrainedWitnessFixesPoints) {
  const ClassLabel c = parse_class(6, "4,1,1");
  EXPECT_EQ(min_word_to_transposition(6, c).length, 3);
  const auto w = min_word_constrained(6, c, {5, 6});
  ASSERT_TRUE(w.found());
  EXPECT_EQ(w.length, 3);
  for (const auto& f : w.witness) {
    EXPECT_EQ(f(5), 5);
    EXPECT_EQ(f(6), 6);
  }
  EXPECT_THROW(min_word_constrained(4, parse_class(4, "4")), PreconditionError);
}

TEST(ClassMetrics, EvenClassNotApplicable) {
  const auto w = min_word_to_transposition(4, parse_class(4, "3"));
  EXPECT_EQ(w.status, MinWord::Status::not_applicable);
  const auto m = compute_class_metrics(4, parse_class(4, "3"));
  EXPECT_THROW(bound_N_C(m), PreconditionError);
  EXPECT_FALSE(m.generates_full);  // 3-cycles give A_4
}

TEST(ClassMetrics, DepthLimit) {
  const auto w = min_word_to_transposition(4, parse_class(4, "4"), 2);
  EXPECT_EQ(w.status, MinWord::Status::limit_exceeded);
  EXPECT_EQ(w.depth_limit, 2);
}

TEST(Bound, HandEvaluation) {
  // 3^{d-3}(2d-1)(d-1) m + n k + 1
  EXPECT_EQ(bound_N_C(compute_class_metrics(4, parse_class(4, "2"))), 3u * 7 * 3 * 1 + 2 * 6 + 1);
  EXPECT_EQ(bound_N_C(compute_class_metrics(4, parse_class(4, "2"))), 76u);
  EXPECT_EQ(bound_N_C(compute_class_metrics(5, parse_class(5, "2"))), 345u);
  EXPECT_EQ(bound_N_C(compute_class_metrics(4, parse_class(4, "2")), 2), 63u * 2 + 13);
}

TEST(Bound, LengthFormulas) {
  EXPECT_EQ(y_length(4, 4, 1), 7u);
  EXPECT_EQ(y_length(5, 5, 1), 27u);
  EXPECT_EQ(h_C_length(4, 1), 63u);
  EXPECT_EQ(h_C_length(5, 1), 324u);
  EXPECT_EQ(h_C_length(6, 3), 27u * 11 * 5 * 3);
  EXPECT_THROW(y_length(4, 3, 1), PreconditionError);
}

TEST(ClassMetrics, GeneratesFullGroup) {
  EXPECT_TRUE(generates_full_group(5, parse_class(5, "2")));
  EXPECT_TRUE(generates_full_group(4, parse_class(4, "4")));
  EXPECT_FALSE(generates_full_group(4, parse_class(4, "2,2")));
  EXPECT_FALSE(generates_full_group(5, parse_class(5, "5")));
}
