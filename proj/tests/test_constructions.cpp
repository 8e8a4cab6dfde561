#include <gtest/gtest.h>

#include "hurwitz/constructions.hpp"

using namespace hurwitz;

namespace {

ConstructionContext transpositions(int d) { return ConstructionContext::make(d, parse_class(d, "2")); }

bool all_in(const Factorization& s, const ClassLabel& c) {
  for (const auto& f : s.factors())
    if (class_of(f) != c) return false;
  return true;
}

}  // namespace

TEST(BuildH, LengthsAndProduct) {
  EXPECT_EQ(format_word(build_h(2)), "(1,2) (1,2) (1,2)");
  for (int d = 2; d <= 8; ++d) EXPECT_EQ(build_h(d).length(), static_cast<std::size_t>(3 * (d - 1)));
  EXPECT_EQ(to_cycle_string(alpha(build_h(4))), "(1,4,3,2)");
  EXPECT_EQ(tau(build_h(4)).to_string(), "2,1,1:9");
  EXPECT_THROW(build_h(1), PreconditionError);
}

TEST(Context, Conjugators) {
  const auto ctx = transpositions(5);
  EXPECT_TRUE(ctx.conjugator(1, 2).is_identity());
  const Perm t12 = Perm::transposition(5, 1, 2);
  for (int i = 1; i <= 5; ++i) {
    for (int j = 1; j <= 5; ++j) {
      if (i == j) continue;
      const Perm s = ctx.conjugator(i, j);
      EXPECT_EQ(s(1), i);
      EXPECT_EQ(s(2), j);
      EXPECT_EQ(conj(s, t12), Perm::transposition(5, i, j));
    }
  }
  EXPECT_THROW(ctx.conjugator(2, 2), PreconditionError);
  EXPECT_THROW(ctx.conjugator(0, 2), PreconditionError);
}

TEST(Context, Preconditions) {
  EXPECT_THROW(ConstructionContext::make(4, parse_class(4, "4")), PreconditionError);   // f_C = 0
  EXPECT_THROW(ConstructionContext::make(4, parse_class(4, "3")), PreconditionError);   // even
  EXPECT_THROW(ConstructionContext::make(5, parse_class(4, "2")), PreconditionError);   // wrong degree
  const auto ctx = ConstructionContext::make(6, parse_class(6, "4"));
  EXPECT_EQ(ctx.m(), 3u);
  for (const auto& f : ctx.witness().factors()) {
    EXPECT_EQ(f(3), 3);
    EXPECT_EQ(f(4), 4);
  }
  EXPECT_EQ(alpha(ctx.witness()), Perm::transposition(6, 1, 2));
}

TEST(Context, CustomWitness) {
  const ClassLabel t = parse_class(4, "2");
  EXPECT_NO_THROW(ConstructionContext::with_witness(4, t, parse_word("(1,2)", 4)));
  EXPECT_THROW(ConstructionContext::with_witness(4, t, parse_word("(1,3) (2,3) (1,3)", 4)), PreconditionError);
  EXPECT_EQ(ConstructionContext::with_witness(4, t, parse_word("(1,2) (1,2) (1,2)", 4)).m(), 3u);
  EXPECT_THROW(ConstructionContext::with_witness(4, t, parse_word("(1,2) (1,2)", 4)), PreconditionError);
}

TEST(Build, SbarAndC) {
  const auto ctx = transpositions(4);
  EXPECT_EQ(format_word(build_sbar(ctx, 1, 2)), "(1,2)");
  EXPECT_EQ(format_word(build_sbar(ctx, 2, 3)), "(2,3)");
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j) EXPECT_EQ(alpha(build_sbar(ctx, i, j)), Perm::transposition(4, i, j));
  const auto c = build_c(ctx);
  EXPECT_EQ(c.length(), 6u);
  EXPECT_TRUE(alpha(c).is_identity());
  EXPECT_EQ(generated_subgroup(c).size(), 24u);

  const auto c3 = build_c(transpositions(3));
  EXPECT_EQ(format_word(c3), "(1,2) (1,2) (2,3) (2,3)");
}

TEST(Build, YAndZ) {
  const auto ctx4 = transpositions(4);
  EXPECT_EQ(build_y(ctx4, 4).length(), 7u);
  EXPECT_EQ(alpha(build_y(ctx4, 4)), Perm::transposition(4, 1, 2));
  EXPECT_THROW(build_y(ctx4, 5), PreconditionError);
  EXPECT_THROW(build_y(ctx4, 3), PreconditionError);
  const auto ctx5 = transpositions(5);
  std::vector<Factorization> chain;
  EXPECT_EQ(build_y(ctx5, 5, &chain).length(), 27u);
  ASSERT_EQ(chain.size(), 2u);
  EXPECT_EQ(chain[0].length(), 9u);
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j)
      if (i != j) {
        EXPECT_EQ(alpha(build_z(ctx5, i, j)), Perm::transposition(5, i, j));
      }
}

TEST(Build, HC) {
  EXPECT_EQ(build_h_C(transpositions(4)).length(), 63u);
  EXPECT_EQ(build_h_C(transpositions(5)).length(), 324u);
  const auto ctx = ConstructionContext::make(6, parse_class(6, "4"));
  const auto hc = build_h_C(ctx);
  EXPECT_EQ(hc.length(), h_C_length(6, 3));
  EXPECT_TRUE(all_in(hc, parse_class(6, "4")));
  EXPECT_EQ(tau(build_z(ctx, 1, 2)).count(parse_class(6, "4")), static_cast<int>(y_length(6, 6, 3)));
}

TEST(Verify, LengthsReportPasses) {
  EXPECT_EQ(verify_lengths(transpositions(4)).status(), "pass");
  EXPECT_EQ(verify_lengths(transpositions(5)).status(), "pass");
  EXPECT_EQ(verify_lengths(ConstructionContext::make(6, parse_class(6, "4"))).status(), "pass");
}

TEST(Verify, Claim1AtD4) {
  const auto rep = verify_claim1(transpositions(4));
  EXPECT_EQ(rep.status(), "pass");
  ASSERT_EQ(rep.rows.size(), 3u);  // (1,2), (3,4), control
  const auto z = build_z(transpositions(4), 1, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    EXPECT_EQ(rep.rows[i].verdict, Verdict::yes);
    EXPECT_FALSE(rep.rows[i].certificate.empty());
  }
  EXPECT_EQ(apply_moves(rho(Perm::transposition(4, 3, 4), z), rep.rows[1].certificate), z);
  EXPECT_EQ(rep.rows[2].verdict, Verdict::no);
}

TEST(Verify, Claim2AtD4) {
  const auto rep = verify_claim2(transpositions(4));
  EXPECT_EQ(rep.status(), "pass");
  EXPECT_EQ(rep.rows[0].detail, "6 classes");
}

TEST(Verify, Claim3AtD4) {
  const auto rep = verify_claim3(transpositions(4));
  EXPECT_EQ(rep.status(), "pass");
  int triples = 0, commutes = 0;
  for (const auto& r : rep.rows) {
    if (r.label.find(" ~ ") == std::string::npos) continue;
    if (r.label.find("z(1,2).z(3,4)") != std::string::npos) ++commutes;
    if (r.label.find("z(1,2).z(1,3)") != std::string::npos) ++triples;
  }
  EXPECT_EQ(triples, 1);
  EXPECT_EQ(commutes, 1);
}

TEST(Verify, UnknownNotFailUnderLimits) {
  const auto rep = verify_claim1(transpositions(5), Limits{.max_states = 2000});
  EXPECT_EQ(rep.status(), "unknown");
}

TEST(RewriteTail, D3Exhaustive) {
  const auto rep = verify_claim5(3, parse_class(3, "2"));
  EXPECT_EQ(rep.status(), "pass");
  EXPECT_GT(rep.rows.size(), 0u);
}

TEST(RewriteTail, CertificateEndsInTail) {
  const auto s = parse_word("(1,2) (1,3) (2,3) (1,2) (1,2) (1,3) (2,3)", 3);
  const auto h = build_h(3);
  const auto t = rewrite_tail(s, h);
  ASSERT_EQ(t.verdict, Verdict::yes);
  const auto r = apply_moves(s, t.certificate);
  EXPECT_EQ(slice(r, r.length() - h.length(), h.length()), h);
}

TEST(RewriteTail, NoAndDegenerate) {
  const auto h = build_h(3);
  // too short
  EXPECT_EQ(rewrite_tail(parse_word("(1,2) (2,3)", 3), h).verdict, Verdict::no);
  // the type of h is not contained in the type of (1,2)^6
  EXPECT_EQ(rewrite_tail(power(parse_word("(1,2)", 3), 6), h).verdict, Verdict::no);
  // already ends in the tail
  const auto s = concat(parse_word("(1,3) (1,3)", 3), h);
  const auto t = rewrite_tail(s, h);
  EXPECT_EQ(t.verdict, Verdict::yes);
  EXPECT_TRUE(t.certificate.empty());
}

TEST(RewriteTail, Pigeonhole) {
  const ClassLabel c = parse_class(4, "2");
  const auto hc = build_h_C(transpositions(4));
  const auto p = pigeonhole(hc, c);
  EXPECT_EQ(p.threshold, 12u);
  EXPECT_TRUE(p.applies);
  EXPECT_GE(p.multiplicity, 3u);
  EXPECT_FALSE(pigeonhole(build_h(4), c).applies);
}

TEST(RewriteTail, Claim5D4Degenerate) {
  const auto rep = verify_claim5(4, parse_class(4, "2"));
  EXPECT_EQ(rep.status(), "pass");
}
