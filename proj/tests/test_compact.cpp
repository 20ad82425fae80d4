#include "gk/gk.hpp"

#include <gtest/gtest.h>

using gk::Family;
using gk::Prime;

TEST(CompactForm, F4) {
  const auto c = gk::compact_form(Family::F4);
  EXPECT_EQ(c.classes.size(), 8u);
  EXPECT_EQ(c.degree("R_8"), 0u);
  EXPECT_EQ(c.degree("R_12"), 0u);
  EXPECT_TRUE(c.rules.empty());
}

TEST(CompactForm, G2) {
  const auto c = gk::compact_form(Family::G2);
  std::vector<std::string> labels;
  for (const auto& cl : c.classes) labels.push_back(cl.label);
  EXPECT_EQ(labels, (std::vector<std::string>{"R_1", "R_2", "{3}", "R_3", "R_6"}));
  EXPECT_TRUE(c.class_adjacent("R_1", "R_2"));
  EXPECT_TRUE(c.class_adjacent("R_1", "{3}"));
  EXPECT_TRUE(c.class_adjacent("{3}", "R_2"));
  EXPECT_EQ(c.degree("R_3"), 0u);
  EXPECT_EQ(c.degree("R_6"), 0u);
}

TEST(CompactForm, E8) {
  const auto c = gk::compact_form(Family::E8);
  EXPECT_EQ(c.classes.size(), 17u);
  ASSERT_EQ(c.rules.size(), 1u);
  EXPECT_EQ(c.rules[0].vertex, "5");
  EXPECT_EQ(c.rules[0].extra_neighbors, std::vector<std::string>{"R_20"});
  ASSERT_NE(c.find("R"), nullptr);
  EXPECT_EQ(c.find("R")->kind, gk::ClassKind::PrimitiveUnion);
  for (const char* isolated : {"R_15", "R_24", "R_30"}) EXPECT_EQ(c.degree(isolated), 0u) << isolated;
  EXPECT_EQ(c.degree("R_20"), 0u);
}

TEST(CompactForm, TwoF4) {
  const auto c = gk::compact_form(Family::TwoF4);
  EXPECT_EQ(c.classes.size(), 8u);
  EXPECT_EQ(c.degree(gk::twof4_labels()[4]), 0u);
  EXPECT_EQ(c.degree(gk::twof4_labels()[5]), 0u);
}

TEST(CompactForm, Unsupported) {
  EXPECT_THROW(gk::compact_form(Family::E7), gk::UnsupportedError);
  EXPECT_THROW(gk::parse_compact_family("E7"), gk::UnsupportedError);
  EXPECT_EQ(gk::parse_compact_family("2F4"), Family::TwoF4);
}

TEST(Expand, F4AtTwoEqualsCriterion) {
  EXPECT_EQ(gk::expand_compact(gk::compact_form(Family::F4), 2), gk::graph_of("F4(2)"));
}

TEST(Expand, G2AtThree) {
  const auto g = gk::expand_compact(gk::compact_form(Family::G2), 3);
  EXPECT_EQ(g.vertices(), (std::vector<Prime>{2, 3, 7, 13}));
  EXPECT_EQ(g.edges().size(), 1u);
  EXPECT_TRUE(g.adjacent(2, 3));
  // R_1(3) is empty and dropped.
  for (const auto& c : g.classes()) EXPECT_NE(c.label, "R_1");
}

TEST(Expand, E8AtTwoFollowsTheFiveRule) {
  const auto g = gk::expand_compact(gk::compact_form(Family::E8), 2);
  EXPECT_TRUE(g.adjacent(5, 41));
  EXPECT_FALSE(g.adjacent(5, 241));
  // R_4(2) = {5}, so 5 has exactly R_4's neighbours plus R_20.
  const std::set<unsigned> near{1, 2, 3, 5, 6, 8, 10, 12, 20};
  for (Prime r : g.vertices()) {
    if (r == 5) continue;
    const unsigned e = r == 2 ? 1 : gk::e_of(r, 2);
    EXPECT_EQ(g.adjacent(5, r), near.count(e) > 0) << r;
  }
}

TEST(Expand, E8FiveOutsideR4HasNoR20Edge) {
  // q = 4: 5 in R_1 u R_2 (4 = -1 mod 5), so 5 lies in R and the R_20 rule does not fire.
  const auto g = gk::expand_compact(gk::compact_form(Family::E8), 4);
  const auto parts = gk::components(g);
  EXPECT_EQ(parts.count(), 5u);
  EXPECT_TRUE(g.adjacent(2, 5));
}

TEST(Expand, RejectsBadQ) {
  EXPECT_THROW(gk::expand_compact(gk::compact_form(Family::G2), 4), gk::ConstraintError);
  EXPECT_THROW(gk::expand_compact(gk::compact_form(Family::F4), 3), gk::ConstraintError);
  EXPECT_THROW(gk::expand_compact(gk::compact_form(Family::TwoF4), 4), gk::ConstraintError);
  EXPECT_THROW(gk::expand_compact(gk::compact_form(Family::E8), 6), gk::ConstraintError);
}

TEST(Expand, ClassesDisjointAndCoverVertices) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto g = gk::expand_compact(gk::compact_form(Family::E8), q);
    std::vector<Prime> all;
    for (const auto& c : g.classes()) {
      EXPECT_FALSE(c.primes.empty());
      all.insert(all.end(), c.primes.begin(), c.primes.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(std::adjacent_find(all.begin(), all.end()), all.end()) << q;
    EXPECT_EQ(all, g.vertices()) << q;
  }
}

TEST(Describe, ListsClassesAndRule) {
  const std::string s = gk::describe(gk::compact_form(Family::E8));
  EXPECT_NE(s.find("E8 compact form"), std::string::npos);
  EXPECT_NE(s.find("R_20"), std::string::npos);
  EXPECT_NE(s.find("rule: 5"), std::string::npos);
}
