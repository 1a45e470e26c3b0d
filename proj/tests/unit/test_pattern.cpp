#include <gtest/gtest.h>

#include <map>
#include <set>

#include "qtwist/pattern/pattern.hpp"

using namespace qtwist;

TEST(GluingPattern, ValidatesBijectionAndOrder) {
  GluingPattern p({1, 3, 2, 4});
  EXPECT_EQ(p.n(), 2u);
  EXPECT_EQ(p.start(1), 2u);
  EXPECT_EQ(p.end(1), 4u);
  EXPECT_EQ(to_string(p), "(1,3,2,4)");
  EXPECT_THROW(GluingPattern({3, 1, 2, 4}), DomainError);
  EXPECT_THROW(GluingPattern({1, 2, 2, 4}), DomainError);
  EXPECT_THROW(GluingPattern({1, 5, 2, 4}), DomainError);
  EXPECT_THROW(GluingPattern({1, 2, 3}), DomainError);
}

TEST(PairClass, SixFixtures) {
  EXPECT_EQ(classify_pair(GluingPattern({1, 2, 3, 4}), 0, 1), PairClass::PosUnlinked);
  EXPECT_EQ(classify_pair(GluingPattern({1, 3, 2, 4}), 0, 1), PairClass::PosLinked);
  EXPECT_EQ(classify_pair(GluingPattern({1, 4, 2, 3}), 0, 1), PairClass::PosNested);
  EXPECT_EQ(classify_pair(GluingPattern({3, 4, 1, 2}), 0, 1), PairClass::NegUnlinked);
  EXPECT_EQ(classify_pair(GluingPattern({2, 4, 1, 3}), 0, 1), PairClass::NegLinked);
  EXPECT_EQ(classify_pair(GluingPattern({2, 3, 1, 4}), 0, 1), PairClass::NegNested);
  EXPECT_THROW(classify_pair(GluingPattern({1, 2, 3, 4}), 1, 0), DomainError);
}

TEST(PairClass, TotalOnAllSmallPatterns) {
  for (std::size_t n = 2; n <= 4; ++n) {
    std::map<PairClass, int> seen;
    for (const auto& p : enumerate_patterns(n))
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
          PairClass c;
          ASSERT_NO_THROW(c = classify_pair(p, i, j)) << to_string(p);
          ++seen[c];
        }
    EXPECT_EQ(seen.size(), 6u);
  }
}

TEST(Enumeration, PatternAndLabelCounts) {
  EXPECT_EQ(enumerate_patterns(1).size(), 1u);
  EXPECT_EQ(enumerate_patterns(2).size(), 6u);
  EXPECT_EQ(enumerate_patterns(3).size(), 90u);
  EXPECT_EQ(enumerate_patterns(4).size(), 2520u);
  auto labels = enumerate_labels(2);
  ASSERT_EQ(labels.size(), 4u);
  EXPECT_EQ(labels[1], (std::vector<AutKind>{AutKind::id, AutKind::flip}));
}

TEST(Surface, KnownPatterns) {
  auto s = surface_invariants(GluingPattern({1, 2, 3, 4}));
  EXPECT_EQ(s.genus, 0);
  EXPECT_EQ(s.boundary_count, 3);
  s = surface_invariants(GluingPattern({1, 3, 2, 4}));
  EXPECT_EQ(s.genus, 1);
  EXPECT_EQ(s.boundary_count, 1);
  s = surface_invariants(GluingPattern({1, 2}));
  EXPECT_EQ(s.genus, 0);
  EXPECT_EQ(s.boundary_count, 2);
  s = surface_invariants(GluingPattern({1, 4, 2, 6, 3, 5}));
  EXPECT_EQ(s.genus, 1);
  EXPECT_EQ(s.boundary_count, 2);
}

TEST(Surface, EulerRelationUpToFiveEdges) {
  for (std::size_t n = 1; n <= 5; ++n) {
    std::set<std::pair<int, int>> kinds;
    for (const auto& p : enumerate_patterns(n)) {
      auto s = surface_invariants(p);
      ASSERT_EQ(static_cast<int>(n), 2 * s.genus + s.boundary_count - 1) << to_string(p);
      ASSERT_EQ(1 - static_cast<int>(n), 2 - 2 * s.genus - s.boundary_count);
      kinds.insert({s.genus, s.boundary_count});
    }
    // every (g, r) with 2g + r = n + 1 and r >= 1 is realized
    EXPECT_EQ(kinds.size(), (n + 2) / 2) << n;
  }
}

TEST(BoundaryWords, EachLetterOccursOnce) {
  for (const auto& p : enumerate_patterns(3)) {
    DecoratedPattern d(p, std::vector<AutKind>(3, AutKind::id));
    std::multiset<std::pair<std::size_t, int>> letters;
    for (const auto& w : boundary_words(d))
      for (const auto& l : w.letters) letters.insert({l.edge, l.exponent});
    EXPECT_EQ(letters.size(), 6u);
    for (std::size_t e = 0; e < 3; ++e) {
      EXPECT_EQ(letters.count({e, 1}), 1u);
      EXPECT_EQ(letters.count({e, -1}), 1u);
    }
  }
}

TEST(BoundaryWords, HolonomyComposesLabels) {
  DecoratedPattern d(GluingPattern({1, 4, 2, 3}), {AutKind::flip, AutKind::flip});
  auto w = boundary_words(d);
  ASSERT_EQ(w.size(), 3u);
  EXPECT_EQ(to_string(w[0].letters), "g1");
  EXPECT_EQ(w[0].holonomy, AutKind::flip);
  EXPECT_EQ(to_string(w[1].letters), "g2g1^-1");
  EXPECT_EQ(w[1].holonomy, AutKind::id);
  EXPECT_EQ(to_string(w[2].letters), "g2^-1");

  DecoratedPattern torus(GluingPattern({1, 3, 2, 4}), {AutKind::flip, AutKind::id});
  auto t = boundary_words(torus);
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(to_string(t[0].letters), "g1g2^-1g1^-1g2");
  EXPECT_EQ(t[0].holonomy, AutKind::id);
}

TEST(Parse, FullFile) {
  auto d = parse_pattern("# comment\nn = 2\nD = A2\nP = 1 3 2 4  # linked\nlabels = flip id\n");
  EXPECT_EQ(to_string(d.pattern), "(1,3,2,4)");
  EXPECT_EQ(d.labels, (std::vector<AutKind>{AutKind::flip, AutKind::id}));
  EXPECT_EQ(d.dynkin_rank, 2u);
}

TEST(Parse, SemicolonsAndDefaults) {
  auto d = parse_pattern("n = 1; P = 1 2");
  EXPECT_EQ(d.labels, std::vector<AutKind>{AutKind::id});
  EXPECT_EQ(d.dynkin_rank, 0u);
}

std::size_t error_line(const std::string& text) {
  try {
    parse_pattern(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

TEST(Parse, ErrorsCarryLineNumbers) {
  EXPECT_EQ(error_line("n = 2\nP = 3 1 2 4\n"), 2u);
  EXPECT_EQ(error_line("n = 2\nP = 1 2 3\n"), 2u);
  EXPECT_EQ(error_line("n = 1\nP = 1 2\nlabels = twist\n"), 3u);
  EXPECT_EQ(error_line("n = 1\nD = A1\nP = 1 2\nlabels = flip\n"), 4u);
  EXPECT_EQ(error_line("n = 1\nD = D4\nP = 1 2\n"), 2u);
  EXPECT_EQ(error_line("n = 1\nn = 1\n"), 2u);
  EXPECT_EQ(error_line("n = x\n"), 1u);
  EXPECT_EQ(error_line("color = red\n"), 1u);
  EXPECT_NE(error_line("n = 1\n"), 0u);
  EXPECT_EQ(error_line("n = 1\nP = 1 2\n"), 0u);
}
