#include <gtest/gtest.h>

#include "qtwist/poisson/builders.hpp"
#include "qtwist/poisson/checks.hpp"
#include "support.hpp"

#include <set>

using namespace qtwist;
using test::OracleTerm;

namespace {

DecoratedPattern pat(std::vector<std::size_t> flat, std::vector<AutKind> labels) {
  return DecoratedPattern(GluingPattern(flat), std::move(labels));
}

constexpr AutKind id = AutKind::id;
constexpr AutKind flip = AutKind::flip;

struct BracketCase {
  std::string name;
  std::vector<std::size_t> flat;
  std::vector<AutKind> labels;
  std::size_t n;
  std::string f, g;
  std::vector<OracleTerm> expected;
};

// Values computed by an independent Fraction-based expansion of the
// half-edge bivector.
std::vector<BracketCase> bracket_cases() {
  return {
      {"LinkedFlipCross", {1, 3, 2, 4}, {flip, id}, 3, "g1_11", "g2_23",
       {{"1/6", {"g1_11", "g2_23"}}, {"-1", {"g1_12", "g2_22"}}, {"1", {"g1_13", "g2_21"}}}},
      {"Sl2SingleEdgeDiagonal", {1, 2}, {id}, 2, "g1_11", "g1_12", {{"-1", {"g1_11", "g1_12"}}}},
      {"Sl2SingleEdgeOffDiagonal", {1, 2}, {id}, 2, "g1_12", "g1_21",
       {{"-1", {"g1_11", "g1_11"}}, {"1", {"g1_11", "g1_22"}}}},
      {"Sl3FlipDiagonalCommute", {1, 2}, {flip}, 3, "g1_11", "g1_22", {}},
      {"NestedFlipFlip", {1, 4, 2, 3}, {flip, flip}, 3, "g1_12", "g2_31",
       {{"-1", {"g1_11", "g2_21"}}, {"1", {"g1_11", "g2_32"}}}},
      {"NegNestedIdFlip", {2, 3, 1, 4}, {id, flip}, 3, "g1_23", "g2_11", {{"1/2", {"g1_23", "g2_11"}}}},
  };
}

class FrozenBracket : public ::testing::TestWithParam<BracketCase> {};

}  // namespace

TEST_P(FrozenBracket, MatchesOracle) {
  const auto& c = GetParam();
  auto d = pat(c.flat, c.labels);
  auto r = standard_r_matrix(build_sl(c.n));
  for (bool sts : {false, true}) {
    auto pi = sts ? sts_case_bivector(d, r) : fock_rosly_bivector(d, r);
    const auto& vars = pi.coords().vars();
    Poly f = Poly::variable(vars, vars->id(c.f));
    Poly g = Poly::variable(vars, vars->id(c.g));
    EXPECT_EQ(bracket(pi, f, g), test::poly_of(vars, c.expected)) << (sts ? "sts" : "half-edge");
    EXPECT_EQ(bracket(pi, g, f), -test::poly_of(vars, c.expected));
  }
}

INSTANTIATE_TEST_SUITE_P(Oracle, FrozenBracket, ::testing::ValuesIn(bracket_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Bracket, RenderedLinkedFlipValue) {
  auto pi = fock_rosly_bivector(pat({1, 3, 2, 4}, {flip, id}), standard_r_matrix(build_sl(3)));
  const auto& cs = pi.coords();
  EXPECT_EQ(to_string(bracket(pi, cs.coordinate(0, 0, 0), cs.coordinate(1, 1, 2))),
            "1/6*g1_11*g2_23 - g1_12*g2_22 + g1_13*g2_21");
}

TEST(Bracket, TraceIsCentralOnUntwistedEdge) {
  auto pi = sts_case_bivector(pat({1, 2}, {id}), standard_r_matrix(build_sl(2)));
  const auto& cs = pi.coords();
  for (VarId v = 0; v < cs.size(); ++v) EXPECT_TRUE(bracket(pi, cs.trace(0), cs.coordinate(v)).is_zero());
}

TEST(Bracket, ChainRuleMatchesVectorFieldRoute) {
  auto pi = fock_rosly_bivector(pat({1, 4, 2, 3}, {flip, id}), standard_r_matrix(build_sl(3)));
  const auto& cs = pi.coords();
  Poly f = cs.coordinate(0, 0, 1) * cs.coordinate(1, 2, 2) + cs.trace(0);
  Poly g = cs.trace_product(0, 1) - cs.coordinate(1, 0, 0) * Rational(3);
  EXPECT_EQ(pi.apply(f, g), pi.apply_direct(f, g));
  EXPECT_EQ(pi.apply(f, cs.one()), cs.zero());
}

TEST(Forms, AgreeOnAllTwoEdgePatternsAndLabels) {
  auto r = standard_r_matrix(build_sl(3));
  for (std::size_t n = 1; n <= 2; ++n)
    for (const auto& p : enumerate_patterns(n))
      for (const auto& labels : enumerate_labels(n)) {
        auto o = check_forms_agree(DecoratedPattern(p, labels), r);
        EXPECT_TRUE(o.ok()) << to_string(p) << " " << labels_string(labels) << " " << o.residual;
        EXPECT_EQ(o.checked, n * n * 81);
      }
}

TEST(Forms, AgreeOnSl4) {
  auto r = standard_r_matrix(build_sl(4));
  EXPECT_TRUE(check_forms_agree(pat({1, 3, 2, 4}, {flip, flip}), r).ok());
}

TEST(Jacobi, AllTriplesOnSl2TwoEdgePatterns) {
  auto r = standard_r_matrix(build_sl(2));
  for (const auto& p : enumerate_patterns(2)) {
    auto pi = fock_rosly_bivector(DecoratedPattern(p, {id, id}), r);
    auto o = summarize_jacobi(pi, all_coordinate_triples(pi.coords().size()));
    EXPECT_TRUE(o.ok()) << to_string(p) << " " << o.residual;
    EXPECT_EQ(o.checked, 56u);
  }
}

TEST(Jacobi, SampledTriplesOnSl3CoverEdgeCombinations) {
  auto r = standard_r_matrix(build_sl(3));
  auto pi = fock_rosly_bivector(pat({2, 4, 1, 3}, {flip, flip}), r);
  const auto& cs = pi.coords();
  auto triples = sample_coordinate_triples(cs, 60, 5);
  EXPECT_EQ(triples.size(), 60u);
  std::set<std::vector<std::size_t>> combos;
  for (const auto& t : triples) combos.insert({cs.edge_of(t[0]), cs.edge_of(t[1]), cs.edge_of(t[2])});
  EXPECT_EQ(combos.size(), 4u);
  EXPECT_EQ(sample_coordinate_triples(cs, 60, 5), triples);
  EXPECT_TRUE(summarize_jacobi(pi, triples).ok());
}

TEST(Jacobi, ThreeEdgePattern) {
  auto pi = fock_rosly_bivector(pat({1, 4, 2, 6, 3, 5}, {flip, id, flip}), standard_r_matrix(build_sl(3)));
  EXPECT_TRUE(summarize_jacobi(pi, sample_coordinate_triples(pi.coords(), 80, 9)).ok());
}

TEST(Jacobi, FailsForYangBaxterViolatingR) {
  auto g = build_sl(3);
  auto bad = standard_r_matrix(g).perturbed(g->e_index(0), g->f_index(0), 1);
  auto pi = fock_rosly_bivector(pat({1, 3, 2, 4}, {id, id}), bad);
  auto o = summarize_jacobi(pi, all_coordinate_triples(pi.coords().size()));
  EXPECT_FALSE(o.ok());
  EXPECT_EQ(o.witness.size(), 3u);
  EXPECT_NE(o.residual, "0");
}

TEST(Equivariance, PoissonLieFormOnAllTwoEdgeConfigurations) {
  auto r = standard_r_matrix(build_sl(3));
  for (const auto& p : {GluingPattern({1, 2}), GluingPattern({1, 3, 2, 4}), GluingPattern({2, 3, 1, 4})})
    for (const auto& labels : enumerate_labels(p.n())) {
      auto pi = fock_rosly_bivector(DecoratedPattern(p, labels), r);
      EXPECT_TRUE(check_equivariance(pi).ok()) << to_string(p) << " " << labels_string(labels);
      EXPECT_TRUE(check_equivariance_cartan(pi).ok());
    }
}

TEST(Equivariance, StrictFormFailsOffTheCartan) {
  // Off the Cartan subalgebra the cobracket term is needed.
  auto pi = fock_rosly_bivector(pat({1, 2}, {id}), standard_r_matrix(build_sl(2)));
  EXPECT_FALSE(check_equivariance(pi, true, false).ok());
}

TEST(Equivariance, FailsForNonInvariantR) {
  auto g = build_sl(3);
  auto bad = standard_r_matrix(g).perturbed(g->e_index(0), g->f_index(0), 1);
  auto pi = fock_rosly_bivector(pat({1, 2}, {id}), bad);
  EXPECT_FALSE(check_equivariance(pi).ok());
}

TEST(Builders, LabelInvarianceIsEnforced) {
  auto g = build_sl(3);
  auto bad = standard_r_matrix(g).perturbed(g->e_index(0), g->f_index(0), 1);
  EXPECT_THROW(fock_rosly_bivector(pat({1, 2}, {flip}), bad), InvarianceError);
  EXPECT_THROW(sts_case_bivector(pat({1, 2}, {flip}), bad), InvarianceError);
  EXPECT_NO_THROW(fock_rosly_bivector(pat({1, 2}, {flip}), bad, {.check_invariance = false}));
}

TEST(PatternIndependence, TraceFixture) {
  auto r = standard_r_matrix(build_sl(3));
  auto o = check_pattern_independence(r, false);
  EXPECT_TRUE(o.ok()) << o.residual;
  EXPECT_GT(o.checked, 0u);
  EXPECT_TRUE(check_pattern_independence(r, true).ok());
}

TEST(PatternIndependence, SingleEdgeVariesWithoutCorrespondence) {
  // Sanity: the two patterns do differ on raw coordinates.
  auto r = standard_r_matrix(build_sl(3));
  auto a = fock_rosly_bivector(pat({1, 3, 2, 4}, {id, id}), r);
  auto b = fock_rosly_bivector(pat({2, 4, 1, 3}, {id, id}), r);
  EXPECT_FALSE(compare_on_coordinates(a, b).ok());
}
