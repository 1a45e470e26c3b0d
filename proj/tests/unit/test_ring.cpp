#include <gtest/gtest.h>

#include "qtwist/ring/dense_tensor.hpp"
#include "qtwist/ring/errors.hpp"
#include "qtwist/ring/jet.hpp"
#include "qtwist/ring/outcome.hpp"
#include "qtwist/ring/rational.hpp"
#include "qtwist/ring/sparse_poly.hpp"
#include "support.hpp"

#include <random>

using namespace qtwist;

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(to_string(make_rational(6, -4)), "-3/2");
  EXPECT_EQ(parse_rational("10/4"), make_rational(5, 2));
  EXPECT_THROW(make_rational(1, 0), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("x"), DomainError);
}

TEST(Jet, ArithmeticTruncatesAtHbarSquared) {
  using J = Jet1<Rational>;
  J h = J::hbar();
  EXPECT_TRUE(is_zero(h * h));
  J a(Rational(2), Rational(3));
  J b(Rational(5), Rational(-1));
  EXPECT_EQ(a * b, J(Rational(10), Rational(13)));
  EXPECT_EQ(a * a.inverse(), J(Rational(1)));
  EXPECT_EQ((a / b) * b, a);
  EXPECT_THROW(h.inverse(), DomainError);
  EXPECT_EQ(to_string(a), "(2 + 3h)");
}

class PolyTest : public ::testing::Test {
 protected:
  VarSetPtr vars = make_variable_set({"x", "y", "z"});
  Poly x = Poly::variable(vars, 0), y = Poly::variable(vars, 1), z = Poly::variable(vars, 2);
  Poly one = Poly::constant(vars, Rational(1));
};

TEST_F(PolyTest, RenderingIsCanonical) {
  Poly p = y * x * Rational(3, 2) - z + one;
  EXPECT_EQ(to_string(p), "3/2*x*y - z + 1");
  EXPECT_EQ(to_string(x - x), "0");
  EXPECT_EQ(to_string(Rational(-1) * x * x), "-x*x");
}

TEST_F(PolyTest, DerivativeAndDegree) {
  Poly p = x * x * y + z;
  EXPECT_EQ(p.derivative(0), Rational(2) * x * y);
  EXPECT_EQ(p.derivative(2), one);
  EXPECT_EQ(p.degree(), 3);
  EXPECT_EQ(p.support(), (std::vector<VarId>{0, 1, 2}));
}

TEST_F(PolyTest, EvaluateByPositionAndName) {
  Poly p = x * y - Rational(1, 3) * z;
  std::vector<Rational> pt{2, 5, 3};
  EXPECT_EQ(p.evaluate(pt), Rational(9));
  EXPECT_EQ(p.evaluate({{"x", 2}, {"y", 5}, {"z", 3}}), Rational(9));
  EXPECT_THROW(p.evaluate({{"x", 2}}), MissingVariable);
}

TEST_F(PolyTest, MixingVariableSetsIsRejected) {
  auto other = make_variable_set({"x", "w"});
  EXPECT_THROW(x + Poly::variable(other, 0), DimensionMismatch);
  EXPECT_THROW(make_variable_set({"a", "a"}), DomainError);
}

TEST_F(PolyTest, RingAxiomsOnRandomPolynomials) {
  std::mt19937_64 rng(7);
  auto random_poly = [&] {
    Poly p(vars);
    std::vector<Poly> gens{x, y, z, one};
    for (int k = 0; k < 4; ++k) {
      Poly m = Poly::constant(vars, make_rational(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 3) + 1));
      for (int d = 0; d < 2; ++d) m = m * gens[rng() % 4];
      p += m;
    }
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    Poly a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b).derivative(1), a.derivative(1) * b + a * b.derivative(1));
  }
}

TEST_F(PolyTest, OracleHelperBuildsTerms) {
  EXPECT_EQ(test::poly_of(vars, {{"1/2", {"x", "y"}}, {"-1", {"z"}}}), Rational(1, 2) * x * y - z);
}

TEST(DenseTensor, ContractionsAgreeWithMatmul) {
  RTensor a({2, 3}, {1, 2, 3, 4, 5, 6});
  RTensor b({3, 2}, {1, 0, 0, 1, 1, 1});
  RTensor ab = matmul(a, b);
  EXPECT_EQ(ab, RTensor({2, 2}, {4, 5, 10, 11}));
  EXPECT_EQ(tensordot(a, 1, b, 0), ab);
  EXPECT_EQ(tensor_contract(outer(a, b), {{1, 2}}), ab);
  EXPECT_EQ(transpose(transpose(a)), a);
  EXPECT_EQ(permute(a, {1, 0}), transpose(a));
}

TEST(DenseTensor, InverseIsExact) {
  RTensor m({3, 3}, {2, 1, 0, 1, 3, 1, 0, 1, 4});
  EXPECT_EQ(matmul(m, inverse(m)), RTensor::identity(3));
  EXPECT_THROW(inverse(RTensor({2, 2}, {1, 2, 2, 4})), DomainError);
  EXPECT_THROW(matmul(m, RTensor({2, 2})), DimensionMismatch);
}

TEST(CheckOutcome, KeepsFirstWitness) {
  CheckOutcome o;
  o.checked = 3;
  o.record_failure({"a"}, "1");
  o.record_failure({"b"}, "2");
  EXPECT_EQ(o.failures, 2u);
  EXPECT_EQ(o.witness, std::vector<std::string>{"a"});
  CheckOutcome p;
  p.checked = 1;
  p.merge(o);
  EXPECT_FALSE(p.ok());
  EXPECT_EQ(p.checked, 4u);
  EXPECT_EQ(p.residual, "1");
}

TEST(Errors, ParseErrorCarriesLine) {
  ParseError e(4, "bad key");
  EXPECT_EQ(e.line(), 4u);
  EXPECT_STREQ(e.what(), "line 4: bad key");
}
