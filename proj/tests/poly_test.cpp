#include <gtest/gtest.h>

#include "apolar/errors.hpp"
#include "apolar/poly.hpp"
#include "apolar/qmatrix.hpp"
#include "test_util.hpp"

using namespace apolar;
using apolar::testing::X;
using apolar::testing::Y;

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rat(" -4 "), Rat(-4));
  EXPECT_EQ(to_string(parse_rat("-6/4")), "-3/2");
  EXPECT_EQ(to_string(Rat(7)), "7");
  EXPECT_THROW(parse_rat("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rat("abc"), std::invalid_argument);
}

TEST(Monomial, Arithmetic) {
  Monomial a{2, 1}, b{0, 3, 1};
  EXPECT_EQ(a * b, (Monomial{2, 4, 1}));
  EXPECT_EQ(Monomial::lcm(a, b), (Monomial{2, 3, 1}));
  EXPECT_TRUE((Monomial{1, 1}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE((Monomial{1}).coprime(Monomial{0, 2}));
  EXPECT_EQ(factorial_of(Monomial{3, 2}), Rat(12));
  EXPECT_EQ(monomials_of_degree(3, 2).size(), 6u);
  Monomial big = Monomial::var(0, 200);
  EXPECT_THROW(big * big, std::overflow_error);
}

TEST(Parse, DualGeneratorTerms) {
  Poly f = Y("y1^5 + y1^3*y2", 2);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.coeff(Monomial{5, 0}), 1);
  EXPECT_EQ(f.coeff(Monomial{3, 1}), 1);
  EXPECT_TRUE(Y("0", 3).is_zero());
  Poly g = X("20*x1^2*x2 - x1^4", 2);
  EXPECT_EQ(g.coeff(Monomial{2, 1}), 20);
  EXPECT_EQ(g.coeff(Monomial{4, 0}), -1);
}

TEST(Parse, RationalCoefficients) {
  Poly p = Y("-1/2*y1*y2^2 + 3", 2);
  EXPECT_EQ(p.coeff(Monomial{1, 2}), Rat(-1, 2));
  EXPECT_EQ(p.coeff(Monomial{}), 3);
  EXPECT_EQ(Y("y1*y1", 1), Y("y1^2", 1));
}

TEST(Parse, Errors) {
  EXPECT_THROW(Y("y3", 2), ParseError);
  EXPECT_THROW(Y("x1", 2), ParseError);
  EXPECT_THROW(Y("y1^", 1), ParseError);
  EXPECT_THROW(Y("y1 + + ", 1), ParseError);
  EXPECT_THROW(Y("y1 y2", 2), ParseError);
  EXPECT_THROW(Y("1/0*y1", 1), ParseError);
  EXPECT_THROW(Y("y0", 1), ParseError);
  try {
    Y("y1 + $", 1);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 5u);
  }
}

TEST(Poly, Products) {
  EXPECT_EQ(Y("y1 + y2", 2) * Y("y1 - y2", 2), Y("y1^2 - y2^2", 2));
  EXPECT_EQ(X("x2^2", 2) * X("x1", 2), X("x1*x2^2", 2));
  EXPECT_EQ(Y("y1^3", 1) * Rat(1, 3), Y("1/3*y1^3", 1));
  EXPECT_THROW(Y("y1", 1) * X("x1", 1), DomainError);
  EXPECT_THROW(Y("y1", 1) + Y("y1", 2), DomainError);
}

TEST(Poly, DegreeOrderTruncation) {
  Poly f = Y("y1^5 + y1^3*y2 + y2", 2);
  EXPECT_EQ(f.degree(), 5);
  EXPECT_EQ(f.order(), 1);
  EXPECT_EQ(Poly(2, Side::Y).degree(), -1);
  EXPECT_EQ(f.truncated(5), Y("y1^3*y2 + y2", 2));
  EXPECT_EQ(f.truncated(4), Y("y2", 2));
  EXPECT_EQ(homogeneous_component(f, 4), Y("y1^3*y2", 2));
  EXPECT_TRUE(homogeneous_component(f, 3).is_zero());
  EXPECT_TRUE(homogeneous_component(f, 9).is_zero());
}

TEST(Poly, SubstituteLinear) {
  Poly f = Y("y1^3 + y2", 2);
  EXPECT_EQ(substitute_linear(f, QMatrix::identity(2)), f);
  QMatrix swap(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(substitute_linear(f, swap), Y("y2^3 + y1", 2));
  EXPECT_THROW(substitute_linear(f, QMatrix(2, 2)), DomainError);
}

TEST(Poly, Render) {
  EXPECT_EQ(render(Y("y1^5 + y1^3*y2", 2)), "y1^5 + y1^3*y2");
  EXPECT_EQ(render(X("-x1^4 + 20*x1^2*x2", 2)), "-x1^4 + 20*x1^2*x2");
  EXPECT_EQ(render(Y("0", 2)), "0");
  EXPECT_EQ(render(Y("-1/2*y2 + 3", 2)), "-1/2*y2 + 3");
}
