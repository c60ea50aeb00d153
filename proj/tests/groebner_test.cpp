#include <gtest/gtest.h>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"
#include "test_util.hpp"

using namespace apolar;
using apolar::testing::X;
using apolar::testing::Y;

TEST(TermOrder, ProductOrderBlocks) {
  const TermOrder p = TermOrder::product(4);
  // x4x3x2 vs x4^2 x1: the x2..x4 blocks compare by degree first.
  EXPECT_TRUE(p.greater(Monomial{0, 1, 1, 1}, Monomial{1, 0, 0, 2}));
  EXPECT_TRUE(p.greater(Monomial{3, 0, 0, 0}, Monomial{2, 0, 0, 0}));
  // Any x2..x4 content beats any power of x1.
  EXPECT_TRUE(p.greater(Monomial{0, 1, 0, 0}, Monomial{4, 0, 0, 0}));
  EXPECT_TRUE(p.greater(Monomial{0, 0, 0, 1}, Monomial{0, 0, 1, 0}));
}

TEST(TermOrder, DegRevLexAndLex) {
  const TermOrder d = TermOrder::degrevlex(3);
  EXPECT_TRUE(d.greater(Monomial{1, 1, 0}, Monomial{1, 0, 1}));
  EXPECT_TRUE(d.greater(Monomial{0, 2, 0}, Monomial{1, 0, 1}));
  EXPECT_TRUE(d.greater(Monomial{0, 0, 3}, Monomial{2, 0, 0}));
  const TermOrder l = TermOrder::lex(3);
  EXPECT_TRUE(l.greater(Monomial{1, 0, 0}, Monomial{0, 5, 5}));
  EXPECT_EQ(l.compare(Monomial{1, 2}, Monomial{1, 2}), std::strong_ordering::equal);
  EXPECT_THROW(TermOrder::lex(std::vector<int>{0, 0}), DomainError);
}

TEST(Groebner, MonomialIdealIsMinimalised) {
  std::vector<Poly> g = {X("x1^2", 2), X("x1^3", 2), X("x1^2*x2", 2), X("x2^4", 2)};
  auto gb = reduced_groebner(g, TermOrder::degrevlex(2));
  EXPECT_EQ(gb.polys.size(), 2u);
}

TEST(Groebner, NormalFormOfMember) {
  std::vector<Poly> g = {X("x1^2 - x2^2", 2), X("x1*x2", 2), X("x2^3", 2)};
  auto gb = reduced_groebner(g, TermOrder::degrevlex(2));
  EXPECT_TRUE(normal_form(X("x1^3 + 5*x1*x2", 2), gb.polys, gb.order).is_zero());
  Poly r = normal_form(X("x1^2 + x1", 2), gb.polys, gb.order);
  EXPECT_EQ(normal_form(r, gb.polys, gb.order), r);
  EXPECT_FALSE(r.is_zero());
}

TEST(Groebner, QuotientHilbert) {
  auto a = reduced_groebner(std::vector<Poly>{X("x1^2", 2), X("x2^2", 2)}, TermOrder::degrevlex(2));
  EXPECT_EQ(quotient_hilbert(a).values, (std::vector<int>{1, 2, 1}));
  auto b = reduced_groebner(std::vector<Poly>{X("x1^6", 1)}, TermOrder::lex(1));
  EXPECT_EQ(quotient_hilbert(b).values, (std::vector<int>(6, 1)));
  auto c = reduced_groebner(std::vector<Poly>{X("x1", 2)}, TermOrder::degrevlex(2));
  EXPECT_THROW(quotient_hilbert(c), DomainError);
}

TEST(Groebner, QuinticAnnihilatorStandardMonomials) {
  Ideal j = annihilator(DualGenerator(Y("y1^5 + y1^3*y2", 2)));
  EXPECT_EQ(quotient_hilbert(j.groebner(TermOrder::product(2))).total(), 8);
}

TEST(Groebner, QuadricOnlyFamilyInitialIdeal) {
  auto f = build_F(Poly(4, Side::Y), BVector{1, 0, 1, 0, 0, 1});
  Ideal j = annihilator(f);
  EXPECT_EQ(quotient_hilbert(j.groebner(TermOrder::product(4))).values, (std::vector<int>{1, 4, 4, 1, 1}));
}

TEST(IdealSquare, SmallCases) {
  Ideal a = ideal_square(Ideal(1, {X("x1", 1)}));
  EXPECT_TRUE(ideal_equal(a, Ideal(1, {X("x1^2", 1)}), TermOrder::lex(1)));
  Ideal b = ideal_square(Ideal(2, {X("x1", 2), X("x2", 2)}));
  EXPECT_TRUE(ideal_equal(b, Ideal(2, {X("x1^2", 2), X("x1*x2", 2), X("x2^2", 2)}), TermOrder::degrevlex(2)));
}

TEST(IdealSquare, QuadricOnlyFamily) {
  auto f = build_F(Poly(4, Side::Y), BVector{1, 0, 1, 0, 0, 1});
  Ideal j2 = ideal_square(annihilator(f));
  EXPECT_EQ(quotient_hilbert(j2.groebner(TermOrder::product(4))).values,
            (std::vector<int>{1, 4, 10, 20, 20, 4, 1}));
}

TEST(IdealEqual, Cases) {
  Ideal i(2, {X("x1^2", 2), X("x2", 2)});
  EXPECT_TRUE(ideal_equal(i, i, TermOrder::degrevlex(2)));
  EXPECT_TRUE(ideal_equal(Ideal(1, {X("x1", 1)}), Ideal(1, {X("2*x1", 1)}), TermOrder::lex(1)));
  EXPECT_FALSE(ideal_equal(Ideal(1, {X("x1", 1)}), Ideal(1, {X("x1^2", 1)}), TermOrder::lex(1)));
}

TEST(Groebner, ExplicitPowerDegree) {
  EXPECT_EQ(explicit_power_degree(power_generators(3, 4)), 4);
  std::vector<Poly> g = {X("x1^2", 2), X("x1*x2", 2)};
  EXPECT_EQ(explicit_power_degree(g), -1);
}

TEST(Groebner, MinimalGenerators) {
  std::vector<Poly> g = {X("x1^2", 2), X("x1^3", 2), X("x1^2 + x1^3", 2), X("x2^2", 2)};
  for (auto& p : power_generators(2, 3)) g.push_back(p);
  Ideal j(2, g);
  EXPECT_EQ(minimal_generators(j).generators().size(), 2u);
  EXPECT_THROW(minimal_generators(Ideal(2, {X("x1", 2)})), DomainError);
}
