#include <gtest/gtest.h>

#include "apolar/apolarity.hpp"
#include "apolar/automorphism.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"
#include "apolar/structure.hpp"
#include "test_util.hpp"

using namespace apolar;
using apolar::testing::X;
using apolar::testing::Y;

namespace {

bool same_ideal(const Ideal& a, const Ideal& b) { return ideal_equal(a, b, TermOrder::degrevlex(a.n())); }

}  // namespace

TEST(Automorphism, Validation) {
  EXPECT_THROW(XAutomorphism(1, 4, {X("x1 + 1", 1)}), DomainError);
  EXPECT_THROW(XAutomorphism(2, 4, {X("x1", 2), X("x1^2", 2)}), DomainError);
  EXPECT_TRUE(XAutomorphism::identity(3, 5).is_identity());
}

TEST(Automorphism, InverseAndCompose) {
  XAutomorphism phi(2, 5, {X("x1 + x2^2", 2), X("2*x2 + x1*x2 - x1^3", 2)});
  XAutomorphism id = compose(phi, phi.inverse());
  EXPECT_TRUE(id.is_identity());
  EXPECT_TRUE(compose(phi.inverse(), phi).is_identity());
  Poly g = X("x1^2*x2 + 3*x2", 2);
  XAutomorphism psi(2, 5, {X("x2", 2), X("x1 + x1^2", 2)});
  EXPECT_EQ(compose(psi, phi).apply(g), psi.apply(phi.apply(g)));
}

TEST(Automorphism, DualMatrixIsInverseTranspose) {
  XAutomorphism phi(3, 4, {X("x1 + x2*x3", 3), X("x2 - x1^2 + x3^3", 3), X("x3 + 2*x1 + x1*x2", 3)});
  EXPECT_EQ(phi.dual_matrix(), transpose(inverse(phi.matrix())));
}

TEST(Automorphism, DualActionMovesAnnihilators) {
  XAutomorphism phi(2, 6, {X("x1 + x2^2", 2), X("x2 - 3*x1^2", 2)});
  Poly f = Y("y1^5 + y1^3*y2", 2);
  Ideal moved = phi.apply(annihilator_unchecked(f));
  EXPECT_TRUE(same_ideal(moved, annihilator_unchecked(phi.apply_dual(f))));
  Ideal pulled = phi.inverse().apply(annihilator_unchecked(f));
  EXPECT_TRUE(same_ideal(pulled, annihilator_unchecked(phi.pullback_dual(f))));
}

TEST(RemoveLinearPart, Cases) {
  DualGenerator a = remove_linear_part(Y("y1^3 + y1", 1));
  EXPECT_EQ(a.poly(), Y("y1^3", 1));
  EXPECT_TRUE(same_ideal(annihilator(a), annihilator_unchecked(Y("y1^3 + y1", 1))));
  EXPECT_EQ(remove_linear_part(Y("y1^5 + y1^3*y2", 2)).poly(), Y("y1^5 + y1^3*y2", 2));
  // 2x2 - x1^2 kills y1^2 + y2 and has order 1.
  EXPECT_THROW(remove_linear_part(Y("y1^2 + y2", 2)), DomainError);
}

TEST(ExoticSummands, AlreadyNormal) {
  DualGenerator f(Y("y1^5 + y2^3", 2));
  auto r = clear_exotic_summands(f, 2);
  EXPECT_EQ(r.f.poly(), f.poly());
  EXPECT_TRUE(r.phi.is_identity());
}

TEST(ExoticSummands, ClearsMixedTerms) {
  DualGenerator f(Y("2*y1^5 + 3*y1^4 + y1^2*y2 + y2^3 + y1*y2 + y1^2 + y1^3", 2));
  auto r = clear_exotic_summands(f, 2);
  Poly x1sq = X("x1^2", 2);
  EXPECT_TRUE(contract(x1sq, r.f.component(3)).is_zero());
  EXPECT_TRUE(contract(x1sq, r.f.component(2)).is_zero());
  EXPECT_TRUE(r.f.component(4).is_zero());
  EXPECT_TRUE(same_ideal(r.phi.apply(annihilator_unchecked(f.poly())), annihilator(r.f)));
}

TEST(ExoticSummands, RejectsWrongShape) {
  EXPECT_THROW(clear_exotic_summands(DualGenerator(Y("y1^4 + y2^4", 2)), 2), DomainError);
}

TEST(BuildDelta, Shapes) {
  EXPECT_TRUE(build_delta(Poly(3, Side::Y), 3).is_zero());
  QMatrix d = build_delta(Y("y2^3 + y2*y3^2", 3), 3);
  EXPECT_EQ(d.rows(), 3);
  EXPECT_EQ(d.cols(), 6);
  for (int t = 0; t < 3; ++t) EXPECT_EQ(d(t, 0), 0) << "y1^2 column must vanish when x1^2 kills F3";
  EXPECT_THROW(build_delta(Y("y1^2", 3), 3), DomainError);
}

TEST(BuildU, Shapes) {
  QMatrix u = build_U(Poly(3, Side::Y), 3);
  EXPECT_EQ(u.rows(), 6);
  EXPECT_EQ(u.cols(), 18);
  EXPECT_TRUE(u.is_zero());
  EXPECT_FALSE(build_U(Y("y2^3 + y3^3", 3), 3).is_zero());
}

TEST(SolveF2, NothingToRemove) {
  auto r = solve_F2_removal(DualGenerator(Y("y1^5 + y2^3", 2)), 2);
  EXPECT_TRUE(r.phi.is_identity());
  EXPECT_TRUE(r.first_variable_fixed);
}

TEST(SolveF2, QuadraticInSecondVariable) {
  DualGenerator f(Y("y1^5 + y2^3 + y2^2", 2));
  auto r = solve_F2_removal(f, 2);
  EXPECT_TRUE(r.first_variable_fixed);
  for (const auto& c : r.b[0]) EXPECT_EQ(c, 0);
  EXPECT_TRUE(same_ideal(r.phi.apply(annihilator(f)), annihilator(DualGenerator(Y("y1^5 + y2^3", 2)))));
}

TEST(Normalize, AlreadySimple) {
  DualGenerator f(Y("y1^5 + y2^3 + y3^2", 3));
  auto c = normalize_2stretched(f);
  EXPECT_EQ(c.simple, f.poly());
  EXPECT_TRUE(c.phi.is_identity());
  EXPECT_TRUE(c.verified());
}

TEST(Normalize, QuarticFermatWithQuadric) {
  auto c = normalize_2stretched(DualGenerator(Y("y1^4 + y2^3 + y3^3 + y4^3 + y2*y3", 4)));
  EXPECT_EQ(c.simple, Y("y1^4 + y2^3 + y3^3 + y4^3", 4));
  EXPECT_EQ(c.m, 4);
  EXPECT_TRUE(c.verified());
}

TEST(Normalize, QuinticWithSquare) {
  auto c = normalize_2stretched(DualGenerator(Y("y1^5 + y2^3 + y2^2", 2)));
  EXPECT_EQ(c.simple, Y("y1^5 + y2^3", 2));
  EXPECT_TRUE(c.verified());
}

TEST(Normalize, NeedsFirstVariable) {
  // Removing y1*y2 here forces a quadratic term into the image of x1.
  auto c = normalize_2stretched(DualGenerator(Y("y1^5 + y2^3 + y1*y2", 2)));
  EXPECT_EQ(c.simple, Y("y1^5 + y2^3", 2));
  EXPECT_FALSE(c.first_variable_fixed);
  EXPECT_TRUE(c.verified());
}

TEST(Normalize, RejectsOtherShapes) {
  EXPECT_THROW(normalize_2stretched(DualGenerator(Y("y1^4 + y2^4", 2))), DomainError);
  EXPECT_THROW(normalize_2stretched(DualGenerator(Y("y1^3 + y2^3", 2))), DomainError);
}

TEST(Normalize, TangentDimensionIsIntrinsic) {
  for (Cubic h : {Cubic::CuspA, Cubic::TripleLine}) {
    DualGenerator f = build_F(canonical_cubic(h), BVector{1, 0, 1, 0, 1, 0});
    Poly g = f.poly() + Y("y2*y3 - 2*y4^2", 4);
    auto c = normalize_2stretched(DualGenerator(g));
    ASSERT_TRUE(c.verified());
    EXPECT_EQ(tangent_dimension(DualGenerator(g)), tangent_dimension(DualGenerator(c.simple)));
  }
}

TEST(IfDirection, Examples) {
  EXPECT_EQ(check_if_direction(Y("y2^3 + y3^3 + y4^3", 4), 4, 4, 4).values, (std::vector<int>{1, 4, 4, 1, 1}));
  EXPECT_EQ(check_if_direction(Y("y2^3", 2), 2, 2, 5).values, (std::vector<int>{1, 2, 2, 1, 1, 1}));
  EXPECT_EQ(check_if_direction(Y("y2^3", 3), 3, 2, 4).values, (std::vector<int>{1, 3, 2, 1, 1}));
  EXPECT_THROW(check_if_direction(Y("y1^3", 2), 2, 2, 4), DomainError);
}

TEST(TwoStretchedShape, Values) {
  EXPECT_EQ(two_stretched_shape(4, 3, 5).values, (std::vector<int>{1, 4, 3, 1, 1, 1}));
}
