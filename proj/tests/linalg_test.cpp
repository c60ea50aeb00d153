#include <gtest/gtest.h>

#include "apolar/apolarity.hpp"
#include "apolar/errors.hpp"
#include "apolar/monomial_basis.hpp"
#include "apolar/obstruction.hpp"
#include "apolar/qmatrix.hpp"
#include "test_util.hpp"

using namespace apolar;

TEST(Rref, IdentityAndRankOne) {
  Rref r = rref(QMatrix::identity(3));
  EXPECT_EQ(r.matrix, QMatrix::identity(3));
  EXPECT_EQ(r.pivots, (std::vector<int>{0, 1, 2}));
  Rref s = rref(QMatrix(2, 2, {1, 2, 2, 4}));
  EXPECT_EQ(s.matrix, QMatrix(2, 2, {1, 2, 0, 0}));
  EXPECT_EQ(s.pivots, (std::vector<int>{0}));
}

TEST(Rref, QuadricMatrixRank) {
  EXPECT_EQ(rank(matrix_M(BVector{1, 0, 1, 0, 0, 1})), 3);
  EXPECT_EQ(rank(matrix_M(BVector{1, 1, 1, 0, 0, 0})), 1);
}

TEST(Kernel, SmallCases) {
  EXPECT_EQ(kernel_basis(QMatrix(2, 2)).size(), 2u);
  auto k = kernel_basis(QMatrix(1, 2, {1, 1}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Kernel, DegreeTwoContractionOfSumOfSquares) {
  // Columns x1^2, x1x2, x2^2 acting on y1^2 + y2^2; outputs are constants.
  Poly f = parse_poly("y1^2 + y2^2", 2, Side::Y);
  MonomialBasis ops(2, 2, 2);
  QMatrix m(1, ops.size());
  for (int c = 0; c < ops.size(); ++c)
    m(0, c) = contract(Poly::monomial(2, Side::X, ops[c]), f).coeff(Monomial{});
  auto k = kernel_basis(m);
  ASSERT_EQ(k.size(), 2u);
  EchelonBasis span(3);
  for (auto& v : k) span.insert(v);
  EXPECT_TRUE(span.contains(ops.coords(parse_poly("x1*x2", 2, Side::X))));
  EXPECT_TRUE(span.contains(ops.coords(parse_poly("x1^2 - x2^2", 2, Side::X))));
  EXPECT_FALSE(span.contains(ops.coords(parse_poly("x1^2", 2, Side::X))));
}

TEST(Solve, Cases) {
  QVector v{Rat(5), Rat(-2)};
  EXPECT_EQ(*solve_linear(QMatrix::identity(2), v), v);
  EXPECT_FALSE(solve_linear(QMatrix(1, 2), QVector{Rat(1)}).has_value());
  auto x = solve_linear(QMatrix(2, 2, {2, 0, 0, 0}), QVector{Rat(6), Rat(0)});
  ASSERT_TRUE(x.has_value());
  EXPECT_EQ(*x, (QVector{Rat(3), Rat(0)}));
}

TEST(Inverse, RoundTrip) {
  QMatrix a(3, 3, {2, 1, 0, 0, 1, 3, 1, 0, 1});
  EXPECT_EQ(multiply(a, inverse(a)), QMatrix::identity(3));
  EXPECT_THROW(inverse(QMatrix(2, 2, {1, 2, 2, 4})), DomainError);
  EXPECT_EQ(transpose(QMatrix(1, 2, {1, 2})), QMatrix(2, 1, {1, 2}));
}

TEST(EchelonBasis, InsertAndReduce) {
  EchelonBasis e(3);
  EXPECT_TRUE(e.insert({Rat(0), Rat(2), Rat(4)}));
  EXPECT_TRUE(e.insert({Rat(1), Rat(1), Rat(1)}));
  EXPECT_FALSE(e.insert({Rat(2), Rat(4), Rat(6)}));
  EXPECT_EQ(e.rank(), 2);
  EXPECT_FALSE(e.contains({Rat(0), Rat(0), Rat(1)}));
}

TEST(MonomialBasis, Layout) {
  MonomialBasis b(2, 1, 2);
  ASSERT_EQ(b.size(), 5);
  EXPECT_EQ(b[0], (Monomial{1, 0}));
  EXPECT_EQ(b[1], (Monomial{0, 1}));
  EXPECT_EQ(b[2], (Monomial{2, 0}));
  EXPECT_THROW(b.coords(parse_poly("x1^3", 2, Side::X)), DomainError);
}
