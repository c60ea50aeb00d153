// Randomised checks of algebraic identities; every generator is seeded.
#include <gtest/gtest.h>

#include "apolar/apolarity.hpp"
#include "apolar/automorphism.hpp"
#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"
#include "apolar/structure.hpp"
#include "instances.hpp"
#include "test_util.hpp"

using namespace apolar;
using apolar::testing::draw;
using apolar::testing::random_generic_dual;
using apolar::testing::random_poly;
using apolar::testing::ratio;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, int r, int c, int zero_bias) {
  QMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (draw(rng, 0, zero_bias) == 0) m(i, j) = ratio(draw(rng, -4, 4), draw(rng, 1, 3));
  return m;
}

QMatrix random_invertible(std::mt19937_64& rng, int n) {
  for (;;) {
    QMatrix m = random_matrix(rng, n, n, 1);
    if (rank(m) == n) return m;
  }
}

Poly s_poly(const Poly& f, const Poly& g, const TermOrder& ord) {
  Monomial lf = leading_monomial(f, ord), lg = leading_monomial(g, ord);
  Monomial l = Monomial::lcm(lf, lg);
  Poly a = Poly::monomial(f.n(), Side::X, l / lf, 1 / f.coeff(lf)) * f;
  Poly b = Poly::monomial(g.n(), Side::X, l / lg, 1 / g.coeff(lg)) * g;
  return a - b;
}

}  // namespace

TEST(PolyProperties, RingAxioms) {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 100; ++it) {
    int n = draw(rng, 1, 4);
    Side side = it % 2 ? Side::X : Side::Y;
    Poly a = random_poly(rng, n, side, 0, 3, 4), b = random_poly(rng, n, side, 0, 3, 4),
         c = random_poly(rng, n, side, 0, 3, 4);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a + b, b + a);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperties, RenderParseRoundTrip) {
  std::mt19937_64 rng(12);
  for (int it = 0; it < 200; ++it) {
    int n = draw(rng, 1, 5);
    Side side = it % 2 ? Side::X : Side::Y;
    Poly p = random_poly(rng, n, side, 0, 5, 5) * ratio(draw(rng, 1, 5), draw(rng, 1, 7));
    std::string text = render(p);
    Poly q = parse_poly(text, n, side);
    EXPECT_EQ(q, p) << text;
    EXPECT_EQ(render(q), text);
  }
}

TEST(PolyProperties, HomogeneousDecomposition) {
  std::mt19937_64 rng(13);
  for (int it = 0; it < 100; ++it) {
    Poly p = random_poly(rng, 3, Side::Y, 0, 6, 8);
    Poly sum(3, Side::Y);
    for (int d = 0; d <= std::max(0, p.degree()); ++d) sum += homogeneous_component(p, d);
    EXPECT_EQ(sum, p);
  }
}

TEST(PolyProperties, SubstitutionComposes) {
  std::mt19937_64 rng(14);
  for (int it = 0; it < 50; ++it) {
    int n = draw(rng, 1, 3);
    Poly p = random_poly(rng, n, Side::Y, 0, 4, 5);
    QMatrix a = random_invertible(rng, n), b = random_invertible(rng, n);
    EXPECT_EQ(substitute_linear(p, multiply(a, b)), substitute_linear(substitute_linear(p, b), a));
  }
}

TEST(LinalgProperties, RrefRankSolve) {
  std::mt19937_64 rng(21);
  for (int it = 0; it < 200; ++it) {
    int r = draw(rng, 1, 6), c = draw(rng, 1, 6);
    QMatrix m = random_matrix(rng, r, c, 2);
    Rref once = rref(m);
    EXPECT_EQ(rref(once.matrix).matrix, once.matrix);
    auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + static_cast<int>(ker.size()), c);
    for (const auto& v : ker) {
      QVector z = multiply(m, v);
      for (const auto& x : z) EXPECT_EQ(x, 0);
    }
    QVector rhs(static_cast<std::size_t>(r));
    for (auto& x : rhs) x = draw(rng, -3, 3);
    if (auto sol = solve_linear(m, rhs)) EXPECT_EQ(multiply(m, *sol), rhs);
  }
}

TEST(ApolarityProperties, ModuleAxioms) {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 100; ++it) {
    int n = draw(rng, 1, 3);
    Poly g = random_poly(rng, n, Side::X, 0, 2, 3), h = random_poly(rng, n, Side::X, 0, 2, 3),
         h2 = random_poly(rng, n, Side::X, 0, 3, 3);
    Poly f = random_poly(rng, n, Side::Y, 0, 5, 6), f2 = random_poly(rng, n, Side::Y, 0, 5, 6);
    EXPECT_EQ(contract(g * h, f), contract(g, contract(h, f)));
    EXPECT_EQ(contract(h + h2, f), contract(h, f) + contract(h2, f));
    EXPECT_EQ(contract(h, f + f2), contract(h, f) + contract(h, f2));
    EXPECT_EQ(contract(h * Rat(3, 2), f), contract(h, f) * Rat(3, 2));
  }
}

TEST(ApolarityProperties, DimensionsAgreeAcrossEngines) {
  std::mt19937_64 rng(32);
  for (int it = 0; it < 60; ++it) {
    DualGenerator f = random_generic_dual(rng, draw(rng, 1, 3), draw(rng, 2, 5));
    HilbertFunction h = hilbert_from_tdf(f);
    EXPECT_EQ(apolar_dim(f), h.total());
    Ideal j = annihilator(f);
    // Per-degree counts of a staircase depend on the order unless F is a form.
    const bool form = f.poly() == homogeneous_component(f.poly(), f.socle_degree());
    for (const auto& ord : {TermOrder::degrevlex(f.n()), TermOrder::lex(f.n()), TermOrder::product(f.n())}) {
      HilbertFunction q = quotient_hilbert(j.groebner(ord));
      EXPECT_EQ(q.total(), h.total()) << render(f.poly()) << " " << ord.name();
      if (form) EXPECT_EQ(q.str(), h.str()) << render(f.poly()) << " " << ord.name();
    }
    DualGenerator top(homogeneous_component(f.poly(), f.socle_degree()));
    Ideal jt = annihilator(top);
    for (const auto& ord : {TermOrder::degrevlex(f.n()), TermOrder::lex(f.n()), TermOrder::product(f.n())})
      EXPECT_EQ(quotient_hilbert(jt.groebner(ord)).str(), hilbert_from_tdf(top).str()) << render(top.poly());
  }
}

TEST(ApolarityProperties, AnnihilatorKillsAndTruncates) {
  std::mt19937_64 rng(33);
  for (int it = 0; it < 60; ++it) {
    DualGenerator f = random_generic_dual(rng, draw(rng, 1, 3), draw(rng, 2, 5));
    Ideal j = annihilator(f);
    for (const auto& g : j.generators()) EXPECT_TRUE(contract(g, f.poly()).is_zero());
    const auto& gb = j.groebner(TermOrder::degrevlex(f.n()));
    for (const auto& p : power_generators(f.n(), f.socle_degree() + 1))
      EXPECT_TRUE(normal_form(p, gb.polys, gb.order).is_zero());
  }
}

TEST(ApolarityProperties, LowestDegreeFormsMatchTopDegreeForms) {
  std::mt19937_64 rng(34);
  for (int it = 0; it < 40; ++it) {
    DualGenerator f = random_generic_dual(rng, draw(rng, 1, 3), draw(rng, 2, 5));
    GradedSpace top = tdf(f);
    std::vector<Poly> space;
    for (const auto& d : top.degrees)
      for (const auto& p : d) space.push_back(p);
    Ideal lhs = graded_associated(annihilator(f), f.socle_degree());
    Ideal rhs = annihilator_of_space(f.n(), space);
    EXPECT_TRUE(ideal_equal(lhs, rhs, TermOrder::degrevlex(f.n()))) << render(f.poly());
    EXPECT_TRUE(g_of_A_hilbert(f).palindromic());
  }
}

TEST(ApolarityProperties, QDecompositionSums) {
  for (int n = 1; n <= 6; ++n)
    for (int m = 1; m <= n; ++m)
      for (int s = 3; s <= 8; ++s)
        EXPECT_EQ(q_decomposition_2stretched(n, m, s).sum(), two_stretched_shape(n, m, s).values);
}

TEST(GroebnerProperties, BuchbergerCriterionAndNormalForms) {
  std::mt19937_64 rng(41);
  for (int it = 0; it < 40; ++it) {
    DualGenerator f = random_generic_dual(rng, draw(rng, 2, 3), draw(rng, 3, 5));
    Ideal j = annihilator(f);
    for (const auto& ord : {TermOrder::degrevlex(f.n()), TermOrder::lex(f.n()), TermOrder::product(f.n())}) {
      const auto& g = j.groebner(ord).polys;
      for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b)
          EXPECT_TRUE(normal_form(s_poly(g[a], g[b], ord), g, ord).is_zero());
      Poly p = random_poly(rng, f.n(), Side::X, 0, 6, 6);
      Poly r = normal_form(p, g, ord);
      EXPECT_EQ(normal_form(r, g, ord), r);
      EXPECT_TRUE(normal_form(p - r, g, ord).is_zero());
    }
  }
}

TEST(StructureProperties, DualMatrixIdentity) {
  std::mt19937_64 rng(51);
  for (int it = 0; it < 30; ++it) {
    int n = draw(rng, 1, 3), d = draw(rng, 3, 5);
    QMatrix lin = random_invertible(rng, n);
    std::vector<Poly> images;
    for (int i = 0; i < n; ++i) {
      Poly p = random_poly(rng, n, Side::X, 2, d - 1, 3);
      for (int k = 0; k < n; ++k) p.add_term(Monomial::var(k), lin(k, i));
      images.push_back(p);
    }
    XAutomorphism phi(n, d, images);
    EXPECT_EQ(phi.dual_matrix(), transpose(inverse(phi.matrix())));
    EXPECT_TRUE(compose(phi, phi.inverse()).is_identity());
  }
}

TEST(StructureProperties, NormalizationCertificates) {
  std::mt19937_64 rng(52);
  int fixed = 0, total = 0;
  for (int it = 0; it < 60; ++it) {
    auto sh = apolar::testing::draw_shape(rng);
    Poly f = apolar::testing::draw_two_stretched(rng, sh);
    NormalizationCertificate c = normalize_2stretched(DualGenerator(f));
    EXPECT_TRUE(c.verified()) << render(f);
    EXPECT_EQ(c.m, sh.m);
    ++total;
    fixed += c.first_variable_fixed;
  }
  EXPECT_GT(fixed, 0);
  EXPECT_EQ(total, 60);
}

TEST(StructureProperties, IfDirection) {
  std::mt19937_64 rng(54);
  for (int it = 0; it < 40; ++it) {
    auto sh = apolar::testing::draw_shape(rng);
    Poly f3 = apolar::testing::draw_valid_f3(rng, sh.n, sh.m);
    EXPECT_EQ(check_if_direction(f3, sh.n, sh.m, sh.s), two_stretched_shape(sh.n, sh.m, sh.s)) << render(f3);
  }
}

TEST(ObstructionProperties, RescalingInvariance) {
  std::mt19937_64 rng(61);
  const Cubic families[] = {Cubic::CuspA, Cubic::ConicLine, Cubic::FermatNode};
  for (int it = 0; it < 3; ++it) {
    Cubic h = families[it];
    BVector b;
    do {
      for (auto& x : b) x = draw(rng, -3, 3);
    } while (!membership_BH(canonical_cubic(h), b));
    DualGenerator f = build_F(canonical_cubic(h), b);
    const Rat t(2);
    QMatrix d(4, 4, {t * t * t, 0, 0, 0, 0, t * t * t * t, 0, 0, 0, 0, t * t * t * t, 0, 0, 0, 0, t * t * t * t});
    EXPECT_EQ(tangent_dimension(f), tangent_dimension(DualGenerator(substitute_linear(f.poly(), d))));
  }
}
