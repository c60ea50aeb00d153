#pragma once

#include <utility>
#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"

namespace apolar {

// Nonzero y-side polynomial with its socle degree.
class DualGenerator {
 public:
  // Throws DomainError if f is zero or not y-side.
  explicit DualGenerator(Poly f);

  const Poly& poly() const { return f_; }
  int n() const { return f_.n(); }
  int socle_degree() const { return s_; }
  Poly component(int d) const { return homogeneous_component(f_, d); }

 private:
  Poly f_;
  int s_;
};

// Per-degree bases of homogeneous y-side polynomials; index = degree.
struct GradedSpace {
  std::vector<std::vector<Poly>> degrees;

  int dim() const;
  std::vector<int> dims() const;
};

// x^a o y^b = b!/(b-a)! y^(b-a) when a <= b, else 0.
Poly contract(const Poly& g, const Poly& f);

// Generators of Ann(F): kernels of contraction in degrees 1..s+1, each new
// kernel element kept only if it is not already generated in that degree.
// Contains every monomial of degree s+1. Throws DomainError if F has a
// nonzero constant or linear part.
Ideal annihilator(const DualGenerator& f);

// Same computation without the low-degree check; F may have any terms.
Ideal annihilator_unchecked(const Poly& f);

// Common annihilator of a finite set of y-side polynomials.
Ideal annihilator_of_space(int n, const std::vector<Poly>& space);

// Dual polynomials of degree <= bound killed by J.
GradedSpace perp_space(const Ideal& j, int bound);

// Span of F and all its contractions, as one basis.
std::vector<Poly> derivative_span(const Poly& f);

GradedSpace tdf(const DualGenerator& f);
HilbertFunction hilbert_from_tdf(const DualGenerator& f);
int apolar_dim(const DualGenerator& f);
// (s, c): socle degree and the largest i with H(i) > 1 (0 if none).
std::pair<int, int> socle_and_capital_degree(const DualGenerator& f);

// Lowest-degree-form ideal of J, which must contain every monomial of degree s+1.
Ideal graded_associated(const Ideal& j, int s);

HilbertFunction g_of_A_hilbert(const DualGenerator& f);

// Nonzero rows H_{Q(a)}, each of length s+1, of the per-summand Hilbert
// table of a 2-stretched algebra with H = (1,n,m,1,...,1), and f_h for
// h = 2..s.
struct QDecomposition {
  struct Row {
    int a;
    std::vector<int> values;
  };
  std::vector<Row> rows;
  std::vector<int> f;  // f[0] = f_2, ..., f[s-2] = f_s
  std::vector<int> sum() const;
};
QDecomposition q_decomposition_2stretched(int n, int m, int s);

}  // namespace apolar
