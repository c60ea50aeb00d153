#include "apolar/apolarity.hpp"

#include <algorithm>

#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/monomial_basis.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

DualGenerator::DualGenerator(Poly f) : f_(std::move(f)) {
  if (f_.is_zero()) throw DomainError("dual generator must be nonzero");
  if (f_.side() != Side::Y) throw DomainError("dual generator must be a y-side polynomial");
  s_ = f_.degree();
}

int GradedSpace::dim() const {
  int d = 0;
  for (const auto& v : degrees) d += static_cast<int>(v.size());
  return d;
}

std::vector<int> GradedSpace::dims() const {
  std::vector<int> d;
  for (const auto& v : degrees) d.push_back(static_cast<int>(v.size()));
  return d;
}

namespace {

// b!/(b-a)! for a <= b componentwise.
Rat falling(const Monomial& b, const Monomial& a) {
  mpz_class r = 1;
  for (int i = 0; i < kMaxVars; ++i)
    for (int k = 0; k < a[i]; ++k) r *= b[i] - k;
  return Rat(r);
}

int max_degree(const std::vector<Poly>& ps) {
  int s = -1;
  for (const auto& p : ps) s = std::max(s, p.degree());
  return s;
}

// Kernel of g -> (g o F_k)_k on operators of degree 1..s+1, returned as
// generators chosen degree by degree.
Ideal annihilator_impl(int n, const std::vector<Poly>& fs) {
  const int s = std::max(0, max_degree(fs));
  MonomialBasis ops(n, 1, s + 1);
  MonomialBasis outs(n, 0, std::max(0, s - 1));
  const int out_dim = outs.size();
  QMatrix a(out_dim * static_cast<int>(fs.size()), ops.size());
  for (std::size_t k = 0; k < fs.size(); ++k)
    for (int col = 0; col < ops.size(); ++col) {
      const Monomial& alpha = ops[col];
      for (const auto& [beta, c] : fs[k].terms()) {
        if (!alpha.divides(beta)) continue;
        int row = outs.index(beta / alpha);
        a(static_cast<int>(k) * out_dim + row, col) += c * falling(beta, alpha);
      }
    }
  Rref rr = rref(std::move(a));
  std::vector<bool> is_pivot(static_cast<std::size_t>(ops.size()), false);
  for (int p : rr.pivots) is_pivot[p] = true;

  std::vector<Poly> gens;
  EchelonBasis span(ops.size());
  std::vector<int> gen_degree;
  int kernel_dim = 0;
  for (int d = 1; d <= s + 1; ++d) {
    auto [lo, hi] = ops.degree_range(d);
    if (d == s + 1) {
      for (int f = lo; f < hi; ++f) gens.push_back(Poly::monomial(n, Side::X, ops[f]));
      break;
    }
    // Multiples of earlier generators landing in degree <= d.
    for (std::size_t g = 0; g < gens.size(); ++g) {
      int k = d - gen_degree[g];
      if (k < 1) continue;
      for (const auto& q : monomials_of_degree(n, k))
        span.insert(ops.coords(Poly::monomial(n, Side::X, q) * gens[g]));
    }
    for (int f = lo; f < hi; ++f)
      if (!is_pivot[f]) ++kernel_dim;
    for (int f = lo; f < hi && span.rank() < kernel_dim; ++f) {
      if (is_pivot[f]) continue;
      QVector v(static_cast<std::size_t>(ops.size()));
      v[f] = 1;
      for (std::size_t i = 0; i < rr.pivots.size() && rr.pivots[i] < f; ++i)
        v[rr.pivots[i]] = -rr.matrix(static_cast<int>(i), f);
      QVector reduced = v;
      if (span.reduce(reduced)) continue;
      span.insert(v);
      gens.push_back(ops.poly(reduced, Side::X));
      gen_degree.push_back(d);
    }
  }
  return Ideal(n, std::move(gens));
}

}  // namespace

Poly contract(const Poly& g, const Poly& f) {
  if (g.n() != f.n()) throw DomainError("ambient variable counts differ");
  if (g.side() != Side::X || f.side() != Side::Y)
    throw DomainError("contraction takes an operator-side and a dual-side polynomial");
  Poly r(f.n(), Side::Y);
  for (const auto& [a, ca] : g.terms())
    for (const auto& [b, cb] : f.terms())
      if (a.divides(b)) r.add_term(b / a, ca * cb * falling(b, a));
  return r;
}

Ideal annihilator_unchecked(const Poly& f) {
  if (f.is_zero()) throw DomainError("annihilator of the zero polynomial");
  return annihilator_impl(f.n(), {f});
}

Ideal annihilator(const DualGenerator& f) {
  if (!f.component(0).is_zero() || !f.component(1).is_zero())
    throw DomainError("dual generator has a constant or linear part; apply remove_linear_part first");
  return annihilator_impl(f.n(), {f.poly()});
}

Ideal annihilator_of_space(int n, const std::vector<Poly>& space) {
  for (const auto& p : space)
    if (p.n() != n || p.side() != Side::Y) throw DomainError("space must consist of y-side polynomials in n variables");
  return annihilator_impl(n, space);
}

GradedSpace perp_space(const Ideal& j, int bound) {
  const int n = j.n();
  MonomialBasis basis(n, 0, bound);
  EchelonBasis rows(basis.size());
  // <h, F> = sum_a h_a a! F_a for every h in J of degree <= bound.
  for (const auto& g : j.generators()) {
    int o = g.order();
    for (int k = 0; k + o <= bound; ++k)
      for (const auto& q : monomials_of_degree(n, k)) {
        Poly h = (Poly::monomial(n, Side::X, q) * g).truncated(bound + 1);
        QVector v(static_cast<std::size_t>(basis.size()));
        for (const auto& [m, c] : h.terms()) v[basis.index(m)] = c * factorial_of(m);
        rows.insert(std::move(v));
      }
  }
  // Columns in descending degree so each kernel vector has a distinct top form.
  const int N = basis.size();
  std::vector<int> perm(static_cast<std::size_t>(N));
  for (int i = 0; i < N; ++i) perm[i] = N - 1 - i;
  QMatrix m(rows.rank(), N);
  for (int r = 0; r < rows.rank(); ++r)
    for (int c = 0; c < N; ++c) m(r, c) = rows.rows()[r][perm[c]];
  GradedSpace out;
  out.degrees.resize(static_cast<std::size_t>(bound) + 1);
  for (const auto& v : kernel_basis(m)) {
    Poly p(n, Side::Y);
    for (int c = 0; c < N; ++c)
      if (v[c] != 0) p.add_term(basis[perm[c]], v[c]);
    out.degrees[p.degree()].push_back(std::move(p));
  }
  for (auto& v : out.degrees)
    std::sort(v.begin(), v.end(), [](const Poly& a, const Poly& b) {
      return CanonicalGreater{}(a.terms().begin()->first, b.terms().begin()->first);
    });
  return out;
}

std::vector<Poly> derivative_span(const Poly& f) {
  const int n = f.n();
  const int s = std::max(0, f.degree());
  MonomialBasis basis(n, 0, s);
  EchelonBasis e(basis.size());
  std::vector<Poly> out;
  for (int d = 0; d <= s; ++d)
    for (const auto& q : monomials_of_degree(n, d)) {
      Poly c = contract(Poly::monomial(n, Side::X, q), f);
      if (!c.is_zero() && e.insert(basis.coords(c))) out.push_back(std::move(c));
    }
  return out;
}

GradedSpace tdf(const DualGenerator& f) {
  const int n = f.n(), s = f.socle_degree();
  MonomialBasis basis(n, 0, s);
  const int N = basis.size();
  // Column c holds monomial basis[N-1-c]: highest degree first.
  std::vector<QVector> rows;
  for (int d = 0; d <= s; ++d)
    for (const auto& q : monomials_of_degree(n, d)) {
      QVector coords = basis.coords(contract(Poly::monomial(n, Side::X, q), f.poly()));
      std::reverse(coords.begin(), coords.end());
      rows.push_back(std::move(coords));
    }
  Rref rr = rref(QMatrix::from_rows(rows, N));
  GradedSpace out;
  out.degrees.resize(static_cast<std::size_t>(s) + 1);
  for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
    int q = basis[N - 1 - rr.pivots[i]].degree();
    Poly top(n, Side::Y);
    for (int c = 0; c < N; ++c) {
      const Monomial& m = basis[N - 1 - c];
      if (m.degree() == q && rr.matrix(static_cast<int>(i), c) != 0) top.add_term(m, rr.matrix(static_cast<int>(i), c));
    }
    out.degrees[q].push_back(std::move(top));
  }
  return out;
}

HilbertFunction hilbert_from_tdf(const DualGenerator& f) { return HilbertFunction(tdf(f).dims()); }

int apolar_dim(const DualGenerator& f) {
  const int n = f.n(), s = f.socle_degree();
  MonomialBasis basis(n, 0, s);
  EchelonBasis e(basis.size());
  for (int d = 0; d <= s; ++d)
    for (const auto& q : monomials_of_degree(n, d))
      e.insert(basis.coords(contract(Poly::monomial(n, Side::X, q), f.poly())));
  return e.rank();
}

std::pair<int, int> socle_and_capital_degree(const DualGenerator& f) {
  HilbertFunction h = hilbert_from_tdf(f);
  int c = 0;
  for (int i = 0; i < static_cast<int>(h.values.size()); ++i)
    if (h.values[i] > 1) c = i;
  return {f.socle_degree(), c};
}

Ideal graded_associated(const Ideal& j, int s) {
  const int n = j.n();
  MonomialBasis basis(n, 1, s);
  EchelonBasis span(basis.size());
  for (const auto& g : j.generators()) {
    if (g.side() != Side::X) throw DomainError("ideal generators must be operator-side");
    int o = g.order();
    if (o < 1) throw DomainError("graded_associated needs a proper ideal");
    for (int k = 0; k + o <= s; ++k)
      for (const auto& q : monomials_of_degree(n, k)) {
        Poly h = (Poly::monomial(n, Side::X, q) * g).truncated(s + 1);
        if (!h.is_zero()) span.insert(basis.coords(h));
      }
  }
  std::vector<Poly> gens;
  for (int r = 0; r < span.rank(); ++r) {
    int d = basis[span.pivots()[r]].degree();
    Poly low(n, Side::X);
    auto [lo, hi] = basis.degree_range(d);
    for (int c = lo; c < hi; ++c)
      if (span.rows()[r][c] != 0) low.add_term(basis[c], span.rows()[r][c]);
    gens.push_back(std::move(low));
  }
  for (auto& p : power_generators(n, s + 1)) gens.push_back(std::move(p));
  return Ideal(n, std::move(gens));
}

HilbertFunction g_of_A_hilbert(const DualGenerator& f) {
  return hilbert_from_tdf(DualGenerator(f.component(f.socle_degree())));
}

std::vector<int> QDecomposition::sum() const {
  std::vector<int> t;
  for (const auto& r : rows) {
    if (t.size() < r.values.size()) t.resize(r.values.size(), 0);
    for (std::size_t i = 0; i < r.values.size(); ++i) t[i] += r.values[i];
  }
  return t;
}

QDecomposition q_decomposition_2stretched(int n, int m, int s) {
  if (s < 3 || m < 1 || n < m) throw DomainError("need s >= 3 and n >= m >= 1");
  const std::size_t len = static_cast<std::size_t>(s) + 1;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(s) - 1, std::vector<int>(len, 0));
  for (auto& v : rows[0]) v = 1;
  rows[s - 3][1] += m - 1;
  rows[s - 3][2] += m - 1;
  rows[s - 2][1] += n - m;
  QDecomposition q;
  for (int a = 0; a <= s - 2; ++a) {
    bool zero = std::all_of(rows[a].begin(), rows[a].end(), [](int v) { return v == 0; });
    if (!zero) q.rows.push_back({a, rows[a]});
  }
  // f_h = sum of H_{Q(a)}(1) over a <= s - h.
  for (int h = 2; h <= s; ++h) {
    int f = 0;
    for (int a = 0; a <= s - h; ++a) f += rows[a][1];
    q.f.push_back(f);
  }
  return q;
}

}  // namespace apolar
