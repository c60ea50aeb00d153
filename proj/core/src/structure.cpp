#include "apolar/structure.hpp"

#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/monomial_basis.hpp"

namespace apolar {

namespace {

bool in_first_vars(const Monomial& m, int k) { return m.support_bound() <= k; }

bool is_pure_y1_power(const Monomial& m) { return m.degree() == m[0]; }

// Degree-2 terms in y1..ym.
Poly quadratic_core(const Poly& f, int m) {
  Poly r(f.n(), Side::Y);
  const Poly f2 = homogeneous_component(f, 2);
  for (const auto& [mono, c] : f2.terms())
    if (in_first_vars(mono, m)) r.add_term(mono, c);
  return r;
}

// F = c y1^s + sum c_i y1^i + F3 + F2 + sum_{j>m} d_j y_j^2 with F3, F2 in P[m].
void check_input_shape(const Poly& f, int m) {
  const int s = f.degree();
  for (const auto& [mono, c] : f.terms()) {
    int d = mono.degree();
    if (d >= 4 && !is_pure_y1_power(mono))
      throw DomainError("components of degree >= 4 must be powers of y1");
    if (d == 3 && !in_first_vars(mono, m)) throw DomainError("cubic part must only involve y1..ym");
    if (d == 2 && !in_first_vars(mono, m)) {
      int v = mono.support_bound() - 1;
      if (mono[v] != 2) throw DomainError("quadratic part must split as P[m] plus squares of y_{m+1}..y_n");
    }
  }
  if (f.coeff(Monomial::var(0, s)) == 0) throw DomainError("top component must be a nonzero multiple of y1^s");
}

Poly drop_low(const Poly& f) {
  Poly r(f.n(), f.side());
  for (const auto& [m, c] : f.terms())
    if (m.degree() >= 2) r.add_term(m, c);
  return r;
}


}  // namespace

HilbertFunction two_stretched_shape(int n, int m, int s) {
  std::vector<int> v(static_cast<std::size_t>(s) + 1, 1);
  if (s >= 1) v[1] = n;
  if (s >= 2) v[2] = m;
  return HilbertFunction(v);
}

DualGenerator remove_linear_part(const Poly& f) {
  if (f.is_zero() || f.side() != Side::Y) throw DomainError("expected a nonzero y-side polynomial");
  Ideal ann = annihilator_unchecked(f);
  for (const auto& g : ann.generators())
    if (!homogeneous_component(g, 1).is_zero())
      throw DomainError("Ann(F) contains an element of order 1 (" + render(g) +
                        "); F does not use all variables essentially");
  Poly r = drop_low(f);
  if (r.is_zero()) throw DomainError("F has no component of degree >= 2");
  return DualGenerator(std::move(r));
}

ExoticClearing clear_exotic_summands(const DualGenerator& f, int m) {
  const int n = f.n(), s = f.socle_degree();
  if (m < 1 || m > n) throw DomainError("need 1 <= m <= n");
  if (s < 3) throw DomainError("socle degree must be at least 3");
  HilbertFunction h = hilbert_from_tdf(f);
  if (h != two_stretched_shape(n, m, s))
    throw DomainError("Hilbert function " + h.str() + " is not " + two_stretched_shape(n, m, s).str());
  if (s == 3) return {f, XAutomorphism::identity(n, s + 1)};
  check_input_shape(f.poly(), m);

  const Poly& F = f.poly();
  const Rat c = F.coeff(Monomial::var(0, s));
  const Rat sfact = factorial_of(Monomial::var(0, s));

  // x_j -> x_j - u_j x1^(s-2) removes y1^2 y_j from the cubic part.
  std::vector<Rat> u(static_cast<std::size_t>(n));
  bool any = false;
  for (int j = 1; j < m; ++j) {
    Monomial mono = Monomial::var(0, 2) * Monomial::var(j);
    u[j] = 2 * F.coeff(mono) / (c * sfact);
    any = any || u[j] != 0;
  }
  Poly g = F;
  XAutomorphism carry = XAutomorphism::identity(n, s + 1);
  if (any) {
    std::vector<Poly> kill_map, inv_map;
    Poly x1p = Poly::monomial(n, Side::X, Monomial::var(0, s - 2));
    for (int j = 0; j < n; ++j) {
      Poly xj = Poly::variable(n, Side::X, j);
      kill_map.push_back(xj - u[j] * x1p);
      inv_map.push_back(xj + u[j] * x1p);
    }
    g = XAutomorphism(n, s + 1, kill_map).pullback_dual(F);
    carry = XAutomorphism(n, s + 1, inv_map);
  }

  // G - lambda x1^(s-q) o G has the same annihilator; clear y1^q for q < s.
  for (int q = s - 1; q >= 2; --q) {
    Rat a = g.coeff(Monomial::var(0, q));
    if (a == 0) continue;
    Rat lambda = a * factorial_of(Monomial::var(0, q)) / (c * sfact);
    g -= lambda * contract(Poly::monomial(n, Side::X, Monomial::var(0, s - q)), g);
  }
  g = drop_low(g);

  Poly x1sq = Poly::monomial(n, Side::X, Monomial::var(0, 2));
  if (!contract(x1sq, homogeneous_component(g, 3)).is_zero() || !contract(x1sq, quadratic_core(g, m)).is_zero())
    throw InvariantViolation("normal form still has y1-heavy cubic or quadratic terms");
  return {DualGenerator(std::move(g)), carry};
}

QMatrix build_delta(const Poly& f3, int n) {
  if (f3.n() != n || f3.side() != Side::Y) throw DomainError("F3 must be y-side in n variables");
  if (!f3.is_zero() && (f3.degree() != 3 || f3.order() != 3)) throw DomainError("F3 must be a cubic form");
  MonomialBasis quad(n, 2, 2);
  QMatrix d(n, quad.size());
  for (int t = 0; t < n; ++t) {
    Poly dt = contract(Poly::variable(n, Side::X, t), f3);
    for (const auto& [mono, c] : dt.terms()) d(t, quad.index(mono)) = c * factorial_of(mono);
  }
  return d;
}

QMatrix build_U(const Poly& f3, int n) {
  QMatrix delta = build_delta(f3, n);
  MonomialBasis quad(n, 2, 2);
  const int C = quad.size();
  QMatrix u(C, n * C);
  for (int row = 0; row < C; ++row) {
    const Monomial& beta = quad[row];
    for (int k = 0; k < n; ++k) {
      if (beta[k] == 0) continue;
      Monomial rest = beta / Monomial::var(k);
      int t = rest.support_bound() - 1;
      for (int g = 0; g < C; ++g) u(row, k * C + g) = beta[k] * delta(t, g);
    }
  }
  return u;
}

F2Removal solve_F2_removal(const DualGenerator& f, int m) {
  const int n = f.n(), s = f.socle_degree();
  const Poly f3 = f.component(3);
  const Poly f2 = quadratic_core(f.poly(), m);
  MonomialBasis quad(n, 2, 2);
  const int C = quad.size();
  QMatrix u = build_U(f3, n);
  QVector v(static_cast<std::size_t>(C));
  for (const auto& [mono, c] : f2.terms()) v[quad.index(mono)] = c * factorial_of(mono);

  // Unknowns b_{g,k} for k in [k0, m).
  auto attempt = [&](int k0) -> std::optional<QVector> {
    const int cols = (m - k0) * C;
    QMatrix a(C, cols);
    for (int r = 0; r < C; ++r)
      for (int c = 0; c < cols; ++c) a(r, c) = u(r, k0 * C + c);
    auto x = solve_linear(a, v);
    if (!x) return std::nullopt;
    QVector full(static_cast<std::size_t>(n * C));
    for (int c = 0; c < cols; ++c) full[k0 * C + c] = (*x)[c];
    return full;
  };
  F2Removal out;
  out.first_variable_fixed = true;
  std::optional<QVector> sol = attempt(1);
  if (!sol) {
    out.first_variable_fixed = false;
    sol = attempt(0);
  }
  if (!sol) throw InvariantViolation("quadratic-part removal system is inconsistent");
  std::vector<Poly> images;
  out.b.assign(static_cast<std::size_t>(n), std::vector<Rat>(static_cast<std::size_t>(C)));
  for (int k = 0; k < n; ++k) {
    Poly img = Poly::variable(n, Side::X, k);
    for (int g = 0; g < C; ++g) {
      out.b[k][g] = (*sol)[k * C + g];
      img.add_term(quad[g], out.b[k][g]);
    }
    images.push_back(std::move(img));
  }
  out.phi = XAutomorphism(n, s + 1, std::move(images));
  return out;
}

NormalizationCertificate normalize_2stretched(const DualGenerator& input) {
  DualGenerator f = remove_linear_part(input.poly());
  const int n = f.n(), s = f.socle_degree();
  if (s < 4) throw DomainError("normalization needs socle degree >= 4");
  HilbertFunction h = hilbert_from_tdf(f);
  const int m = h.at(2);
  if (h != two_stretched_shape(n, m, s) || m < 1)
    throw DomainError("Hilbert function " + h.str() + " is not of the form (1,n,m,1,...,1) with n = " +
                      std::to_string(n));

  ExoticClearing l = clear_exotic_summands(f, m);
  F2Removal r = solve_F2_removal(l.f, m);

  NormalizationCertificate cert;
  cert.input = input.poly();
  cert.simple = l.f.poly() - quadratic_core(l.f.poly(), m);
  cert.m = m;
  cert.phi = compose(r.phi, l.phi);
  cert.first_variable_fixed = r.first_variable_fixed;

  DualGenerator simple(cert.simple);
  Ideal moved = cert.phi.apply(annihilator(f));
  Ideal target = annihilator(simple);
  cert.hilbert_equal = hilbert_from_tdf(simple) == h;
  cert.contraction_check = true;
  for (const auto& g : moved.generators())
    if (!contract(g, cert.simple).is_zero()) cert.contraction_check = false;
  // Reverse inclusion through phi^-1; a Groebner basis of the moved ideal
  // suffers heavy coefficient growth.
  const XAutomorphism back = cert.phi.inverse();
  bool reverse = true;
  for (const auto& g : target.generators())
    if (!contract(back.apply(g), f.poly()).is_zero()) reverse = false;
  cert.ideals_equal = cert.contraction_check && reverse;
  if (!cert.verified())
    throw InvariantViolation("normalization certificate failed to verify for F = " + render(cert.input));
  return cert;
}

HilbertFunction check_if_direction(const Poly& f3, int n, int m, int s) {
  if (m < 1 || m > n || s < 3) throw DomainError("need 1 <= m <= n and s >= 3");
  if (f3.n() != n || f3.side() != Side::Y) throw DomainError("F3 must be y-side in n variables");
  if (!f3.is_zero() && (f3.degree() != 3 || f3.order() != 3)) throw DomainError("F3 must be a cubic form");
  for (const auto& [mono, c] : f3.terms())
    if (!in_first_vars(mono, m)) throw DomainError("F3 must only involve y1..ym");
  Poly x1sq = Poly::monomial(n, Side::X, Monomial::var(0, 2));
  if (!contract(x1sq, f3).is_zero()) throw DomainError("x1^2 o F3 must vanish");
  MonomialBasis quad(n, 2, 2);
  EchelonBasis partials(quad.size());
  for (int t = 1; t < m; ++t)
    if (!partials.insert(quad.coords(contract(Poly::variable(n, Side::X, t), f3))))
      throw DomainError("x2 o F3, ..., xm o F3 must be linearly independent");

  Poly f = Poly::monomial(n, Side::Y, Monomial::var(0, s)) + f3;
  for (int j = m; j < n; ++j) f += Poly::monomial(n, Side::Y, Monomial::var(j, 2));
  DualGenerator F(f);
  HilbertFunction h = hilbert_from_tdf(F);
  if (h != two_stretched_shape(n, m, s))
    throw InvariantViolation("Hilbert function " + h.str() + " differs from " + two_stretched_shape(n, m, s).str());

  // <x1^(s-1) o F, x^g o F3 : |g| = 2> = <y1, ..., ym>.
  MonomialBasis lin(n, 1, 1);
  EchelonBasis span(lin.size());
  span.insert(lin.coords(homogeneous_component(
      contract(Poly::monomial(n, Side::X, Monomial::var(0, s - 1)), f), 1)));
  for (const auto& g : quad.monomials())
    span.insert(lin.coords(contract(Poly::monomial(n, Side::X, g), f3)));
  EchelonBasis expected(lin.size());
  for (int j = 0; j < m; ++j) expected.insert(lin.coords(Poly::variable(n, Side::Y, j)));
  bool same = span.rank() == m;
  for (const auto& row : span.rows()) same = same && expected.contains(row);
  if (!same) throw InvariantViolation("degree-1 top forms do not span <y1, ..., ym>");
  return h;
}

}  // namespace apolar
