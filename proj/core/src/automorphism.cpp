#include "apolar/automorphism.hpp"

#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/monomial_basis.hpp"

namespace apolar {

namespace {

Poly mul_trunc(const Poly& a, const Poly& b, int d) {
  Poly r(a.n(), a.side());
  for (const auto& [ma, ca] : a.terms()) {
    int da = ma.degree();
    if (da >= d) continue;
    for (const auto& [mb, cb] : b.terms())
      if (da + mb.degree() < d) r.add_term(ma * mb, ca * cb);
  }
  return r;
}

// <h, F> with x^a paired against y^a / a!: sum_a h_a F_a a!.
Rat pairing(const Poly& h, const Poly& f) {
  Rat r = 0;
  for (const auto& [m, c] : h.terms()) {
    Rat fc = f.coeff(m);
    if (fc != 0) r += c * fc * factorial_of(m);
  }
  return r;
}

}  // namespace

XAutomorphism::XAutomorphism(int n, int truncation, std::vector<Poly> images)
    : n_(n), d_(truncation), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != n) throw DomainError("need one image per variable");
  if (d_ < 2) throw DomainError("truncation degree must be at least 2");
  for (auto& p : images_) {
    if (p.n() != n || p.side() != Side::X) throw DomainError("images must be operator-side in n variables");
    if (!homogeneous_component(p, 0).is_zero()) throw DomainError("image has a constant term");
    p = p.truncated(d_);
  }
  if (rank(linear_part()) != n) throw DomainError("linear part is singular");
}

XAutomorphism XAutomorphism::identity(int n, int truncation) {
  std::vector<Poly> im;
  for (int i = 0; i < n; ++i) im.push_back(Poly::variable(n, Side::X, i));
  return XAutomorphism(n, truncation, std::move(im));
}

QMatrix XAutomorphism::linear_part() const {
  QMatrix l(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) l(k, i) = images_[i].coeff(Monomial::var(k));
  return l;
}

bool XAutomorphism::is_identity() const { return *this == identity(n_, d_); }

Poly XAutomorphism::apply(const Poly& g) const {
  if (g.n() != n_ || g.side() != Side::X) throw DomainError("automorphism applies to operator-side polynomials in n variables");
  std::vector<std::vector<Poly>> pw(static_cast<std::size_t>(n_));
  Poly r(n_, Side::X);
  for (const auto& [m, c] : g.terms()) {
    if (m.degree() >= d_) continue;
    Poly t = Poly::constant(n_, Side::X, c);
    for (int i = 0; i < n_; ++i) {
      if (m[i] == 0) continue;
      auto& p = pw[i];
      if (p.empty()) p.push_back(Poly::constant(n_, Side::X, 1));
      while (static_cast<int>(p.size()) <= m[i]) p.push_back(mul_trunc(p.back(), images_[i], d_));
      t = mul_trunc(t, p[m[i]], d_);
    }
    r += t;
  }
  return r;
}

Ideal XAutomorphism::apply(const Ideal& i) const {
  if (i.n() != n_) throw DomainError("ideal ambient count differs from the automorphism's");
  std::vector<Poly> gens;
  for (const auto& g : i.generators()) {
    Poly h = apply(g);
    if (!h.is_zero()) gens.push_back(std::move(h));
  }
  for (auto& p : power_generators(n_, d_)) gens.push_back(std::move(p));
  return Ideal(n_, std::move(gens));
}

Poly XAutomorphism::pullback_dual(const Poly& f) const {
  if (f.n() != n_ || f.side() != Side::Y) throw DomainError("dual action applies to y-side polynomials in n variables");
  if (f.degree() >= d_) throw DomainError("dual polynomial degree reaches the truncation degree");
  Poly r(n_, Side::Y);
  MonomialBasis basis(n_, 0, d_ - 1);
  for (const auto& b : basis.monomials()) {
    Rat v = pairing(apply(Poly::monomial(n_, Side::X, b)), f);
    if (v != 0) r.add_term(b, v / factorial_of(b));
  }
  return r;
}

Poly XAutomorphism::apply_dual(const Poly& f) const { return inverse().pullback_dual(f); }

XAutomorphism XAutomorphism::inverse() const {
  QMatrix linv = apolar::inverse(linear_part());
  std::vector<Poly> p;
  for (int i = 0; i < n_; ++i) {
    Poly v(n_, Side::X);
    for (int k = 0; k < n_; ++k) v.add_term(Monomial::var(k), linv(k, i));
    p.push_back(std::move(v));
  }
  // Each pass fixes the lowest-degree error of p_i(phi(x)) = x_i.
  for (int iter = 0; iter <= d_; ++iter) {
    bool done = true;
    for (int i = 0; i < n_; ++i) {
      Poly e = Poly::variable(n_, Side::X, i) - apply(p[i]);
      if (e.is_zero()) continue;
      done = false;
      p[i] += substitute_linear(e, linv).truncated(d_);
    }
    if (done) return XAutomorphism(n_, d_, std::move(p));
  }
  throw InvariantViolation("automorphism inversion did not converge");
}

QMatrix XAutomorphism::matrix() const {
  MonomialBasis basis(n_, 1, d_ - 1);
  QMatrix m(basis.size(), basis.size());
  for (int c = 0; c < basis.size(); ++c) {
    QVector v = basis.coords(apply(Poly::monomial(n_, Side::X, basis[c])));
    for (int r = 0; r < basis.size(); ++r) m(r, c) = v[r];
  }
  return m;
}

QMatrix XAutomorphism::dual_matrix() const {
  MonomialBasis basis(n_, 1, d_ - 1);
  XAutomorphism inv = inverse();
  QMatrix m(basis.size(), basis.size());
  for (int c = 0; c < basis.size(); ++c) {
    const Monomial& b = basis[c];
    Poly img = inv.pullback_dual(Poly::monomial(n_, Side::Y, b, 1 / factorial_of(b)));
    for (const auto& [mono, coef] : img.terms()) m(basis.index(mono), c) = coef * factorial_of(mono);
  }
  return m;
}

XAutomorphism compose(const XAutomorphism& outer, const XAutomorphism& inner) {
  if (outer.n() != inner.n() || outer.truncation() != inner.truncation())
    throw DomainError("automorphisms act on different truncations");
  std::vector<Poly> im;
  for (const auto& p : inner.images()) im.push_back(outer.apply(p));
  return XAutomorphism(outer.n(), outer.truncation(), std::move(im));
}

Ideal apply_x_automorphism(const Ideal& i, const XAutomorphism& phi) { return phi.apply(i); }
Poly apply_x_automorphism(const Poly& dual, const XAutomorphism& phi) { return phi.apply_dual(dual); }

}  // namespace apolar
