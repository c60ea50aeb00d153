#include "apolar/poly.hpp"

#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

char side_letter(Side s) { return s == Side::X ? 'x' : 'y'; }

Poly::Poly(int n, Side side) : n_(n), side_(side) {
  if (n < 0 || n > kMaxVars) throw DomainError("ambient variable count must be in [0, 8]");
}

Poly Poly::constant(int n, Side side, const Rat& c) { return monomial(n, side, Monomial{}, c); }

Poly Poly::monomial(int n, Side side, const Monomial& m, const Rat& c) {
  Poly p(n, side);
  if (m.support_bound() > n) throw DomainError("monomial uses a variable beyond the ambient count");
  p.add_term(m, c);
  return p;
}

Poly Poly::variable(int n, Side side, int i) {
  if (i < 0 || i >= n) throw DomainError("variable index out of range");
  return monomial(n, side, Monomial::var(i));
}

Rat Poly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rat(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

int Poly::order() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

void Poly::check_compatible(const Poly& o) const {
  if (n_ != o.n_) throw DomainError("ambient variable counts differ");
  if (side_ != o.side_) throw DomainError("operator-side and dual-side polynomials mixed");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly r(a.n_, a.side_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

Poly Poly::truncated(int d) const {
  Poly r(n_, side_);
  for (const auto& [m, c] : terms_)
    if (m.degree() < d) r.terms_.emplace_hint(r.terms_.end(), m, c);
  return r;
}

Poly homogeneous_component(const Poly& p, int d) {
  Poly r(p.n(), p.side());
  for (const auto& [m, c] : p.terms())
    if (m.degree() == d) r.add_term(m, c);
  return r;
}

Poly substitute_linear(const Poly& p, const QMatrix& a) {
  const int n = p.n();
  if (a.rows() != n || a.cols() != n) throw DomainError("substitution matrix must be n x n");
  if (rank(a) != n) throw DomainError("substitution matrix is singular");
  std::vector<Poly> images;
  for (int i = 0; i < n; ++i) {
    Poly v(n, p.side());
    for (int k = 0; k < n; ++k) v.add_term(Monomial::var(k), a(k, i));
    images.push_back(std::move(v));
  }
  Poly r(n, p.side());
  for (const auto& [m, c] : p.terms()) {
    Poly t = Poly::constant(n, p.side(), c);
    for (int i = 0; i < n; ++i)
      for (int e = 0; e < m[i]; ++e) t = t * images[i];
    r += t;
  }
  return r;
}

std::string render(const Poly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  const char v = side_letter(p.side());
  for (const auto& [m, c] : p.terms()) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool unit = m.degree() == 0;
    bool need_star = false;
    if (a != 1 || unit) {
      out << to_string(a);
      need_star = true;
    }
    for (int i = 0; i < p.n(); ++i) {
      if (m[i] == 0) continue;
      if (need_star) out << "*";
      out << v << (i + 1);
      if (m[i] > 1) out << "^" << m[i];
      need_star = true;
    }
  }
  return out.str();
}

}  // namespace apolar
