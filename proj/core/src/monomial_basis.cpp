#include "apolar/monomial_basis.hpp"

#include "apolar/errors.hpp"
#include "apolar/hilbert.hpp"

namespace apolar {

MonomialBasis::MonomialBasis(int n, int lo, int hi) : n_(n), lo_(lo), hi_(hi) {
  for (int d = lo; d <= hi; ++d) {
    starts_.push_back(static_cast<int>(monos_.size()));
    for (const auto& m : monomials_of_degree(n, d)) {
      index_.emplace(m, static_cast<int>(monos_.size()));
      monos_.push_back(m);
    }
  }
  starts_.push_back(static_cast<int>(monos_.size()));
}

int MonomialBasis::index(const Monomial& m) const {
  auto it = index_.find(m);
  return it == index_.end() ? -1 : it->second;
}

std::pair<int, int> MonomialBasis::degree_range(int d) const {
  if (d < lo_ || d > hi_) return {0, 0};
  return {starts_[d - lo_], starts_[d - lo_ + 1]};
}

QVector MonomialBasis::coords(const Poly& p) const {
  QVector v(monos_.size());
  for (const auto& [m, c] : p.terms()) {
    int i = index(m);
    if (i < 0) throw DomainError("polynomial term outside the monomial basis");
    v[i] = c;
  }
  return v;
}

Poly MonomialBasis::poly(const QVector& v, Side side) const {
  Poly p(n_, side);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) p.add_term(monos_[i], v[i]);
  return p;
}

HilbertFunction::HilbertFunction(std::vector<int> v) : values(std::move(v)) {
  while (!values.empty() && values.back() == 0) values.pop_back();
}

int HilbertFunction::total() const {
  int t = 0;
  for (int v : values) t += v;
  return t;
}

bool HilbertFunction::palindromic() const {
  for (std::size_t i = 0, j = values.size(); i < j; ++i)
    if (values[i] != values[--j]) return false;
  return true;
}

std::string HilbertFunction::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(values[i]);
  }
  return s + ")";
}

}  // namespace apolar
