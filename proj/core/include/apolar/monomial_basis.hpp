#pragma once

#include <unordered_map>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/poly.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

// Monomials of n variables with degree in [lo, hi], ordered by increasing
// degree and descending lex inside a degree, with O(1) index lookup.
class MonomialBasis {
 public:
  MonomialBasis(int n, int lo, int hi);

  int n() const { return n_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int size() const { return static_cast<int>(monos_.size()); }
  const Monomial& operator[](int i) const { return monos_[static_cast<std::size_t>(i)]; }
  const std::vector<Monomial>& monomials() const { return monos_; }
  // -1 if absent.
  int index(const Monomial& m) const;
  // Index range [begin, end) of the monomials of degree d.
  std::pair<int, int> degree_range(int d) const;

  // Coefficient vector of p. Throws DomainError if a term falls outside the basis.
  QVector coords(const Poly& p) const;
  Poly poly(const QVector& v, Side side) const;

 private:
  int n_, lo_, hi_;
  std::vector<Monomial> monos_;
  std::vector<int> starts_;
  std::unordered_map<Monomial, int, MonomialHash> index_;
};

}  // namespace apolar
