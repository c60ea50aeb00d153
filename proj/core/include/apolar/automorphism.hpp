#pragma once

#include <vector>

#include "apolar/ideal.hpp"
#include "apolar/poly.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

// Ring automorphism of k[x_1..x_n]/m^D given by the images of the variables.
// Images have no constant term and an invertible linear part.
class XAutomorphism {
 public:
  XAutomorphism() = default;
  // Throws DomainError on a constant term or a singular linear part.
  XAutomorphism(int n, int truncation, std::vector<Poly> images);
  static XAutomorphism identity(int n, int truncation);

  int n() const { return n_; }
  int truncation() const { return d_; }
  const std::vector<Poly>& images() const { return images_; }
  QMatrix linear_part() const;
  bool is_identity() const;

  // g(phi(x_1), ..., phi(x_n)) truncated below degree D.
  Poly apply(const Poly& g) const;
  // Image of every generator plus all monomials of degree D.
  Ideal apply(const Ideal& i) const;
  // Dual action: Ann(apply_dual(F)) = apply(Ann(F)) for deg F < D.
  Poly apply_dual(const Poly& f) const;
  // Coefficients <phi(x^b), F> on the divided-power basis: Ann(pullback_dual(F)) = phi^{-1}(Ann F).
  Poly pullback_dual(const Poly& f) const;

  XAutomorphism inverse() const;

  // Columns: coordinates of phi(x^a) over monomials of degree 1..D-1 in
  // increasing degree, descending lex inside a degree.
  QMatrix matrix() const;
  // Matrix of apply_dual on the divided-power basis y^b/b! of degrees 1..D-1.
  QMatrix dual_matrix() const;

  friend bool operator==(const XAutomorphism&, const XAutomorphism&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Poly> images_;
};

// (outer o inner)(x_i) = outer(inner(x_i)), so applying the result equals
// applying inner first and then outer.
XAutomorphism compose(const XAutomorphism& outer, const XAutomorphism& inner);

Ideal apply_x_automorphism(const Ideal& i, const XAutomorphism& phi);
Poly apply_x_automorphism(const Poly& dual, const XAutomorphism& phi);

}  // namespace apolar
