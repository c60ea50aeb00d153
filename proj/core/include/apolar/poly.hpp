#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "apolar/monomial.hpp"
#include "apolar/rational.hpp"

namespace apolar {

class QMatrix;

// x: operator side (power series ring, truncated), y: dual side (divided-power
// module acted on by contraction).
enum class Side { X, Y };

char side_letter(Side s);

class Poly {
 public:
  using TermMap = std::map<Monomial, Rat, CanonicalGreater>;

  Poly() = default;
  Poly(int n, Side side);
  static Poly constant(int n, Side side, const Rat& c);
  static Poly monomial(int n, Side side, const Monomial& m, const Rat& c = 1);
  static Poly variable(int n, Side side, int i);

  int n() const { return n_; }
  Side side() const { return side_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Coefficient of m (zero if absent).
  Rat coeff(const Monomial& m) const;
  // Adds c to the coefficient of m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Rat& c);

  // -1 for the zero polynomial.
  int degree() const;
  // Lowest degree of a term; -1 for the zero polynomial.
  int order() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rat& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Rat& c) { return a *= c; }
  friend Poly operator*(const Rat& c, Poly a) { return a *= c; }
  friend Poly operator-(Poly a) { return a *= Rat(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);

  // Terms of total degree >= d removed.
  Poly truncated(int d) const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.n_ == b.n_ && a.side_ == b.side_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Poly& o) const;

  int n_ = 0;
  Side side_ = Side::X;
  TermMap terms_;
};

Poly homogeneous_component(const Poly& p, int d);

// v_i -> sum_k A(k, i) v_k. Throws DomainError if A is singular or not n x n.
Poly substitute_linear(const Poly& p, const QMatrix& a);

// Grammar: expression := term (('+'|'-') term)*, term := [coef '*'] factor
// ('*' factor)*, factor := var ['^' posint], coef := int | int '/' posint,
// var := ('x'|'y') posint. A bare coefficient is accepted as a constant term
// and a leading sign is allowed. Throws ParseError.
Poly parse_poly(std::string_view text, int n, Side side);

// Descending degrevlex with explicit '*' and '^'; "0" for zero.
std::string render(const Poly& p);

}  // namespace apolar
