#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "apolar/rational.hpp"

namespace apolar {

inline constexpr int kMaxVars = 8;

// Exponent vector. Storage is fixed at kMaxVars entries; the ambient variable
// count lives on the owning Poly, unused slots stay zero.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::initializer_list<int> exps);
  explicit Monomial(std::span<const int> exps);

  static Monomial var(int i, int e = 1);

  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int e);

  int degree() const {
    int d = 0;
    for (auto v : e_) d += v;
    return d;
  }
  // Largest index with a nonzero exponent plus one; 0 for the unit monomial.
  int support_bound() const;

  bool divides(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > other.e_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] != 0 && other.e_[i] != 0) return false;
    return true;
  }

  // Throws std::overflow_error if an exponent exceeds 255.
  Monomial operator*(const Monomial& other) const;
  // Precondition: other divides *this.
  Monomial operator/(const Monomial& other) const;
  static Monomial lcm(const Monomial& a, const Monomial& b);

  std::vector<int> exponents(int n) const;
  std::uint64_t key() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<std::uint8_t, kMaxVars> e_{};
};

// Descending degrevlex with x1 > x2 > ... : the canonical iteration order of Poly.
struct CanonicalGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return std::hash<std::uint64_t>{}(m.key()); }
};

// All monomials in n variables of total degree d, in descending lex order
// (x1^d first).
std::vector<Monomial> monomials_of_degree(int n, int d);

// prod_i e_i!
Rat factorial_of(const Monomial& m);

}  // namespace apolar
