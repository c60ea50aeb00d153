#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "apolar/monomial.hpp"

namespace apolar {

enum class OrderKind { DegRevLex, Lex, Product };

// Total multiplicative order on monomials of n variables.
//
// DegRevLex / Lex use a priority list: priority[0] is the largest variable.
// Product: variables x_n > ... > x_2 compared by degrevlex; ties broken by
// lex on x_1. It is not degree compatible.
class TermOrder {
 public:
  static TermOrder degrevlex(int n);
  static TermOrder degrevlex(std::vector<int> priority);
  static TermOrder lex(int n);
  static TermOrder lex(std::vector<int> priority);
  static TermOrder product(int n);

  OrderKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<int>& priority() const { return priority_; }
  std::string name() const;

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  friend bool operator==(const TermOrder&, const TermOrder&) = default;

 private:
  TermOrder(OrderKind kind, std::vector<int> priority);

  OrderKind kind_ = OrderKind::DegRevLex;
  int n_ = 0;
  std::vector<int> priority_;
};

// Checked comparison on raw exponent vectors; throws DomainError on length mismatch.
std::strong_ordering mono_compare(std::span<const int> a, std::span<const int> b,
                                  const TermOrder& ord);

}  // namespace apolar
