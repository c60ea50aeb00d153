#include "apolar/term_order.hpp"

#include <algorithm>
#include <numeric>

#include "apolar/errors.hpp"

namespace apolar {

namespace {

std::vector<int> natural(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  return p;
}

}  // namespace

TermOrder::TermOrder(OrderKind kind, std::vector<int> priority)
    : kind_(kind), n_(static_cast<int>(priority.size())), priority_(std::move(priority)) {
  if (n_ < 1 || n_ > kMaxVars) throw DomainError("term order needs 1..8 variables");
  std::vector<int> s = priority_;
  std::sort(s.begin(), s.end());
  if (s != natural(n_)) throw DomainError("variable priority must be a permutation");
}

TermOrder TermOrder::degrevlex(int n) { return TermOrder(OrderKind::DegRevLex, natural(n)); }
TermOrder TermOrder::degrevlex(std::vector<int> p) { return TermOrder(OrderKind::DegRevLex, std::move(p)); }
TermOrder TermOrder::lex(int n) { return TermOrder(OrderKind::Lex, natural(n)); }
TermOrder TermOrder::lex(std::vector<int> p) { return TermOrder(OrderKind::Lex, std::move(p)); }

TermOrder TermOrder::product(int n) {
  // x_n > ... > x_2 inside the degrevlex block, x_1 last.
  std::vector<int> p;
  for (int i = n - 1; i >= 1; --i) p.push_back(i);
  p.push_back(0);
  return TermOrder(OrderKind::Product, std::move(p));
}

std::string TermOrder::name() const {
  std::string s = kind_ == OrderKind::DegRevLex ? "degrevlex" : kind_ == OrderKind::Lex ? "lex" : "product";
  s += "(";
  for (std::size_t i = 0; i < priority_.size(); ++i) {
    if (i) s += ">";
    s += "x" + std::to_string(priority_[i] + 1);
  }
  return s + ")";
}

namespace {

// Degrevlex on the variables listed in vars (largest first).
std::strong_ordering drl(const Monomial& a, const Monomial& b, const int* vars, int k) {
  int da = 0, db = 0;
  for (int i = 0; i < k; ++i) {
    da += a[vars[i]];
    db += b[vars[i]];
  }
  if (da != db) return da <=> db;
  for (int i = k - 1; i >= 0; --i) {
    int ea = a[vars[i]], eb = b[vars[i]];
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case OrderKind::DegRevLex:
      return drl(a, b, priority_.data(), n_);
    case OrderKind::Lex:
      for (int v : priority_)
        if (a[v] != b[v]) return a[v] <=> b[v];
      return std::strong_ordering::equal;
    case OrderKind::Product: {
      auto c = drl(a, b, priority_.data(), n_ - 1);
      if (c != 0) return c;
      return a[0] <=> b[0];
    }
  }
  return std::strong_ordering::equal;
}

std::strong_ordering mono_compare(std::span<const int> a, std::span<const int> b, const TermOrder& ord) {
  if (a.size() != b.size() || static_cast<int>(a.size()) != ord.n())
    throw DomainError("exponent vector length does not match the term order");
  return ord.compare(Monomial(a), Monomial(b));
}

}  // namespace apolar
