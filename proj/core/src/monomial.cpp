#include "apolar/monomial.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

namespace apolar {

namespace {

void check_exponent(int i, int e) {
  if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
  if (e < 0) throw std::invalid_argument("negative exponent");
  if (e > 255) throw std::overflow_error("exponent exceeds 255");
}

}  // namespace

Monomial::Monomial(std::initializer_list<int> exps) : Monomial(std::span<const int>(exps.begin(), exps.size())) {}

Monomial::Monomial(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars)) throw std::out_of_range("too many variables");
  for (std::size_t i = 0; i < exps.size(); ++i) set(static_cast<int>(i), exps[i]);
}

Monomial Monomial::var(int i, int e) {
  Monomial m;
  m.set(i, e);
  return m;
}

void Monomial::set(int i, int e) {
  check_exponent(i, e);
  e_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(e);
}

int Monomial::support_bound() const {
  for (int i = kMaxVars - 1; i >= 0; --i)
    if (e_[i]) return i + 1;
  return 0;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    int e = e_[i] + o.e_[i];
    if (e > 255) throw std::overflow_error("exponent exceeds 255");
    r.e_[i] = static_cast<std::uint8_t>(e);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) {
    if (o.e_[i] > e_[i]) throw std::invalid_argument("monomial division is not exact");
    r.e_[i] = static_cast<std::uint8_t>(e_[i] - o.e_[i]);
  }
  return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(a.e_[i], b.e_[i]);
  return r;
}

std::vector<int> Monomial::exponents(int n) const {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[i] = e_[i];
  return v;
}

std::uint64_t Monomial::key() const {
  std::uint64_t k;
  static_assert(sizeof(k) == kMaxVars);
  std::memcpy(&k, e_.data(), sizeof(k));
  return k;
}

namespace {

void enumerate(int n, int i, int left, Monomial& cur, std::vector<Monomial>& out) {
  if (i == n - 1) {
    cur.set(i, left);
    out.push_back(cur);
    cur.set(i, 0);
    return;
  }
  for (int e = left; e >= 0; --e) {
    cur.set(i, e);
    enumerate(n, i + 1, left - e, cur, out);
  }
  cur.set(i, 0);
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Monomial cur;
  enumerate(n, 0, d, cur, out);
  return out;
}

Rat factorial_of(const Monomial& m) {
  mpz_class r = 1;
  for (int i = 0; i < kMaxVars; ++i) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
    r *= f;
  }
  return Rat(r);
}

}  // namespace apolar
