#include <cctype>
#include <string>

#include "apolar/errors.hpp"
#include "apolar/poly.hpp"

namespace apolar {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n, Side side) : s_(text), n_(n), side_(side) {}

  Poly parse() {
    Poly result(n_, side_);
    skip_ws();
    if (at_end()) fail("empty expression");
    bool negative = false;
    if (peek() == '-' || peek() == '+') {
      negative = get() == '-';
      skip_ws();
    }
    for (;;) {
      auto [m, c] = term();
      result.add_term(m, negative ? Rat(-c) : c);
      skip_ws();
      if (at_end()) break;
      char op = get();
      if (op != '+' && op != '-') fail("expected '+' or '-'", pos_ - 1);
      negative = op == '-';
      skip_ws();
    }
    return result;
  }

 private:
  std::pair<Monomial, Rat> term() {
    Rat coef = 1;
    Monomial m;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coef = coefficient();
      skip_ws();
      if (at_end() || peek() != '*') return {m, coef};
      ++pos_;
      skip_ws();
    }
    for (;;) {
      factor(m);
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
      skip_ws();
    }
    return {m, coef};
  }

  Rat coefficient() {
    mpz_class num = integer();
    skip_ws();
    if (!at_end() && peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dpos = pos_;
      mpz_class den = integer();
      if (den == 0) fail("zero denominator", dpos);
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  mpz_class integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return mpz_class(std::string(s_.substr(start, pos_ - start)), 10);
  }

  void factor(Monomial& m) {
    if (at_end()) fail("expected a variable");
    std::size_t vpos = pos_;
    char v = get();
    if (v != 'x' && v != 'y') fail("expected a variable", vpos);
    if (v != side_letter(side_)) fail(std::string("variable '") + v + "' on the wrong side", vpos);
    std::size_t ipos = pos_;
    mpz_class idx = integer();
    if (idx < 1 || idx > n_) fail("variable index out of range", ipos);
    int e = 1;
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t epos = pos_;
      mpz_class ee = integer();
      if (ee < 1) fail("exponent must be positive", epos);
      if (ee > 255) fail("exponent too large", epos);
      e = static_cast<int>(ee.get_si());
    }
    int i = static_cast<int>(idx.get_si()) - 1;
    if (m[i] + e > 255) fail("exponent too large", vpos);
    m.set(i, m[i] + e);
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  char get() { return s_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg) const { fail(msg, pos_); }
  [[noreturn]] void fail(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  Side side_;
};

}  // namespace

Poly parse_poly(std::string_view text, int n, Side side) {
  if (n < 1 || n > kMaxVars) throw DomainError("ambient variable count must be in [1, 8]");
  return Parser(text, n, side).parse();
}

}  // namespace apolar
