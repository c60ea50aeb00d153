#include "apolar/rational.hpp"

#include <stdexcept>
#include <string>

namespace apolar {

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace {

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

mpz_class parse_int(std::string_view s) {
  std::string t(s);
  if (!t.empty() && t[0] == '+') t.erase(0, 1);
  return mpz_class(t, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_text(num)) throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  if (slash == std::string_view::npos) return Rat(parse_int(num));
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_text(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("bad rational: '" + std::string(text) + "'");
  mpz_class d = parse_int(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  Rat r(parse_int(num), d);
  r.canonicalize();
  return r;
}

}  // namespace apolar
