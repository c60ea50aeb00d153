#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/obstruction.hpp"

namespace apolar {

namespace {

constexpr int kN = 4;

// x1^a x2^b x3^c x4^d
Poly xm(int a, int b, int c, int d, const Rat& coef = 1) {
  return Poly::monomial(kN, Side::X, Monomial{a, b, c, d}, coef);
}

const Poly& x1cube() {
  static const Poly p = xm(3, 0, 0, 0);
  return p;
}
const Poly& x1four() {
  static const Poly p = xm(4, 0, 0, 0);
  return p;
}

// 12*m - c*x1^4 for a cubic monomial m.
Poly twelve_minus(const Poly& m, const Rat& c) { return 12 * m - c * x1four(); }

// q - c*x1^3/12
Poly shifted(const Poly& q, const Rat& c) { return q - (c / 12) * x1cube(); }

std::vector<Poly> quadric_only() {
  return {xm(0, 0, 0, 2) - xm(0, 2, 0, 0), xm(0, 0, 2, 0) - xm(0, 2, 0, 0), xm(0, 0, 1, 1), xm(0, 1, 0, 1),
          xm(0, 1, 1, 0), 12 * xm(0, 0, 0, 2) - x1cube(), xm(2, 1, 0, 0), xm(2, 0, 1, 0), xm(2, 0, 0, 1)};
}

std::vector<Poly> fermat_pencil(const Rat& t) {
  return {xm(1, 1, 0, 0),
          xm(1, 0, 1, 0),
          xm(1, 0, 0, 1),
          t * xm(0, 2, 0, 0) - 6 * xm(0, 0, 1, 1),
          t * xm(0, 0, 2, 0) - 6 * xm(0, 1, 0, 1),
          t * xm(0, 0, 0, 2) - 6 * xm(0, 1, 1, 0),
          xm(2, 1, 0, 0),
          xm(1, 2, 0, 0),
          xm(2, 0, 1, 0),
          xm(1, 1, 1, 0),
          xm(0, 2, 1, 0),
          xm(1, 0, 2, 0),
          xm(0, 1, 2, 0),
          xm(2, 0, 0, 1),
          xm(1, 1, 0, 1),
          xm(0, 2, 0, 1),
          xm(1, 0, 1, 1),
          xm(0, 0, 2, 1),
          xm(1, 0, 0, 2),
          xm(0, 1, 0, 2),
          xm(0, 0, 1, 2),
          4 * xm(0, 3, 0, 0) - x1four(),
          4 * xm(0, 0, 3, 0) - x1four(),
          24 * xm(0, 1, 1, 1) - t * x1four(),
          4 * xm(0, 0, 0, 3) - x1four()};
}

// Cubic generators x1*q - b*x1^4/12 scaled by 12, shared by every family.
std::vector<Poly> x1_multiples(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  return {xm(2, 1, 0, 0),
          xm(2, 0, 1, 0),
          xm(2, 0, 0, 1),
          twelve_minus(xm(1, 2, 0, 0), b0),
          twelve_minus(xm(1, 1, 1, 0), b1),
          twelve_minus(xm(1, 0, 2, 0), b2),
          twelve_minus(xm(1, 1, 0, 1), b3),
          twelve_minus(xm(1, 0, 1, 1), b4),
          twelve_minus(xm(1, 0, 0, 2), b5)};
}

void append(std::vector<Poly>& out, std::vector<Poly> more) {
  for (auto& p : more) out.push_back(std::move(p));
}

std::vector<Poly> fermat(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  Poly p1 = shifted(xm(0, 2, 0, 0), b0), p2 = shifted(xm(0, 0, 2, 0), b2), p3 = shifted(xm(0, 0, 0, 2), b5);
  std::vector<Poly> g = {3 * xm(1, 1, 0, 0) - b0 * p1 - b1 * p2 - b3 * p3,
                         3 * xm(1, 0, 1, 0) - b1 * p1 - b2 * p2 - b4 * p3,
                         12 * xm(0, 1, 1, 0) - b1 * x1cube(),
                         3 * xm(1, 0, 0, 1) - b3 * p1 - b4 * p2 - b5 * p3,
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         12 * xm(0, 0, 1, 1) - b4 * x1cube(),
                         4 * xm(0, 3, 0, 0) - x1four(),
                         xm(0, 1, 2, 0),
                         xm(0, 2, 1, 0),
                         4 * xm(0, 0, 3, 0) - x1four(),
                         xm(0, 2, 0, 1),
                         xm(0, 1, 1, 1),
                         xm(0, 0, 2, 1),
                         xm(0, 1, 0, 2),
                         xm(0, 0, 1, 2),
                         4 * xm(0, 0, 0, 3) - x1four()};
  append(g, x1_multiples(b));
  return g;
}

std::vector<Poly> cusp_a(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  Poly p1 = shifted(xm(0, 2, 0, 0), b0), p2 = shifted(xm(0, 0, 1, 1), b4), p3 = shifted(xm(0, 0, 2, 0), b2);
  std::vector<Poly> g = {12 * xm(0, 0, 0, 2) - b5 * x1cube(),
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         12 * xm(0, 1, 1, 0) - b1 * x1cube(),
                         3 * xm(1, 1, 0, 0) - b0 * p1 - 3 * b1 * p2 - 3 * b3 * p3,
                         3 * xm(1, 0, 1, 0) - b1 * p1 - 3 * b2 * p2 - 3 * b4 * p3,
                         3 * xm(1, 0, 0, 1) - b3 * p1 - 3 * b4 * p2 - 3 * b5 * p3,
                         4 * xm(0, 3, 0, 0) - x1four(),
                         xm(0, 2, 1, 0),
                         xm(0, 1, 2, 0),
                         xm(0, 0, 3, 0),
                         xm(0, 2, 0, 1),
                         xm(0, 1, 1, 1),
                         12 * xm(0, 0, 2, 1) - x1four(),
                         xm(0, 1, 0, 2),
                         xm(0, 0, 1, 2),
                         xm(0, 0, 0, 3)};
  append(g, x1_multiples(b));
  return g;
}

std::vector<Poly> cube_node(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  Poly p1 = shifted(xm(0, 1, 1, 0), b1), p2 = shifted(xm(0, 0, 1, 1), b4), p3 = shifted(xm(0, 0, 2, 0), b2);
  std::vector<Poly> g = {12 * xm(0, 0, 0, 2) - b5 * x1cube(),
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         xm(1, 1, 0, 0) - b0 * p1 - b1 * p2 - b3 * p3,
                         shifted(xm(0, 2, 0, 0), b0) - p2,
                         xm(1, 0, 1, 0) - b1 * p1 - b2 * p2 - b4 * p3,
                         xm(1, 0, 0, 1) - b3 * p1 - b4 * p2 - b5 * p3,
                         xm(0, 3, 0, 0),
                         12 * xm(0, 2, 1, 0) - x1four(),
                         xm(0, 1, 2, 0),
                         xm(0, 0, 3, 0),
                         xm(0, 2, 0, 1),
                         xm(0, 1, 1, 1),
                         12 * xm(0, 0, 2, 1) - x1four(),
                         xm(0, 1, 0, 2),
                         xm(0, 0, 1, 2),
                         xm(0, 0, 0, 3)};
  append(g, x1_multiples(b));
  return g;
}

std::vector<Poly> line_pair(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  Poly q4 = shifted(xm(0, 0, 0, 2), b5), q3 = shifted(xm(0, 0, 2, 0), b2);
  Poly p1 = xm(1, 1, 0, 0) + b1 * q4 - b3 * q3;
  Poly p2 = xm(1, 0, 1, 0) + b2 * q4 - b4 * q3;
  Poly p3 = xm(1, 0, 0, 1) + b4 * q4 - b5 * q3;
  std::vector<Poly> g = {12 * xm(0, 2, 0, 0) - b0 * x1cube(),
                         12 * xm(0, 1, 1, 0) - b1 * x1cube(),
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         12 * xm(0, 0, 2, 0) + 12 * xm(0, 0, 1, 1) + 12 * xm(0, 0, 0, 2) - (b2 + b4 + b5) * x1cube(),
                         b1 * p1 - b0 * p2,
                         b3 * p1 - b0 * p3,
                         b3 * p2 - b1 * p3,
                         xm(0, 0, 0, 3),
                         12 * xm(0, 0, 1, 2) + x1four(),
                         xm(0, 1, 0, 2),
                         12 * xm(0, 0, 2, 1) - x1four(),
                         xm(0, 1, 1, 1),
                         xm(0, 2, 0, 1),
                         xm(0, 0, 3, 0),
                         xm(0, 1, 2, 0),
                         xm(0, 2, 1, 0),
                         xm(0, 3, 0, 0)};
  append(g, x1_multiples(b));
  return g;
}

std::vector<Poly> conic_line(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  Poly q44 = shifted(xm(0, 0, 0, 2), b5), q34 = shifted(xm(0, 0, 1, 1), b4);
  Poly p1 = xm(1, 1, 0, 0) - b1 * q44 - b3 * q34;
  Poly p2 = xm(1, 0, 1, 0) - b2 * q44 - b4 * q34;
  Poly p3 = xm(1, 0, 0, 1) - b4 * q44 - b5 * q34;
  std::vector<Poly> g = {12 * xm(0, 2, 0, 0) - b0 * x1cube(),
                         12 * xm(0, 1, 1, 0) - b1 * x1cube(),
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         12 * xm(0, 0, 2, 0) - b2 * x1cube(),
                         b1 * p1 - b0 * p2,
                         b3 * p1 - b0 * p3,
                         b3 * p2 - b1 * p3,
                         xm(0, 0, 0, 3),
                         12 * xm(0, 0, 1, 2) - x1four(),
                         xm(0, 1, 0, 2),
                         xm(0, 0, 2, 1),
                         xm(0, 1, 1, 1),
                         xm(0, 2, 0, 1),
                         xm(0, 0, 3, 0),
                         xm(0, 1, 2, 0),
                         xm(0, 2, 1, 0),
                         xm(0, 3, 0, 0)};
  append(g, x1_multiples(b));
  return g;
}

std::vector<Poly> triple_line(const BVector& b) {
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  const QMatrix m = matrix_M(b);
  const Rat det = m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
                  m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
                  m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  const Rat b6 = -det;
  std::vector<Poly> g = {12 * xm(0, 2, 0, 0) - b0 * x1cube(),
                         12 * xm(0, 1, 1, 0) - b1 * x1cube(),
                         12 * xm(0, 0, 2, 0) - b2 * x1cube(),
                         12 * xm(0, 1, 0, 1) - b3 * x1cube(),
                         12 * xm(0, 0, 1, 1) - b4 * x1cube(),
                         b6 * shifted(xm(0, 0, 0, 2), b5) - 3 * (b1 * b1 - b0 * b2) * xm(1, 0, 0, 1) +
                             3 * (b1 * b3 - b0 * b4) * xm(1, 0, 1, 0) - 3 * (b2 * b3 - b1 * b4) * xm(1, 1, 0, 0),
                         4 * xm(0, 0, 0, 3) - x1four(),
                         xm(0, 0, 1, 2),
                         xm(0, 1, 0, 2),
                         xm(0, 0, 2, 1),
                         xm(0, 1, 1, 1),
                         xm(0, 2, 0, 1),
                         xm(0, 0, 3, 0),
                         xm(0, 1, 2, 0),
                         xm(0, 2, 1, 0),
                         xm(0, 3, 0, 0)};
  append(g, x1_multiples(b));
  return g;
}

struct ListInfo {
  GeneratorList l;
  const char* name;
  Cubic cubic;
};

constexpr ListInfo kLists[] = {
    {GeneratorList::QuadricOnly, "quadric_only", Cubic::Zero},
    {GeneratorList::FermatPencil, "fermat_pencil", Cubic::FermatT},
    {GeneratorList::Fermat, "fermat", Cubic::FermatT},
    {GeneratorList::CuspA, "cusp_a", Cubic::CuspA},
    {GeneratorList::CubeNode, "cube_node", Cubic::CubeNode},
    {GeneratorList::LinePair, "line_pair", Cubic::LinePair},
    {GeneratorList::ConicLine, "conic_line", Cubic::ConicLine},
    {GeneratorList::TripleLine, "triple_line", Cubic::TripleLine},
};

// (b, t) actually used for the dual generator of list l.
std::pair<BVector, std::optional<Rat>> effective_parameters(GeneratorList l, const BVector& b,
                                                            const std::optional<Rat>& t) {
  switch (l) {
    case GeneratorList::QuadricOnly:
      if (t) throw DomainError("quadric_only takes no t");
      return {BVector{1, 0, 1, 0, 0, 1}, std::nullopt};
    case GeneratorList::FermatPencil:
      if (!t) throw DomainError("fermat_pencil needs t");
      return {BVector{}, t};
    case GeneratorList::Fermat:
      if (t) throw DomainError("fermat takes no t");
      return {b, Rat(0)};
    default:
      if (t) throw DomainError(list_name(l) + " takes no t");
      return {b, std::nullopt};
  }
}

}  // namespace

std::string list_name(GeneratorList l) {
  for (const auto& info : kLists)
    if (info.l == l) return info.name;
  return "?";
}

GeneratorList list_from_name(std::string_view name) {
  for (const auto& info : kLists)
    if (name == info.name) return info.l;
  throw DomainError("unknown generator list '" + std::string(name) + "'");
}

Cubic list_cubic(GeneratorList l) {
  for (const auto& info : kLists)
    if (info.l == l) return info.cubic;
  throw DomainError("unknown generator list");
}

std::vector<Poly> published_generators(GeneratorList l, const BVector& b, const std::optional<Rat>& t) {
  const auto [eb, et] = effective_parameters(l, b, t);
  if (!membership_BH(canonical_cubic(list_cubic(l), et), eb))
    throw DomainError("parameters lie outside B_H for " + list_name(l));
  std::vector<Poly> g;
  switch (l) {
    case GeneratorList::QuadricOnly: g = quadric_only(); break;
    case GeneratorList::FermatPencil: g = fermat_pencil(*et); break;
    case GeneratorList::Fermat: g = fermat(eb); break;
    case GeneratorList::CuspA: g = cusp_a(eb); break;
    case GeneratorList::CubeNode: g = cube_node(eb); break;
    case GeneratorList::LinePair: g = line_pair(eb); break;
    case GeneratorList::ConicLine: g = conic_line(eb); break;
    case GeneratorList::TripleLine: g = triple_line(eb); break;
  }
  for (const auto& m : monomials_of_degree(kN, 4))
    if (m != Monomial{4, 0, 0, 0}) g.push_back(Poly::monomial(kN, Side::X, m));
  append(g, power_generators(kN, 5));
  return g;
}

bool verify_published_generators(GeneratorList l, const BVector& b, const std::optional<Rat>& t) {
  const auto [eb, et] = effective_parameters(l, b, t);
  Ideal printed(kN, published_generators(l, b, t));
  Ideal ann = annihilator(build_F(canonical_cubic(list_cubic(l), et), eb));
  return ideal_equal(printed, ann, TermOrder::product(kN));
}

}  // namespace apolar
