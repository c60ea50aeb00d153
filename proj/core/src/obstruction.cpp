#include "apolar/obstruction.hpp"

#include <random>
#include <sstream>

#include "apolar/errors.hpp"
#include "apolar/groebner.hpp"
#include "apolar/monomial_basis.hpp"

namespace apolar {

namespace {

constexpr int kN = 4;

Poly ymono(std::initializer_list<int> e, const Rat& c = 1) { return Poly::monomial(kN, Side::Y, Monomial(e), c); }

struct CubicInfo {
  Cubic c;
  const char* name;
};

constexpr CubicInfo kNames[] = {
    {Cubic::FermatT, "fermat_t"},   {Cubic::FermatNode, "fermat_node"}, {Cubic::CuspB, "cusp_b"},
    {Cubic::Triangle, "triangle"},  {Cubic::CuspA, "cusp_a"},           {Cubic::CubeNode, "cube_node"},
    {Cubic::LinePair, "line_pair"}, {Cubic::ConicLine, "conic_line"},   {Cubic::TripleLine, "triple_line"},
    {Cubic::Zero, "zero"},
};

bool pencil_special(const Rat& t) { return t == 0 || t * t * t == 216; }

}  // namespace

std::string cubic_name(Cubic c) {
  for (const auto& [k, name] : kNames)
    if (k == c) return name;
  return "?";
}

Cubic cubic_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (name == n) return k;
  throw DomainError("unknown cubic '" + std::string(name) + "'");
}

Poly canonical_cubic(Cubic c, const std::optional<Rat>& t) {
  if ((c == Cubic::FermatT) != t.has_value())
    throw DomainError(c == Cubic::FermatT ? "fermat_t needs the parameter t" : "parameter t only applies to fermat_t");
  switch (c) {
    case Cubic::FermatT:
      return ymono({0, 3, 0, 0}) + ymono({0, 0, 3, 0}) + ymono({0, 0, 0, 3}) + ymono({0, 1, 1, 1}, *t);
    case Cubic::FermatNode:
      return ymono({0, 3, 0, 0}) + ymono({0, 0, 3, 0}) + ymono({0, 1, 1, 1});
    case Cubic::CuspB:
      return ymono({0, 3, 0, 0}) + ymono({0, 1, 1, 1});
    case Cubic::Triangle:
      return ymono({0, 1, 1, 1});
    case Cubic::CuspA:
      return ymono({0, 3, 0, 0}) + ymono({0, 0, 2, 1});
    case Cubic::CubeNode:
      return ymono({0, 2, 1, 0}) + ymono({0, 0, 2, 1});
    case Cubic::LinePair:
      return ymono({0, 0, 2, 1}) - ymono({0, 0, 1, 2});
    case Cubic::ConicLine:
      return ymono({0, 0, 1, 2});
    case Cubic::TripleLine:
      return ymono({0, 0, 0, 3});
    case Cubic::Zero:
      return Poly(kN, Side::Y);
  }
  throw DomainError("unknown cubic");
}

BVector parse_bvector(std::string_view text) {
  BVector b;
  std::string s(text);
  for (char& ch : s)
    if (ch == ',') ch = ' ';
  std::istringstream in(s);
  std::string tok;
  int k = 0;
  while (in >> tok) {
    if (k == 6) throw DomainError("expected exactly six rationals");
    b[k++] = parse_rat(tok);
  }
  if (k != 6) throw DomainError("expected exactly six rationals");
  return b;
}

std::string to_string(const BVector& b) {
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (i) s += ",";
    s += to_string(b[i]);
  }
  return s;
}

Poly quadric_Q(const BVector& b) {
  return ymono({0, 2, 0, 0}, b[0]) + ymono({0, 1, 1, 0}, 2 * b[1]) + ymono({0, 0, 2, 0}, b[2]) +
         ymono({0, 1, 0, 1}, 2 * b[3]) + ymono({0, 0, 1, 1}, 2 * b[4]) + ymono({0, 0, 0, 2}, b[5]);
}

QMatrix matrix_M(const BVector& b) {
  return QMatrix(3, 3, {b[0], b[1], b[3], b[1], b[2], b[4], b[3], b[4], b[5]});
}

namespace {

void check_cubic_form(const Poly& h) {
  if (h.n() != kN || h.side() != Side::Y) throw DomainError("H must be a y-side polynomial in 4 variables");
  for (const auto& [m, c] : h.terms())
    if (m.degree() != 3 || m[0] != 0) throw DomainError("H must be a cubic form in y2, y3, y4");
}

}  // namespace

DualGenerator build_F(const Poly& h, const BVector& b) {
  check_cubic_form(h);
  return DualGenerator(ymono({4, 0, 0, 0}) + ymono({1, 0, 0, 0}) * quadric_Q(b) + h);
}

bool membership_BH(const Poly& h, const BVector& b) {
  check_cubic_form(h);
  Poly p = ymono({1, 0, 0, 0}) * quadric_Q(b) + h;
  MonomialBasis quad(kN, 2, 2);
  EchelonBasis e(quad.size());
  for (int i = 1; i < kN; ++i)
    if (!e.insert(quad.coords(contract(Poly::variable(kN, Side::X, i), p)))) return false;
  return true;
}

TangentData tangent_data(const DualGenerator& f, std::optional<int> expected_length) {
  const int n = f.n();
  const TermOrder ord = TermOrder::product(n);
  Ideal j = annihilator(f);
  TangentData out;
  out.hilbert_J = quotient_hilbert(j.groebner(ord));
  if (expected_length && out.hilbert_J.total() != *expected_length)
    throw DomainError("dim S/J is " + std::to_string(out.hilbert_J.total()) + ", expected " +
                      std::to_string(*expected_length));
  // J^2 from a minimal generating set, truncated at the power of m it contains.
  const int d = explicit_power_degree(j.generators());
  const auto mg = minimal_generators(j).generators();
  std::vector<Poly> sq;
  for (std::size_t a = 0; a < mg.size(); ++a)
    for (std::size_t b = a; b < mg.size(); ++b) {
      Poly p = (mg[a] * mg[b]).truncated(2 * d);
      if (!p.is_zero()) sq.push_back(std::move(p));
    }
  for (auto& p : power_generators(n, 2 * d)) sq.push_back(std::move(p));
  // Buchberger under the product order stalls on J^2 for non-normalized F, so
  // the basis is computed in degrevlex and the staircase converted.
  out.hilbert_J2 = quotient_hilbert(reduced_groebner(sq, TermOrder::degrevlex(n)), ord);
  out.N = out.hilbert_J2.total() - out.hilbert_J.total();
  return out;
}

int tangent_dimension(const DualGenerator& f, std::optional<int> expected_length) {
  return tangent_data(f, expected_length).N;
}

bool predicted_obstructed(Cubic c, const BVector& b, const std::optional<Rat>& t) {
  if (!membership_BH(canonical_cubic(c, t), b)) throw DomainError("b = (" + to_string(b) + ") is outside B_H");
  const auto& [b0, b1, b2, b3, b4, b5] = b;
  switch (c) {
    case Cubic::FermatT: {
      if (!pencil_special(*t)) return false;
      if (*t == 0) return b1 == 0 && b3 == 0 && b4 == 0;
      bool zero = true;
      for (const auto& x : b) zero = zero && x == 0;
      if (zero) return true;
      throw DomainError("no closed-form locus for t = " + to_string(*t) + " and b != 0");
    }
    case Cubic::FermatNode:
    case Cubic::CuspB:
    case Cubic::Triangle:
      return false;
    case Cubic::CuspA:
      return b1 == 0 && b3 == 0 && b5 == 0;
    case Cubic::CubeNode:
      return b0 == b4 && b3 == 0 && b5 == 0;
    case Cubic::LinePair:
      return -b1 * b1 + b0 * b2 - b1 * b3 - b3 * b3 + b0 * b4 + b0 * b5 == 0;
    case Cubic::ConicLine:
      return b1 * b1 - b0 * b2 == 0;
    case Cubic::TripleLine:
    case Cubic::Zero:
      return true;
  }
  return false;
}

namespace {

enum class Locus { Always, Never, Split };

Locus locus_kind(Cubic c, const std::optional<Rat>& t) {
  switch (c) {
    case Cubic::FermatT:
      return t && *t == 0 ? Locus::Split : Locus::Never;
    case Cubic::FermatNode:
    case Cubic::CuspB:
    case Cubic::Triangle:
      return Locus::Never;
    case Cubic::TripleLine:
    case Cubic::Zero:
      return Locus::Always;
    default:
      return Locus::Split;
  }
}

class Sampler {
 public:
  Sampler(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    rng_.seed(seq);
  }
  // Uniform-ish integer in [-5, 5]; plain modulo keeps it platform independent.
  int small() { return static_cast<int>(rng_() % 11) - 5; }
  int small_nonzero() {
    for (;;)
      if (int v = small(); v != 0) return v;
  }

 private:
  std::mt19937_64 rng_;
};

// Moves b onto the predicted locus; false if the chosen coordinates make the
// defining equation unsolvable.
bool project_on(Cubic c, BVector& b) {
  auto& [b0, b1, b2, b3, b4, b5] = b;
  switch (c) {
    case Cubic::FermatT:
      b1 = b3 = b4 = 0;
      return true;
    case Cubic::CuspA:
      b1 = b3 = b5 = 0;
      return true;
    case Cubic::CubeNode:
      b4 = b0;
      b3 = b5 = 0;
      return true;
    case Cubic::LinePair:
      if (b0 == 0) return false;
      b2 = (b1 * b1 + b1 * b3 + b3 * b3 - b0 * b4 - b0 * b5) / b0;
      return true;
    case Cubic::ConicLine:
      if (b0 == 0) return false;
      b2 = b1 * b1 / b0;
      return true;
    default:
      return true;
  }
}

ObstructionReport evaluate(Cubic c, const std::string& id, const BVector& b, const std::optional<Rat>& t,
                           bool on_draw) {
  ObstructionReport r;
  r.case_id = id;
  r.h_name = cubic_name(c);
  r.b = b;
  r.t = t;
  r.on_locus_draw = on_draw;
  Poly h = canonical_cubic(c, t);
  r.in_BH = membership_BH(h, b);
  if (!r.in_BH) return r;
  try {
    r.predicted = predicted_obstructed(c, b, t);
  } catch (const DomainError&) {
    r.predicted.reset();
  }
  TangentData td = tangent_data(build_F(h, b), 11);
  r.hilbert_J = td.hilbert_J;
  r.hilbert_J2 = td.hilbert_J2;
  r.N = td.N;
  r.computed = td.N > kUnobstructedN;
  r.agree = r.predicted.has_value() && *r.predicted == r.computed;
  return r;
}

}  // namespace

std::vector<ObstructionReport> reproduce_case(Cubic c, int samples, std::uint64_t seed,
                                              const ReproduceOptions& opts) {
  if (samples < 1) throw DomainError("samples must be positive");
  if (opts.t && c != Cubic::FermatT) throw DomainError("parameter t only applies to fermat_t");
  std::vector<ObstructionReport> out;
  const std::string name = cubic_name(c);
  if (c == Cubic::FermatT && !opts.t && opts.include_specials) {
    out.push_back(evaluate(c, name + ":special:t=0", BVector{}, Rat(0), true));
    out.push_back(evaluate(c, name + ":special:t=6", BVector{}, Rat(6), true));
  }
  for (int i = 0; i < samples; ++i) {
    Sampler rng(seed, static_cast<std::uint64_t>(i));
    std::optional<Rat> t = opts.t;
    if (c == Cubic::FermatT && !t) t = Rat(rng.small_nonzero());
    const Locus kind = locus_kind(c, t);
    const bool on = kind == Locus::Always || (kind == Locus::Split && i % 2 == 0);
    const Poly h = canonical_cubic(c, t);
    BVector b;
    bool found = false;
    for (int attempt = 0; attempt < 10000 && !found; ++attempt) {
      for (auto& x : b) x = rng.small();
      if (on && !project_on(c, b)) continue;
      if (!membership_BH(h, b)) continue;
      bool pred;
      try {
        pred = predicted_obstructed(c, b, t);
      } catch (const DomainError&) {
        continue;
      }
      found = pred == on;
    }
    if (!found) throw InvariantViolation("could not draw a sample for " + name);
    out.push_back(evaluate(c, name + ":" + std::to_string(i), b, t, on));
  }
  return out;
}

}  // namespace apolar
