#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/hilbert.hpp"
#include "apolar/poly.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

// Ternary cubics in y2, y3, y4 (ambient n = 4).
enum class Cubic {
  FermatT,      // y2^3 + y3^3 + y4^3 + t*y2*y3*y4
  FermatNode,   // y2^3 + y3^3 + y2*y3*y4
  CuspB,        // y2^3 + y2*y3*y4
  Triangle,     // y2*y3*y4
  CuspA,        // y2^3 + y3^2*y4
  CubeNode,     // y2^2*y3 + y3^2*y4
  LinePair,     // y3^2*y4 - y3*y4^2
  ConicLine,    // y3*y4^2
  TripleLine,   // y4^3
  Zero,         // 0
};

inline constexpr std::array<Cubic, 10> kAllCubics = {
    Cubic::FermatT,  Cubic::FermatNode, Cubic::CuspB,     Cubic::Triangle,   Cubic::CuspA,
    Cubic::CubeNode, Cubic::LinePair,   Cubic::ConicLine, Cubic::TripleLine, Cubic::Zero};

std::string cubic_name(Cubic c);
// Accepts the names returned by cubic_name. Throws DomainError.
Cubic cubic_from_name(std::string_view name);

// Throws DomainError if t is given for anything but FermatT or missing for it.
Poly canonical_cubic(Cubic c, const std::optional<Rat>& t = std::nullopt);

using BVector = std::array<Rat, 6>;

BVector parse_bvector(std::string_view text);  // six rationals, comma or space separated
std::string to_string(const BVector& b);

// b0 y2^2 + 2b1 y2y3 + b2 y3^2 + 2b3 y2y4 + 2b4 y3y4 + b5 y4^2
Poly quadric_Q(const BVector& b);
// Symmetric 3x3 matrix of quadric_Q.
QMatrix matrix_M(const BVector& b);

// y1^4 + y1*Q_b + H. Throws DomainError unless H is a cubic form in y2..y4 (or zero).
DualGenerator build_F(const Poly& h, const BVector& b);

// x_i o (y1*Q_b + H), i = 2,3,4, linearly independent.
bool membership_BH(const Poly& h, const BVector& b);

struct TangentData {
  HilbertFunction hilbert_J;
  HilbertFunction hilbert_J2;
  int N = 0;  // dim S/J^2 - dim S/J
};

// J = Ann(F) with the product order. Throws DomainError if expected_length is
// given and dim S/J differs.
TangentData tangent_data(const DualGenerator& f, std::optional<int> expected_length = std::nullopt);
int tangent_dimension(const DualGenerator& f, std::optional<int> expected_length = 11);

// Unobstructedness threshold for length-11 algebras with H = (1,4,4,1,1).
inline constexpr int kUnobstructedN = 44;

// Closed-form obstructedness. Throws DomainError if b is outside B_H or if
// the pencil parameter is a root of t(t^3 - 216) with b != 0.
bool predicted_obstructed(Cubic c, const BVector& b, const std::optional<Rat>& t = std::nullopt);

// Printed generator lists for annihilators in this family.
enum class GeneratorList {
  QuadricOnly,  // y1^4 + y1(y2^2+y3^2+y4^2); b is ignored
  FermatPencil,  // y1^4 + y2^3+y3^3+y4^3 + t y2y3y4, b = 0
  Fermat,
  CuspA,
  CubeNode,
  LinePair,
  ConicLine,
  TripleLine,
};

std::string list_name(GeneratorList l);
GeneratorList list_from_name(std::string_view name);
Cubic list_cubic(GeneratorList l);

// The printed list at the given parameters, augmented with every monomial of
// degree 5 and every degree-4 monomial except x1^4.
std::vector<Poly> published_generators(GeneratorList l, const BVector& b,
                                       const std::optional<Rat>& t = std::nullopt);

// Compares published_generators with Ann(build_F) by ideal_equal under the
// product order. Throws DomainError if b is outside B_H.
bool verify_published_generators(GeneratorList l, const BVector& b,
                                 const std::optional<Rat>& t = std::nullopt);

struct ObstructionReport {
  std::string case_id;
  std::string h_name;
  BVector b;
  std::optional<Rat> t;
  bool in_BH = false;
  HilbertFunction hilbert_J;
  HilbertFunction hilbert_J2;
  int N = 0;
  std::optional<bool> predicted;  // empty when no closed form applies
  bool computed = false;
  bool on_locus_draw = false;
  bool agree = false;
};

struct ReproduceOptions {
  std::optional<Rat> t;  // fixes the pencil parameter for FermatT
  bool include_specials = true;  // FermatT: add (t=0,b=0) and (t=6,b=0)
};

// Deterministic in (seed, index). Even sample indices are drawn on the
// predicted locus, odd ones off it; families whose locus is all of B_H draw
// every sample on it.
std::vector<ObstructionReport> reproduce_case(Cubic c, int samples, std::uint64_t seed,
                                              const ReproduceOptions& opts = {});

// JSON array, one flat object per report.
std::string reports_to_json(const std::vector<ObstructionReport>& reports);
std::string reports_to_table(const std::vector<ObstructionReport>& reports);

}  // namespace apolar
