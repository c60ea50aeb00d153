#pragma once

#include <vector>

#include "apolar/apolarity.hpp"
#include "apolar/automorphism.hpp"
#include "apolar/hilbert.hpp"
#include "apolar/qmatrix.hpp"

namespace apolar {

// Drops the constant and linear components after checking that no element of
// Ann(F) has order 1. Throws DomainError otherwise.
DualGenerator remove_linear_part(const Poly& f);

struct ExoticClearing {
  DualGenerator f;
  // Carries Ann(input) onto Ann(f).
  XAutomorphism phi;
};

// Input: c*y1^s + sum_i c_i y1^i (i >= 4) + F3 + F2 + sum_{j>m} d_j y_j^2 with
// F3, F2 in k[y1..ym], H = (1,n,m,1,...,1) and s >= 4. Output has no y1^i for
// 2 <= i < s, no y1^2*y_j, and no constant or linear part. Inputs with s = 3
// are returned unchanged. Throws DomainError on shape or Hilbert mismatch.
ExoticClearing clear_exotic_summands(const DualGenerator& f, int m);

// n x C(n+1,2): row t holds the coordinates of x_t o F3 on y^g/g!, |g| = 2.
QMatrix build_delta(const Poly& f3, int n);

// C(n+1,2) x n*C(n+1,2). Row b (|b| = 2), column (k, g) holds b_k * Delta[b - e_k][g].
// Restricted to the column block of x_h and the rows whose first variable is
// x_h, this is 2*Delta[h] followed by Delta[h+1], ..., Delta[n].
QMatrix build_U(const Poly& f3, int n);

struct F2Removal {
  XAutomorphism phi;  // Ann(F) -> Ann(F - F2)
  // b[j][g]: coefficient of x^g (|g| = 2) in phi(x_{j+1}) - x_{j+1}.
  std::vector<std::vector<Rat>> b;
  bool first_variable_fixed;  // every b[0][g] is zero
};

// Input in the output form of clear_exotic_summands. Throws InvariantViolation if
// the linear system is inconsistent.
F2Removal solve_F2_removal(const DualGenerator& f, int m);

struct NormalizationCertificate {
  Poly input;
  Poly simple;
  int m = 0;
  XAutomorphism phi;  // apply(Ann(input), phi) = Ann(simple)
  bool first_variable_fixed = true;
  bool ideals_equal = false;
  bool hilbert_equal = false;
  bool contraction_check = false;
  bool verified() const { return ideals_equal && hilbert_equal && contraction_check; }
};

// Throws DomainError if F is not 2-stretched and InvariantViolation if the
// certificate fails to verify.
NormalizationCertificate normalize_2stretched(const DualGenerator& f);

// Builds y1^s + F3 + sum_{j>m} y_j^2 and returns its Hilbert function after
// checking it is (1,n,m,1,...,1) and that the degree-1 tdf is <y1..ym>.
// Throws DomainError on bad hypotheses, InvariantViolation on failed checks.
HilbertFunction check_if_direction(const Poly& f3, int n, int m, int s);

// 1, n, m, 1, ..., 1 with s+1 entries.
HilbertFunction two_stretched_shape(int n, int m, int s);

}  // namespace apolar
