#pragma once

#include <span>
#include <vector>

#include "apolar/hilbert.hpp"
#include "apolar/ideal.hpp"

namespace apolar {

Monomial leading_monomial(const Poly& f, const TermOrder& ord);

Poly normal_form(const Poly& f, std::span<const Poly> g, const TermOrder& ord);

// Buchberger with the sugar strategy, the coprime criterion and the
// Gebauer-Moeller update. If the generators contain every monomial of some
// degree D, all arithmetic is truncated below D.
GrobnerBasis reduced_groebner(std::span<const Poly> gens, const TermOrder& ord);

// Standard-monomial count per degree. Throws DomainError if some variable has
// no pure power among the leading terms.
HilbertFunction quotient_hilbert(const GrobnerBasis& g);

// Same count for the staircase of another term order, found by linear algebra
// on normal forms (FGLM) instead of a second Buchberger run.
HilbertFunction quotient_hilbert(const GrobnerBasis& g, const TermOrder& target);

// Standard monomials in breadth-first order from 1.
std::vector<Monomial> standard_monomials(const GrobnerBasis& g);

Ideal ideal_square(const Ideal& i);

bool ideal_equal(const Ideal& a, const Ideal& b, const TermOrder& ord);

// Smallest D such that every monomial of degree D is a generator, or -1.
int explicit_power_degree(std::span<const Poly> gens);

// Minimal generating set of an ideal containing every monomial of degree D
// (D as found by explicit_power_degree), chosen greedily from the given
// generators followed by the degree-D monomials. Throws DomainError if no
// such D exists.
Ideal minimal_generators(const Ideal& i);

// All monomials of degree d as x-side polynomials.
std::vector<Poly> power_generators(int n, int d);

}  // namespace apolar
