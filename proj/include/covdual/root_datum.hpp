#pragma once

#include "covdual/lattice.hpp"

#include <string>
#include <vector>

namespace covdual {

// Based root datum over the lattice pair X = Y = Z^rank with the standard
// dot pairing.  Roots live in X, coroots in Y, index-paired.
struct RootDatum {
    size_t rank = 0;
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;
    std::vector<size_t> simple;              // indices into roots
    std::vector<IntMatrix> galois_action;    // generators of a finite group of
                                             // automorphisms of Y; empty = trivial

    size_t num_roots() const { return roots.size(); }
    size_t semisimple_rank() const { return simple.size(); }
    const IntVec &simple_root(size_t i) const { return roots[simple[i]]; }
    const IntVec &simple_coroot(size_t i) const { return coroots[simple[i]]; }
};

Int pairing(const IntVec &x, const IntVec &y);
Rat pairing(const RatVec &x, const IntVec &y);

// s_phi on X:  x - <x, phi_vee> phi
IntVec reflect_character(const IntVec &x, const IntVec &root, const IntVec &coroot);
// s_phi on Y:  y - <phi, y> phi_vee
IntVec reflect_cocharacter(const IntVec &y, const IntVec &root, const IntVec &coroot);

// Empty list iff the datum satisfies all the axioms; each violation names
// the failing axiom and the offending indices.
std::vector<std::string> validate(const RootDatum &rd);
void validate_or_throw(const RootDatum &rd);

// Closure of a simple system under its own reflections.  Throws
// std::domain_error if the closure exceeds `max_roots` (non-finite type).
struct WeylClosure {
    std::vector<IntVec> roots;
    std::vector<IntVec> coroots;
};
WeylClosure weyl_closure(const std::vector<IntVec> &simple_roots,
                         const std::vector<IntVec> &simple_coroots, size_t max_roots = 2000);

// C_ij = <alpha_i, alpha_j_vee> over the simple system.
IntMatrix cartan_matrix(const RootDatum &rd);

Sublattice coroot_span(const RootDatum &rd);
Sublattice root_span(const RootDatum &rd);

// Invariants of Y / (coroot span): pi_1 of the group the datum describes,
// equivalently the character group of the center of its dual.
AbelianInvariants fundamental_group(const RootDatum &rd);
// Invariants of X / (root span): the center of the group itself.
AbelianInvariants center_invariants(const RootDatum &rd);

// Same lattices, roots restricted to the span of the chosen simple roots.
// `subset` holds positions into rd.simple.
RootDatum levi_subdatum(const RootDatum &rd, const std::vector<size_t> &subset);

// Swap X <-> Y and roots <-> coroots.
RootDatum dualize_datum(const RootDatum &rd);

// Assemble a datum from simple pairs by Weyl closure; root order is
// canonical (lexicographic), so equal inputs give equal data.
RootDatum datum_from_simple_system(size_t rank, const std::vector<IntVec> &simple_roots,
                                   const std::vector<IntVec> &simple_coroots);

// Direct sum of two data (block lattices, disjoint root sets).
RootDatum datum_product(const RootDatum &a, const RootDatum &b);

// Change of coordinates: the rows of `basis` / `den` form a basis of a new
// cocharacter lattice Y' (inside the old Y tensor Q).  Coroots are given in
// old Y coordinates (must lie in Y'), roots as numerator / denominator pairs
// in old X coordinates (must pair integrally with Y').  Produces the datum
// written in the new coordinates.
RootDatum recoordinatize(const IntMatrix &basis, const Int &den,
                         const std::vector<IntVec> &coroots,
                         const std::vector<IntVec> &root_numerators,
                         const std::vector<Int> &root_denominators,
                         const std::vector<size_t> &simple);

}  // namespace covdual
