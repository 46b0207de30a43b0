#pragma once

#include "covdual/int_matrix.hpp"

#include <optional>

namespace covdual {

// A sublattice of Z^ambient_rank.  The basis is kept in canonical row
// Hermite form, so equality of sublattices is equality of representations.
class Sublattice {
  public:
    Sublattice() : ambient_(0) {}

    // Rows of `generators` span the lattice (they need not be independent).
    static Sublattice from_generators(const IntMatrix &generators, size_t ambient_rank);
    static Sublattice full(size_t ambient_rank);
    static Sublattice zero(size_t ambient_rank);

    size_t ambient_rank() const { return ambient_; }
    size_t rank() const { return basis_.rows(); }
    const IntMatrix &basis() const { return basis_; }
    bool full_rank() const { return rank() == ambient_; }

    bool contains(const IntVec &v) const;
    std::optional<IntVec> coordinates(const IntVec &v) const;  // v in basis coords
    bool contains(const Sublattice &other) const;

    Sublattice saturate() const;
    Sublattice sum(const Sublattice &other) const;
    Sublattice intersect(const Sublattice &other) const;
    Sublattice scaled(const Int &k) const;

    // Index of `other` inside *this (both full rank in the common span).
    Int index_of(const Sublattice &other) const;

    bool operator==(const Sublattice &rhs) const = default;

  private:
    size_t ambient_;
    IntMatrix basis_;
};

// Invariant factors and free rank of Z^ambient_rank / sub.
AbelianInvariants quotient_invariants(const Sublattice &sub, size_t ambient_rank);

// { y in Z^r : <f, y> = 0 mod n for every row f of `functionals` }.
// Always contains n * Z^r, hence full rank.
Sublattice congruence_sublattice(const IntMatrix &functionals, const Int &n);

// Basis of n * dual(L) for a full-rank L, where
// dual(L) = { x in Q^r : <x, y> integral for all y in L }.
// The dual itself is this basis scaled by 1/n.
IntMatrix dual_lattice_scaled(const Sublattice &lattice, const Int &n);

// Transversal of Z^r / row-span(rel), one representative per coset,
// together with the coset invariant factors.  Throws if the quotient is
// infinite or larger than `bound`.
struct QuotientTransversal {
    std::vector<IntVec> reps;          // includes 0 first
    std::vector<IntVec> generators;    // lattice vectors generating the quotient
    std::vector<Int> orders;           // order of each generator class (parallel)
};
QuotientTransversal quotient_transversal(const IntMatrix &rel, size_t ambient_rank,
                                         unsigned long bound);

}  // namespace covdual
