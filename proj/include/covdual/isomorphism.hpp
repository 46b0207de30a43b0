#pragma once

#include "covdual/root_datum.hpp"

#include <optional>

namespace covdual {

// Integer solutions of a * x = b: a particular solution plus a basis of the
// integer kernel, or nullopt when no integral solution exists.
struct IntegerSolution {
    IntVec particular;
    std::vector<IntVec> kernel;
};
std::optional<IntegerSolution> solve_integer(const IntMatrix &a, const IntVec &b);

// Bounded decision procedure for root-datum isomorphism: enumerate diagram
// bijections, solve the induced integer linear system for the lattice map,
// and search the solution lattice for a unimodular point.  Ranks above 9
// are rejected (std::length_error).
bool root_datum_isomorphic(const RootDatum &a, const RootDatum &b);

// The witnessing lattice map g: Y_a -> Y_b (acting y |-> g y) when one exists.
std::optional<IntMatrix> root_datum_isomorphism(const RootDatum &a, const RootDatum &b);

}  // namespace covdual
