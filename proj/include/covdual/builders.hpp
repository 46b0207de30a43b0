#pragma once

#include "covdual/dynkin.hpp"
#include "covdual/root_datum.hpp"

#include <string>

namespace covdual {

// Cartan matrix of a simple type in the canonical node order used by the
// classifier (C_ij = <alpha_i, alpha_j_vee>).
IntMatrix cartan_of_type(char family, size_t rank);

// Simply connected datum in coroot coordinates: alpha_i_vee = e_i,
// alpha_i = row i of the Cartan matrix.
RootDatum build_simply_connected(char family, size_t rank);
// Adjoint datum in root coordinates: alpha_i = e_i, alpha_i_vee = column i.
RootDatum build_adjoint(char family, size_t rank);

// Quotient of the simply connected group by the central subgroup generated
// by the given coweights (rational vectors in coroot coordinates, each with
// denominator `den`).  The result is recoordinatized to a basis of the
// enlarged cocharacter lattice.
RootDatum build_isogeny_quotient(char family, size_t rank,
                                 const std::vector<IntVec> &coweight_numerators, const Int &den);

// Named catalog entries.  `param` is the classical subscript: SL_m / PGL_m /
// GL_m take m, Sp / PGSp / Spin / SO / PGO / HSpin take the matrix size N,
// GSp takes N = 2r.  E/F/G types ignore the parameter.
RootDatum build_catalog(const std::string &family, long param);

// Parse compact names like "SL4", "Spin11", "GSp4", "E7sc", "F4".
RootDatum build_by_name(const std::string &name);
bool is_catalog_name(const std::string &name);

// List of all builder names for a modest size range (used by tests).
std::vector<std::string> catalog_names();

}  // namespace covdual
