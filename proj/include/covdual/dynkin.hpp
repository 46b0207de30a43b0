#pragma once

#include "covdual/root_datum.hpp"

#include <string>
#include <vector>

namespace covdual {

// One connected component of a Dynkin diagram.  `nodes` lists simple-root
// positions in canonical order: A/B/C along the path (B: short root last,
// C: long root last), D long arm first then the two fork nodes, E with the
// branch node fourth (Bourbaki), F4 long-to-short, G2 short first.
struct DynkinComponent {
    char family = 'A';
    size_t rank = 0;
    std::vector<size_t> nodes;

    std::string to_string() const { return std::string(1, family) + std::to_string(rank); }
};

struct DynkinType {
    std::vector<DynkinComponent> components;  // sorted by (family, rank, nodes)
    size_t torus_rank = 0;

    std::string to_string() const;
    bool same_shape(const DynkinType &rhs) const;  // families+ranks+torus equal
};

// Classification of a generalized Cartan matrix of finite type.
// Throws std::domain_error when the matrix is not finite type.
// B2 is emitted for the rank-2 double-edge diagram (never C2), and the
// rank-3 D diagram is emitted as A3.
DynkinType classify_dynkin(const IntMatrix &cartan);

// Classification of the datum's simple system; torus_rank is the corank.
DynkinType classify_datum(const RootDatum &rd);

// Positive integer symmetrizer of a finite-type Cartan matrix: the unique
// d with d_i C_ij = d_j C_ji, min d_i = 1 per component.  d_i is the squared
// coroot-length ratio, so d_i = 1 exactly at the short coroots.
IntVec cartan_symmetrizer(const IntMatrix &cartan);

}  // namespace covdual
