#pragma once

#include "covdual/root_datum.hpp"

#include <string>

namespace covdual {

// Integer-valued quadratic form on Y, stored through its polarization:
// Q(y) = B(y,y)/2 and B(y1,y2) = Q(y1+y2) - Q(y1) - Q(y2), so `gram` is
// symmetric with even diagonal.
struct QuadraticForm {
    IntMatrix gram;

    size_t rank() const { return gram.rows(); }
    Int value(const IntVec &y) const;                         // Q(y)
    Int bilinear(const IntVec &y1, const IntVec &y2) const;   // B(y1, y2)
};

// Symmetry, even diagonal, Weyl invariance, Galois invariance.
std::vector<std::string> validate_form(const QuadraticForm &q, const RootDatum &rd);

struct Cover {
    RootDatum rd;
    QuadraticForm q;
    Int n = 1;
};

// Validates datum, form, and degree; throws on violation.
Cover make_cover(RootDatum rd, QuadraticForm q, Int n);

// beta_Q(y1, y2) = B(y1, y2) / n
Rat beta(const Cover &c, const IntVec &y1, const IntVec &y2);

// n_phi = n / gcd(n, Q(phi_vee)),  m_phi = Q(phi_vee) / gcd(n, Q(phi_vee))
struct NmConstants {
    Int n_phi;
    Int m_phi;
};
NmConstants nm_constants(const Cover &c, size_t root_index);

// delta_Q(y) = B(y, .) / n as a rational covector
RatVec delta_q(const Cover &c, const IntVec &y);

// The unique Weyl-invariant form with value t on the short coroot vectors
// (the coroots of long roots); coroots of short roots get 2t or 3t.  The
// datum must be semisimple and the form integral on its lattice.
QuadraticForm qt_form(const RootDatum &rd, const Int &t);
// GL_r family: Q(1,-1,0,...) = q and Q(1,0,...) = 1 + c.
QuadraticForm glr_form(size_t r, const Int &q, const Int &c);
// GSp_{2r} family on e_0, ..., e_r: Q(e_0) = kappa, Q(e_i) = nu.
QuadraticForm gsp_form(size_t r, const Int &kappa, const Int &nu);
QuadraticForm zero_form(size_t rank);

// True when Q takes only even values on Y.
bool form_even_valued(const QuadraticForm &q);

// Replace Q by (n+1) Q when n is odd and Q takes an odd value; identity
// otherwise.  Idempotent, and the dual datum is unchanged mod n.
Cover rectify_odd(const Cover &c);

// Congruence test behind the mod-n invariance: Q(e_i) and the off-diagonal
// B entries agree mod n.  Requires equal datum and degree.
bool mod_n_equal(const Cover &c1, const Cover &c2);

}  // namespace covdual
