#include "covdual/lattice.hpp"

#include <stdexcept>

namespace covdual {

namespace {

// Inverse of a unimodular matrix: row-reduce to the identity and read the
// transform off.  Throws if the input is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix &m) {
    HermiteResult h = hermite_normal_form(m);
    if (h.h != IntMatrix::identity(m.rows()))
        throw std::invalid_argument("unimodular_inverse: matrix is not unimodular");
    return h.u;
}

IntMatrix drop_zero_rows(const IntMatrix &h, size_t rank) {
    IntMatrix b(rank, h.cols());
    for (size_t i = 0; i < rank; ++i)
        for (size_t j = 0; j < h.cols(); ++j) b.at(i, j) = h.at(i, j);
    return b;
}

}  // namespace

Sublattice Sublattice::from_generators(const IntMatrix &generators, size_t ambient_rank) {
    if (generators.rows() > 0 && generators.cols() != ambient_rank)
        throw std::invalid_argument("Sublattice: generator width != ambient rank");
    Sublattice s;
    s.ambient_ = ambient_rank;
    if (generators.rows() == 0) {
        s.basis_ = IntMatrix(0, ambient_rank);
        return s;
    }
    HermiteResult h = hermite_normal_form(generators);
    s.basis_ = drop_zero_rows(h.h, h.rank);
    return s;
}

Sublattice Sublattice::full(size_t ambient_rank) {
    return from_generators(IntMatrix::identity(ambient_rank), ambient_rank);
}

Sublattice Sublattice::zero(size_t ambient_rank) {
    return from_generators(IntMatrix(0, ambient_rank), ambient_rank);
}

std::optional<IntVec> Sublattice::coordinates(const IntVec &v) const {
    if (v.size() != ambient_) throw std::invalid_argument("Sublattice: vector length mismatch");
    IntVec rem = v;
    IntVec coords(rank(), Int(0));
    size_t row = 0;
    for (size_t col = 0; col < ambient_ && row < rank(); ++col) {
        if (basis_.at(row, col) == 0) continue;  // not this row's pivot column
        Int q = rem[col] / basis_.at(row, col);
        if (rem[col] % basis_.at(row, col) != 0) return std::nullopt;
        coords[row] = q;
        for (size_t j = col; j < ambient_; ++j) rem[j] -= q * basis_.at(row, j);
        ++row;
    }
    for (const auto &x : rem)
        if (x != 0) return std::nullopt;
    return coords;
}

bool Sublattice::contains(const IntVec &v) const { return coordinates(v).has_value(); }

bool Sublattice::contains(const Sublattice &other) const {
    for (size_t i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_.row(i))) return false;
    return true;
}

Sublattice Sublattice::saturate() const {
    if (rank() == 0) return *this;
    SmithResult snf = smith_normal_form(basis_);
    IntMatrix vinv = unimodular_inverse(snf.v);
    // row space over Q is spanned by the first `rank` rows of v^-1
    IntMatrix gens(rank(), ambient_);
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < ambient_; ++j) gens.at(i, j) = vinv.at(i, j);
    return from_generators(gens, ambient_);
}

Sublattice Sublattice::sum(const Sublattice &other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Sublattice: ambient mismatch");
    IntMatrix stacked(rank() + other.rank(), ambient_);
    for (size_t i = 0; i < rank(); ++i)
        for (size_t j = 0; j < ambient_; ++j) stacked.at(i, j) = basis_.at(i, j);
    for (size_t i = 0; i < other.rank(); ++i)
        for (size_t j = 0; j < ambient_; ++j) stacked.at(rank() + i, j) = other.basis_.at(i, j);
    return from_generators(stacked, ambient_);
}

Sublattice Sublattice::intersect(const Sublattice &other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Sublattice: ambient mismatch");
    size_t k1 = rank(), k2 = other.rank();
    if (k1 == 0 || k2 == 0) return zero(ambient_);
    IntMatrix a(k1 + k2, ambient_);
    for (size_t i = 0; i < k1; ++i)
        for (size_t j = 0; j < ambient_; ++j) a.at(i, j) = basis_.at(i, j);
    for (size_t i = 0; i < k2; ++i)
        for (size_t j = 0; j < ambient_; ++j) a.at(k1 + i, j) = -other.basis_.at(i, j);
    // integer kernel of z |-> z * a, read off the SNF of a^T
    SmithResult snf = smith_normal_form(a.transpose());
    size_t rk = 0;
    size_t lim = std::min(snf.s.rows(), snf.s.cols());
    for (size_t i = 0; i < lim; ++i)
        if (snf.s.at(i, i) != 0) ++rk;
    size_t kdim = (k1 + k2) - rk;
    if (kdim == 0) return zero(ambient_);
    IntMatrix gens(kdim, ambient_);
    for (size_t t = 0; t < kdim; ++t) {
        IntVec z = snf.v.col(rk + t);  // kernel element of a^T
        for (size_t j = 0; j < ambient_; ++j) {
            Int acc = 0;
            for (size_t i = 0; i < k1; ++i) acc += z[i] * basis_.at(i, j);
            gens.at(t, j) = acc;
        }
    }
    return from_generators(gens, ambient_);
}

Sublattice Sublattice::scaled(const Int &k) const {
    IntMatrix b = basis_;
    for (size_t i = 0; i < b.rows(); ++i) b.scale_row(i, k);
    return from_generators(b, ambient_);
}

Int Sublattice::index_of(const Sublattice &other) const {
    if (other.rank() != rank())
        throw std::invalid_argument("Sublattice: index of lattice of different rank");
    IntMatrix c(other.rank(), rank());
    for (size_t i = 0; i < other.rank(); ++i) {
        auto coords = coordinates(other.basis_.row(i));
        if (!coords) throw std::invalid_argument("Sublattice: index_of needs a sublattice");
        for (size_t j = 0; j < rank(); ++j) c.at(i, j) = (*coords)[j];
    }
    return abs(c.determinant());
}

AbelianInvariants quotient_invariants(const Sublattice &sub, size_t ambient_rank) {
    if (sub.ambient_rank() != ambient_rank)
        throw std::invalid_argument("quotient_invariants: ambient rank mismatch");
    return cokernel_invariants(sub.basis(), ambient_rank);
}

Sublattice congruence_sublattice(const IntMatrix &functionals, const Int &n) {
    if (n <= 0) throw std::invalid_argument("congruence_sublattice: modulus must be positive");
    size_t r = functionals.cols();
    if (functionals.rows() == 0) return Sublattice::full(r);
    SmithResult snf = smith_normal_form(functionals);
    // y = v z solves  f y = 0 mod n  iff  d_i z_i = 0 mod n for each i
    IntVec mult(r, Int(1));
    size_t lim = std::min(functionals.rows(), r);
    for (size_t i = 0; i < lim; ++i) {
        Int d = snf.s.at(i, i);
        mult[i] = n / gcd(n, d);
    }
    IntMatrix basis(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) basis.at(i, j) = mult[i] * snf.v.at(j, i);
    return Sublattice::from_generators(basis, r);
}

IntMatrix dual_lattice_scaled(const Sublattice &lattice, const Int &n) {
    if (!lattice.full_rank())
        throw std::invalid_argument("dual_lattice_scaled: lattice must be full rank");
    size_t r = lattice.ambient_rank();
    const IntMatrix &b = lattice.basis();
    // solve b * x = n * id over Q; columns of x are the scaled dual basis
    std::vector<RatVec> aug(r, RatVec(2 * r, Rat(0)));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = 0; j < r; ++j) aug[i][j] = Rat(b.at(i, j));
        aug[i][r + i] = Rat(n);
    }
    for (size_t col = 0; col < r; ++col) {
        size_t p = col;
        while (p < r && aug[p][col] == 0) ++p;
        if (p == r) throw std::logic_error("dual_lattice_scaled: singular basis");
        std::swap(aug[col], aug[p]);
        Rat piv = aug[col][col];
        for (auto &x : aug[col]) x /= piv;
        for (size_t i = 0; i < r; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (size_t j = col; j < 2 * r; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    IntMatrix dual(r, r);  // rows are dual basis vectors (times n)
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) {
            Rat x = aug[j][r + i];
            x.canonicalize();
            if (x.get_den() != 1)
                throw std::logic_error("dual_lattice_scaled: non-integral scaled dual");
            dual.at(i, j) = x.get_num();
        }
    return Sublattice::from_generators(dual, r).basis();
}

QuotientTransversal quotient_transversal(const IntMatrix &rel, size_t ambient_rank,
                                         unsigned long bound) {
    QuotientTransversal out;
    if (rel.rows() == 0 && ambient_rank > 0)
        throw std::invalid_argument("quotient_transversal: infinite quotient");
    SmithResult snf = smith_normal_form(rel);
    IntMatrix basis = unimodular_inverse(snf.v);  // rows R_i with lattice = sum d_i Z R_i
    std::vector<Int> orders(ambient_rank, Int(0));
    size_t lim = std::min(rel.rows(), ambient_rank);
    for (size_t i = 0; i < lim; ++i) orders[i] = snf.s.at(i, i);
    Int total = 1;
    for (size_t i = 0; i < ambient_rank; ++i) {
        if (orders[i] == 0) throw std::invalid_argument("quotient_transversal: infinite quotient");
        total *= orders[i];
        if (total > Int(bound)) throw std::invalid_argument("quotient_transversal: bound exceeded");
    }
    for (size_t i = 0; i < ambient_rank; ++i) {
        if (orders[i] == 1) continue;
        out.generators.push_back(basis.row(i));
        out.orders.push_back(orders[i]);
    }
    // enumerate all coset representatives, 0 first
    out.reps.push_back(IntVec(ambient_rank, Int(0)));
    for (size_t g = 0; g < out.generators.size(); ++g) {
        size_t prev = out.reps.size();
        for (Int c = 1; c < out.orders[g]; ++c)
            for (size_t k = 0; k < prev; ++k) {
                IntVec v = out.reps[k];
                for (size_t j = 0; j < ambient_rank; ++j) v[j] += c * out.generators[g][j];
                out.reps.push_back(v);
            }
    }
    return out;
}

}  // namespace covdual
