#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace covdual {

using Int = mpz_class;
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

// Dense integer matrix with arbitrary-precision entries, row-major.
// No floating point enters any computation in this module.
class IntMatrix {
  public:
    IntMatrix() : rows_(0), cols_(0) {}
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(size_t n);
    static IntMatrix diagonal(const IntVec &d);
    static IntMatrix from_rows(const std::vector<IntVec> &rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    Int &at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Int &at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    IntVec row(size_t i) const;
    IntVec col(size_t j) const;
    void swap_rows(size_t i, size_t j);
    void swap_cols(size_t i, size_t j);
    void scale_row(size_t i, const Int &s);

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix &rhs) const;
    IntMatrix operator+(const IntMatrix &rhs) const;
    IntMatrix operator-(const IntMatrix &rhs) const;
    bool operator==(const IntMatrix &rhs) const = default;

    IntVec apply(const IntVec &v) const;        // matrix * column vector
    IntVec apply_left(const IntVec &v) const;   // row vector * matrix
    RatVec apply(const RatVec &v) const;

    Int determinant() const;  // exact, fraction-free Bareiss
    bool is_zero() const;
    std::string to_string() const;

  private:
    size_t rows_, cols_;
    std::vector<Int> data_;
};

struct SmithResult {
    IntMatrix s;  // diagonal, d1 | d2 | ..., nonnegative
    IntMatrix u;  // unimodular, u * m * v == s
    IntMatrix v;  // unimodular
};

// Smith normal form with deterministic pivoting: smallest nonzero
// absolute value, ties broken by (row, col) position.
SmithResult smith_normal_form(const IntMatrix &m);

// Row-style Hermite normal form: returns (h, u) with h == u * m,
// u unimodular, h in canonical row echelon form (positive pivots,
// entries above a pivot reduced into [0, pivot)).  Zero rows sink
// to the bottom.
struct HermiteResult {
    IntMatrix h;
    IntMatrix u;
    size_t rank;
};
HermiteResult hermite_normal_form(const IntMatrix &m);

// Invariant factors d1 | d2 | ... (each > 1) plus free rank of the
// cokernel Z^cols / row-span(m).
struct AbelianInvariants {
    std::vector<Int> factors;
    size_t free_rank = 0;

    bool operator==(const AbelianInvariants &rhs) const = default;
    bool trivial() const { return factors.empty() && free_rank == 0; }
    Int torsion_order() const;
    std::string to_string() const;
};
AbelianInvariants cokernel_invariants(const IntMatrix &m, size_t ambient_rank);

Int gcd(const Int &a, const Int &b);
Int lcm(const Int &a, const Int &b);

}  // namespace covdual
