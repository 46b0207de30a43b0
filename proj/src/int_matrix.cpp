#include "covdual/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace covdual {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto &r : init) {
        if (r.size() != cols_)
            throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long x : r) data_.emplace_back(x);
    }
}

IntMatrix IntMatrix::identity(size_t n) {
    IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::diagonal(const IntVec &d) {
    IntMatrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVec> &rows) {
    if (rows.empty()) return IntMatrix(0, 0);
    IntMatrix m(rows.size(), rows[0].size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_)
            throw std::invalid_argument("IntMatrix: ragged rows");
        for (size_t j = 0; j < m.cols_; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

IntVec IntMatrix::row(size_t i) const {
    IntVec r(cols_);
    for (size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
}

IntVec IntMatrix::col(size_t j) const {
    IntVec c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
}

void IntMatrix::swap_rows(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

void IntMatrix::swap_cols(size_t i, size_t j) {
    if (i == j) return;
    for (size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
}

void IntMatrix::scale_row(size_t i, const Int &s) {
    for (size_t k = 0; k < cols_; ++k) at(i, k) *= s;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix &rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in *");
    IntMatrix p(rows_, rhs.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Int &a = at(i, k);
            if (a == 0) continue;
            for (size_t j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
        }
    return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in +");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] + rhs.data_[i];
    return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix &rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("IntMatrix: dimension mismatch in -");
    IntMatrix s(rows_, cols_);
    for (size_t i = 0; i < data_.size(); ++i) s.data_[i] = data_[i] - rhs.data_[i];
    return s;
}

IntVec IntMatrix::apply(const IntVec &v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    IntVec out(rows_, Int(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
    return out;
}

IntVec IntMatrix::apply_left(const IntVec &v) const {
    if (v.size() != rows_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    IntVec out(cols_, Int(0));
    for (size_t j = 0; j < cols_; ++j)
        for (size_t i = 0; i < rows_; ++i) out[j] += v[i] * at(i, j);
    return out;
}

RatVec IntMatrix::apply(const RatVec &v) const {
    if (v.size() != cols_) throw std::invalid_argument("IntMatrix: vector length mismatch");
    RatVec out(rows_, Rat(0));
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) out[i] += Rat(at(i, j)) * v[j];
        out[i].canonicalize();
    }
    return out;
}

Int IntMatrix::determinant() const {
    if (rows_ != cols_) throw std::invalid_argument("IntMatrix: determinant of non-square");
    size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a(*this);
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == 0) {
            size_t p = k + 1;
            while (p < n && a.at(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Int t = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
                mpz_divexact(a.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a.at(k, k);
    }
    return sign * a.at(n - 1, n - 1);
}

bool IntMatrix::is_zero() const {
    for (const auto &x : data_)
        if (x != 0) return false;
    return true;
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows_; ++i) {
        os << (i ? " [" : "[");
        for (size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j).get_str();
        os << "]";
    }
    os << "]";
    return os.str();
}

Int gcd(const Int &a, const Int &b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

Int lcm(const Int &a, const Int &b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

namespace {

// Pivot choice shared by SNF: smallest nonzero |entry| in the trailing
// block, ties by row then column, so outputs are reproducible.
bool find_pivot(const IntMatrix &a, size_t from, size_t &pi, size_t &pj) {
    bool found = false;
    Int best;
    for (size_t i = from; i < a.rows(); ++i)
        for (size_t j = from; j < a.cols(); ++j) {
            const Int &x = a.at(i, j);
            if (x == 0) continue;
            Int ax = abs(x);
            if (!found || ax < best) {
                found = true;
                best = ax;
                pi = i;
                pj = j;
            }
        }
    return found;
}

void add_row_multiple(IntMatrix &a, size_t dst, size_t src, const Int &q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.cols(); ++k) a.at(dst, k) += q * a.at(src, k);
}

void add_col_multiple(IntMatrix &a, size_t dst, size_t src, const Int &q) {
    if (q == 0) return;
    for (size_t k = 0; k < a.rows(); ++k) a.at(k, dst) += q * a.at(k, src);
}

}  // namespace

SmithResult smith_normal_form(const IntMatrix &m) {
    size_t r = m.rows(), c = m.cols();
    SmithResult out{m, IntMatrix::identity(r), IntMatrix::identity(c)};
    IntMatrix &a = out.s, &u = out.u, &v = out.v;

    size_t t = 0;
    size_t lim = std::min(r, c);
    while (t < lim) {
        size_t pi = t, pj = t;
        if (!find_pivot(a, t, pi, pj)) break;
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        bool clean = true;
        for (size_t i = t + 1; i < r; ++i) {
            if (a.at(i, t) == 0) continue;
            Int q = a.at(i, t) / a.at(t, t);  // truncated division keeps remainders small
            add_row_multiple(a, i, t, -q);
            add_row_multiple(u, i, t, -q);
            if (a.at(i, t) != 0) clean = false;
        }
        for (size_t j = t + 1; j < c; ++j) {
            if (a.at(t, j) == 0) continue;
            Int q = a.at(t, j) / a.at(t, t);
            add_col_multiple(a, j, t, -q);
            add_col_multiple(v, j, t, -q);
            if (a.at(t, j) != 0) clean = false;
        }
        if (!clean) continue;  // pivot shrank; repeat this index

        // Enforce divisibility: pivot must divide the whole trailing block.
        bool retry = false;
        for (size_t i = t + 1; i < r && !retry; ++i)
            for (size_t j = t + 1; j < c && !retry; ++j)
                if (a.at(i, j) % a.at(t, t) != 0) {
                    add_row_multiple(a, t, i, Int(1));
                    add_row_multiple(u, t, i, Int(1));
                    retry = true;
                }
        if (retry) continue;

        if (a.at(t, t) < 0) {
            a.scale_row(t, Int(-1));
            u.scale_row(t, Int(-1));
        }
        ++t;
    }
    return out;
}

HermiteResult hermite_normal_form(const IntMatrix &m) {
    size_t r = m.rows(), c = m.cols();
    HermiteResult out{m, IntMatrix::identity(r), 0};
    IntMatrix &a = out.h, &u = out.u;

    size_t row = 0;
    for (size_t col = 0; col < c && row < r; ++col) {
        // gcd out the column below `row`
        while (true) {
            size_t p = r;
            Int best;
            for (size_t i = row; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                Int ax = abs(a.at(i, col));
                if (p == r || ax < best) {
                    p = i;
                    best = ax;
                }
            }
            if (p == r) break;  // column clear
            a.swap_rows(row, p);
            u.swap_rows(row, p);
            bool done = true;
            for (size_t i = row + 1; i < r; ++i) {
                if (a.at(i, col) == 0) continue;
                Int q = a.at(i, col) / a.at(row, col);
                add_row_multiple(a, i, row, -q);
                add_row_multiple(u, i, row, -q);
                if (a.at(i, col) != 0) done = false;
            }
            if (done) break;
        }
        if (a.at(row, col) == 0) continue;
        if (a.at(row, col) < 0) {
            a.scale_row(row, Int(-1));
            u.scale_row(row, Int(-1));
        }
        // reduce entries above the pivot into [0, pivot)
        for (size_t i = 0; i < row; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), a.at(i, col).get_mpz_t(), a.at(row, col).get_mpz_t());
            add_row_multiple(a, i, row, -q);
            add_row_multiple(u, i, row, -q);
        }
        ++row;
    }
    out.rank = row;
    return out;
}

Int AbelianInvariants::torsion_order() const {
    Int o = 1;
    for (const auto &f : factors) o *= f;
    return o;
}

std::string AbelianInvariants::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "," : "") << factors[i].get_str();
    os << ")";
    if (free_rank) os << "+Z^" << free_rank;
    return os.str();
}

AbelianInvariants cokernel_invariants(const IntMatrix &m, size_t ambient_rank) {
    if (m.rows() > 0 && m.cols() != ambient_rank)
        throw std::invalid_argument("cokernel_invariants: ambient rank mismatch");
    AbelianInvariants inv;
    if (m.rows() == 0) {
        inv.free_rank = ambient_rank;
        return inv;
    }
    SmithResult snf = smith_normal_form(m);
    size_t rank = 0;
    for (size_t i = 0; i < std::min(m.rows(), m.cols()); ++i) {
        const Int &d = snf.s.at(i, i);
        if (d == 0) break;
        ++rank;
        if (d > 1) inv.factors.push_back(d);
    }
    inv.free_rank = ambient_rank - rank;
    return inv;
}

}  // namespace covdual
