#include "covdual/root_datum.hpp"

#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace covdual {

Int pairing(const IntVec &x, const IntVec &y) {
    if (x.size() != y.size()) throw std::invalid_argument("pairing: dimension mismatch");
    Int s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

Rat pairing(const RatVec &x, const IntVec &y) {
    if (x.size() != y.size()) throw std::invalid_argument("pairing: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < x.size(); ++i) s += x[i] * Rat(y[i]);
    s.canonicalize();
    return s;
}

IntVec reflect_character(const IntVec &x, const IntVec &root, const IntVec &coroot) {
    Int c = pairing(x, coroot);
    IntVec out = x;
    for (size_t i = 0; i < x.size(); ++i) out[i] -= c * root[i];
    return out;
}

IntVec reflect_cocharacter(const IntVec &y, const IntVec &root, const IntVec &coroot) {
    Int c = pairing(root, y);
    IntVec out = y;
    for (size_t i = 0; i < y.size(); ++i) out[i] -= c * coroot[i];
    return out;
}

namespace {

IntVec negate(const IntVec &v) {
    IntVec out = v;
    for (auto &x : out) x = -x;
    return out;
}

std::string idx(size_t i) { return std::to_string(i); }

long find_root(const std::vector<IntVec> &roots, const IntVec &v) {
    for (size_t i = 0; i < roots.size(); ++i)
        if (roots[i] == v) return static_cast<long>(i);
    return -1;
}

// Solve x * m = rhs over Q (m given by rows); nullopt if inconsistent.
std::optional<RatVec> solve_left_rational(const IntMatrix &m, const RatVec &rhs) {
    size_t k = m.rows(), n = m.cols();
    std::vector<RatVec> aug(n, RatVec(k + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) aug[i][j] = Rat(m.at(j, i));
        aug[i][k] = rhs[i];
    }
    std::vector<long> pivot_of_col(k, -1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < n; ++col) {
        size_t p = row;
        while (p < n && aug[p][col] == 0) ++p;
        if (p == n) continue;
        std::swap(aug[row], aug[p]);
        Rat piv = aug[row][col];
        for (auto &x : aug[row]) x /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == row || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    for (size_t i = row; i < n; ++i)
        if (aug[i][k] != 0) return std::nullopt;
    RatVec x(k, Rat(0));
    for (size_t col = 0; col < k; ++col)
        if (pivot_of_col[col] >= 0) x[col] = aug[static_cast<size_t>(pivot_of_col[col])][k];
    for (auto &v : x) v.canonicalize();
    return x;
}

}  // namespace

std::vector<std::string> validate(const RootDatum &rd) {
    std::vector<std::string> bad;
    if (rd.roots.size() != rd.coroots.size()) {
        bad.push_back("root-coroot-count-mismatch");
        return bad;
    }
    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (rd.roots[i].size() != rd.rank || rd.coroots[i].size() != rd.rank) {
            bad.push_back("vector-length-mismatch:" + idx(i));
            return bad;
        }
    for (size_t s : rd.simple)
        if (s >= rd.roots.size()) {
            bad.push_back("simple-index-out-of-range:" + idx(s));
            return bad;
        }

    for (size_t i = 0; i < rd.roots.size(); ++i)
        if (pairing(rd.roots[i], rd.coroots[i]) != 2) bad.push_back("pairing-not-2:" + idx(i));

    // +- pairs, and +-alpha are the only multiples of alpha present
    for (size_t i = 0; i < rd.roots.size(); ++i) {
        if (find_root(rd.roots, negate(rd.roots[i])) < 0) bad.push_back("missing-negative:" + idx(i));
        for (size_t j = i + 1; j < rd.roots.size(); ++j) {
            const IntVec &a = rd.roots[i], &b = rd.roots[j];
            bool proportional = true, have = false;
            Rat ratio;
            for (size_t k = 0; k < rd.rank && proportional; ++k) {
                if (a[k] == 0 && b[k] == 0) continue;
                if (a[k] == 0 || b[k] == 0) {
                    proportional = false;
                    break;
                }
                Rat q(b[k], a[k]);
                q.canonicalize();
                if (!have) {
                    ratio = q;
                    have = true;
                } else if (q != ratio)
                    proportional = false;
            }
            if (proportional && have && ratio != -1) bad.push_back("not-reduced:" + idx(i) + "," + idx(j));
        }
    }

    // simple reflections permute the root and coroot sets compatibly
    for (size_t s : rd.simple) {
        for (size_t j = 0; j < rd.roots.size(); ++j) {
            IntVec rx = reflect_character(rd.roots[j], rd.roots[s], rd.coroots[s]);
            long k = find_root(rd.roots, rx);
            if (k < 0) {
                bad.push_back("reflection-not-closed:" + idx(s) + "," + idx(j));
                continue;
            }
            IntVec ry = reflect_cocharacter(rd.coroots[j], rd.roots[s], rd.coroots[s]);
            if (rd.coroots[static_cast<size_t>(k)] != ry)
                bad.push_back("reflection-incompatible:" + idx(s) + "," + idx(j));
        }
    }

    // every root is a one-signed integer combination of the simple roots
    if (!rd.simple.empty()) {
        IntMatrix smat(rd.simple.size(), rd.rank);
        for (size_t i = 0; i < rd.simple.size(); ++i)
            for (size_t j = 0; j < rd.rank; ++j) smat.at(i, j) = rd.simple_root(i)[j];
        for (size_t j = 0; j < rd.roots.size(); ++j) {
            RatVec rhs(rd.rank);
            for (size_t t = 0; t < rd.rank; ++t) rhs[t] = Rat(rd.roots[j][t]);
            auto coeffs = solve_left_rational(smat, rhs);
            if (!coeffs) {
                bad.push_back("root-outside-simple-span:" + idx(j));
                continue;
            }
            int pos = 0, neg = 0;
            bool integral = true;
            for (auto &c : *coeffs) {
                if (c.get_den() != 1) integral = false;
                if (c > 0) ++pos;
                if (c < 0) ++neg;
            }
            if (!integral)
                bad.push_back("root-not-integral-combination:" + idx(j));
            else if (pos && neg)
                bad.push_back("root-not-one-signed:" + idx(j));
        }
    }

    // galois action, when present: lattice automorphisms permuting coroots,
    // preserving the simple set
    std::set<IntVec> simple_coroot_set;
    for (size_t s : rd.simple) simple_coroot_set.insert(rd.coroots[s]);
    for (size_t g = 0; g < rd.galois_action.size(); ++g) {
        const IntMatrix &m = rd.galois_action[g];
        if (m.rows() != rd.rank || m.cols() != rd.rank || abs(m.determinant()) != 1) {
            bad.push_back("galois-not-automorphism:" + idx(g));
            continue;
        }
        for (size_t j = 0; j < rd.coroots.size(); ++j) {
            IntVec img = m.apply(rd.coroots[j]);
            long k = -1;
            for (size_t t = 0; t < rd.coroots.size(); ++t)
                if (rd.coroots[t] == img) {
                    k = static_cast<long>(t);
                    break;
                }
            if (k < 0) {
                bad.push_back("galois-not-root-permutation:" + idx(g) + "," + idx(j));
                continue;
            }
            if (simple_coroot_set.count(rd.coroots[j]) && !simple_coroot_set.count(img))
                bad.push_back("galois-moves-simple-set:" + idx(g) + "," + idx(j));
        }
    }
    return bad;
}

void validate_or_throw(const RootDatum &rd) {
    auto bad = validate(rd);
    if (!bad.empty()) {
        std::ostringstream os;
        os << "invalid root datum:";
        for (const auto &b : bad) os << " " << b;
        throw std::invalid_argument(os.str());
    }
}

WeylClosure weyl_closure(const std::vector<IntVec> &simple_roots,
                         const std::vector<IntVec> &simple_coroots, size_t max_roots) {
    if (simple_roots.size() != simple_coroots.size())
        throw std::invalid_argument("weyl_closure: mismatched simple system");
    std::map<IntVec, IntVec> seen;
    std::vector<IntVec> queue;
    for (size_t i = 0; i < simple_roots.size(); ++i) {
        seen[simple_roots[i]] = simple_coroots[i];
        queue.push_back(simple_roots[i]);
    }
    while (!queue.empty()) {
        IntVec r = queue.back();
        queue.pop_back();
        IntVec rv = seen.at(r);
        IntVec neg = negate(r);
        if (!seen.count(neg)) {
            seen[neg] = negate(rv);
            queue.push_back(neg);
        }
        for (size_t i = 0; i < simple_roots.size(); ++i) {
            IntVec nr = reflect_character(r, simple_roots[i], simple_coroots[i]);
            IntVec nv = reflect_cocharacter(rv, simple_roots[i], simple_coroots[i]);
            auto it = seen.find(nr);
            if (it == seen.end()) {
                seen[nr] = nv;
                queue.push_back(nr);
                if (seen.size() > max_roots)
                    throw std::domain_error("weyl_closure: not finite type (bound exceeded)");
            } else if (it->second != nv)
                throw std::domain_error("weyl_closure: inconsistent coroot assignment");
        }
    }
    WeylClosure out;
    for (auto &kv : seen) {
        out.roots.push_back(kv.first);
        out.coroots.push_back(kv.second);
    }
    return out;
}

IntMatrix cartan_matrix(const RootDatum &rd) {
    size_t l = rd.simple.size();
    IntMatrix c(l, l);
    for (size_t i = 0; i < l; ++i)
        for (size_t j = 0; j < l; ++j) c.at(i, j) = pairing(rd.simple_root(i), rd.simple_coroot(j));
    return c;
}

Sublattice coroot_span(const RootDatum &rd) {
    IntMatrix m(rd.coroots.size(), rd.rank);
    for (size_t i = 0; i < rd.coroots.size(); ++i)
        for (size_t j = 0; j < rd.rank; ++j) m.at(i, j) = rd.coroots[i][j];
    return Sublattice::from_generators(m, rd.rank);
}

Sublattice root_span(const RootDatum &rd) {
    IntMatrix m(rd.roots.size(), rd.rank);
    for (size_t i = 0; i < rd.roots.size(); ++i)
        for (size_t j = 0; j < rd.rank; ++j) m.at(i, j) = rd.roots[i][j];
    return Sublattice::from_generators(m, rd.rank);
}

AbelianInvariants fundamental_group(const RootDatum &rd) {
    return quotient_invariants(coroot_span(rd), rd.rank);
}

AbelianInvariants center_invariants(const RootDatum &rd) {
    return quotient_invariants(root_span(rd), rd.rank);
}

RootDatum datum_from_simple_system(size_t rank, const std::vector<IntVec> &simple_roots,
                                   const std::vector<IntVec> &simple_coroots) {
    WeylClosure cl = weyl_closure(simple_roots, simple_coroots);
    RootDatum rd;
    rd.rank = rank;
    rd.roots = cl.roots;
    rd.coroots = cl.coroots;
    for (const auto &s : simple_roots) {
        long k = find_root(rd.roots, s);
        if (k < 0) throw std::logic_error("datum_from_simple_system: lost a simple root");
        rd.simple.push_back(static_cast<size_t>(k));
    }
    return rd;
}

RootDatum levi_subdatum(const RootDatum &rd, const std::vector<size_t> &subset) {
    for (size_t p : subset)
        if (p >= rd.simple.size()) throw std::invalid_argument("levi_subdatum: invalid simple index");
    if (subset.empty()) {
        RootDatum toral;
        toral.rank = rd.rank;
        toral.galois_action = rd.galois_action;
        return toral;
    }
    std::vector<IntVec> sroots, scoroots;
    for (size_t p : subset) {
        sroots.push_back(rd.simple_root(p));
        scoroots.push_back(rd.simple_coroot(p));
    }
    RootDatum levi = datum_from_simple_system(rd.rank, sroots, scoroots);
    levi.galois_action = rd.galois_action;
    return levi;
}

RootDatum dualize_datum(const RootDatum &rd) {
    RootDatum d;
    d.rank = rd.rank;
    d.roots = rd.coroots;
    d.coroots = rd.roots;
    d.simple = rd.simple;
    for (const auto &g : rd.galois_action) d.galois_action.push_back(g.transpose());
    return d;
}

RootDatum datum_product(const RootDatum &a, const RootDatum &b) {
    RootDatum p;
    p.rank = a.rank + b.rank;
    auto pad_a = [&](const IntVec &v) {
        IntVec w(p.rank, Int(0));
        for (size_t i = 0; i < a.rank; ++i) w[i] = v[i];
        return w;
    };
    auto pad_b = [&](const IntVec &v) {
        IntVec w(p.rank, Int(0));
        for (size_t i = 0; i < b.rank; ++i) w[a.rank + i] = v[i];
        return w;
    };
    for (size_t i = 0; i < a.roots.size(); ++i) {
        p.roots.push_back(pad_a(a.roots[i]));
        p.coroots.push_back(pad_a(a.coroots[i]));
    }
    for (size_t i = 0; i < b.roots.size(); ++i) {
        p.roots.push_back(pad_b(b.roots[i]));
        p.coroots.push_back(pad_b(b.coroots[i]));
    }
    for (size_t s : a.simple) p.simple.push_back(s);
    for (size_t s : b.simple) p.simple.push_back(a.roots.size() + s);
    return p;
}

RootDatum recoordinatize(const IntMatrix &basis, const Int &den,
                         const std::vector<IntVec> &coroots,
                         const std::vector<IntVec> &root_numerators,
                         const std::vector<Int> &root_denominators,
                         const std::vector<size_t> &simple) {
    size_t r = basis.rows();
    if (basis.cols() != r) throw std::invalid_argument("recoordinatize: basis must be square");
    if (root_numerators.size() != root_denominators.size() ||
        root_numerators.size() != coroots.size())
        throw std::invalid_argument("recoordinatize: list length mismatch");

    RootDatum out;
    out.rank = r;
    for (const auto &y : coroots) {
        RatVec rhs(r);
        for (size_t j = 0; j < r; ++j) rhs[j] = Rat(den * y[j]);
        auto z = solve_left_rational(basis, rhs);
        if (!z) throw std::invalid_argument("recoordinatize: coroot outside span");
        IntVec zi(r);
        for (size_t i = 0; i < r; ++i) {
            if ((*z)[i].get_den() != 1)
                throw std::invalid_argument("recoordinatize: coroot outside new lattice");
            zi[i] = (*z)[i].get_num();
        }
        out.coroots.push_back(zi);
    }
    for (size_t t = 0; t < root_numerators.size(); ++t) {
        IntVec x(r);
        // <num/den_root, basis_row/den> = <num, basis_row> / (den_root * den)
        Int d = den * root_denominators[t];
        for (size_t j = 0; j < r; ++j) {
            Int full = pairing(root_numerators[t], basis.row(j));
            if (full % d != 0)
                throw std::invalid_argument("recoordinatize: root does not pair integrally");
            x[j] = full / d;
        }
        out.roots.push_back(x);
    }
    out.simple = simple;
    return out;
}

}  // namespace covdual
