#include <functional>
#include "covdual/isomorphism.hpp"

#include "covdual/dynkin.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace covdual {

std::optional<IntegerSolution> solve_integer(const IntMatrix &a, const IntVec &b) {
    size_t m = a.rows(), n = a.cols();
    SmithResult snf = smith_normal_form(a);
    IntVec c = snf.u.apply(b);
    size_t lim = std::min(m, n);
    IntVec y(n, Int(0));
    size_t rank = 0;
    for (size_t i = 0; i < lim; ++i) {
        const Int &d = snf.s.at(i, i);
        if (d == 0) break;
        ++rank;
        if (c[i] % d != 0) return std::nullopt;
        y[i] = c[i] / d;
    }
    for (size_t i = rank; i < m; ++i)
        if (c[i] != 0) return std::nullopt;
    IntegerSolution sol;
    sol.particular = snf.v.apply(y);
    for (size_t j = rank; j < n; ++j) sol.kernel.push_back(snf.v.col(j));
    return sol;
}

namespace {

// all bijections sigma with Cb[sigma i][sigma j] == Ca[i][j]
void diagram_bijections(const IntMatrix &ca, const IntMatrix &cb,
                        std::vector<std::vector<size_t>> &out) {
    size_t s = ca.rows();
    std::vector<size_t> sigma(s);
    std::vector<bool> used(s, false);
    std::vector<size_t> stackpos;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == s) {
            out.push_back(sigma);
            return;
        }
        for (size_t t = 0; t < s; ++t) {
            if (used[t]) continue;
            bool ok = (cb.at(t, t) == ca.at(i, i));
            for (size_t j = 0; j < i && ok; ++j) {
                if (cb.at(t, sigma[j]) != ca.at(i, j)) ok = false;
                if (cb.at(sigma[j], t) != ca.at(j, i)) ok = false;
            }
            if (!ok) continue;
            sigma[i] = t;
            used[t] = true;
            rec(i + 1);
            used[t] = false;
        }
    };
    rec(0);
}

bool coroots_map_bijectively(const RootDatum &a, const RootDatum &b, const IntMatrix &g) {
    std::set<IntVec> bset(b.coroots.begin(), b.coroots.end());
    std::set<IntVec> image;
    for (const auto &cv : a.coroots) {
        IntVec img = g.apply(cv);
        if (!bset.count(img)) return false;
        image.insert(img);
    }
    return image.size() == b.coroots.size();
}

std::optional<IntMatrix> search_unimodular(const RootDatum &a, const RootDatum &b,
                                           const IntegerSolution &sol, size_t r) {
    auto materialize = [&](const IntVec &coeffs) {
        IntVec flat = sol.particular;
        for (size_t k = 0; k < coeffs.size(); ++k)
            for (size_t t = 0; t < flat.size(); ++t) flat[t] += coeffs[k] * sol.kernel[k][t];
        IntMatrix g(r, r);
        for (size_t i = 0; i < r; ++i)
            for (size_t j = 0; j < r; ++j) g.at(i, j) = flat[i * r + j];
        return g;
    };
    size_t m = sol.kernel.size();
    if (m > 6) m = 6;  // bounded search; larger kernels give up on this sigma
    long box = m <= 2 ? 3 : 2;
    IntVec coeffs(m, Int(0));
    std::function<std::optional<IntMatrix>(size_t)> rec =
        [&](size_t k) -> std::optional<IntMatrix> {
        if (k == m) {
            IntMatrix g = materialize(coeffs);
            if (abs(g.determinant()) != 1) return std::nullopt;
            if (!coroots_map_bijectively(a, b, g)) return std::nullopt;
            return g;
        }
        for (long v = 0; v <= 2 * box; ++v) {
            coeffs[k] = (v % 2 == 0) ? v / 2 : -(v + 1) / 2;  // 0, -1, 1, -2, ...
            if (auto g = rec(k + 1)) return g;
        }
        return std::nullopt;
    };
    return rec(0);
}

}  // namespace

std::optional<IntMatrix> root_datum_isomorphism(const RootDatum &a, const RootDatum &b) {
    if (a.rank > 9 || b.rank > 9)
        throw std::length_error("root_datum_isomorphic: rank exceeds search bound");
    if (a.rank != b.rank || a.roots.size() != b.roots.size() ||
        a.simple.size() != b.simple.size())
        return std::nullopt;
    size_t r = a.rank;
    if (a.simple.empty()) return IntMatrix::identity(r);  // toral data of equal rank

    if (!classify_datum(a).same_shape(classify_datum(b))) return std::nullopt;
    if (!(fundamental_group(a) == fundamental_group(b))) return std::nullopt;
    if (!(center_invariants(a) == center_invariants(b))) return std::nullopt;

    IntMatrix ca = cartan_matrix(a), cb = cartan_matrix(b);
    std::vector<std::vector<size_t>> sigmas;
    diagram_bijections(ca, cb, sigmas);

    size_t s = a.simple.size();
    for (const auto &sigma : sigmas) {
        // rows: g * coroot_a_k = coroot_b_{sigma k}  and  root_b_{sigma k} * g = root_a_k
        IntMatrix sys(2 * s * r, r * r);
        IntVec rhs(2 * s * r, Int(0));
        size_t eq = 0;
        for (size_t k = 0; k < s; ++k) {
            const IntVec &av = a.simple_coroot(k);
            const IntVec &bv = b.simple_coroot(sigma[k]);
            for (size_t i = 0; i < r; ++i, ++eq) {
                for (size_t j = 0; j < r; ++j) sys.at(eq, i * r + j) = av[j];
                rhs[eq] = bv[i];
            }
        }
        for (size_t k = 0; k < s; ++k) {
            const IntVec &ar = a.simple_root(k);
            const IntVec &br = b.simple_root(sigma[k]);
            for (size_t j = 0; j < r; ++j, ++eq) {
                for (size_t i = 0; i < r; ++i) sys.at(eq, i * r + j) = br[i];
                rhs[eq] = ar[j];
            }
        }
        auto sol = solve_integer(sys, rhs);
        if (!sol) continue;
        if (auto g = search_unimodular(a, b, *sol, r)) return g;
    }
    return std::nullopt;
}

bool root_datum_isomorphic(const RootDatum &a, const RootDatum &b) {
    return root_datum_isomorphism(a, b).has_value();
}

}  // namespace covdual
