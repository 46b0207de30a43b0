#include "covdual/builders.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace covdual {

namespace {

void link(IntMatrix &c, size_t i, size_t j, long cij = -1, long cji = -1) {
    c.at(i, j) = cij;
    c.at(j, i) = cji;
}

IntVec unit(size_t n, size_t i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
}

// fundamental coweight: column j of C^{-1}, as numerator / den = det-free
// rational solve of C * w = e_j
RatVec fundamental_coweight(const IntMatrix &cartan, size_t j) {
    size_t n = cartan.rows();
    std::vector<RatVec> aug(n, RatVec(n + 1, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t k = 0; k < n; ++k) aug[i][k] = Rat(cartan.at(i, k));
        aug[i][n] = (i == j) ? Rat(1) : Rat(0);
    }
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && aug[p][col] == 0) ++p;
        std::swap(aug[col], aug[p]);
        Rat piv = aug[col][col];
        for (auto &x : aug[col]) x /= piv;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col] == 0) continue;
            Rat f = aug[i][col];
            for (size_t k = col; k <= n; ++k) aug[i][k] -= f * aug[col][k];
        }
    }
    RatVec w(n);
    for (size_t i = 0; i < n; ++i) {
        w[i] = aug[i][n];
        w[i].canonicalize();
    }
    return w;
}

}  // namespace

IntMatrix cartan_of_type(char family, size_t rank) {
    size_t n = rank;
    auto path = [&](IntMatrix &c) {
        for (size_t i = 0; i + 1 < n; ++i) link(c, i, i + 1);
    };
    IntMatrix c = IntMatrix::identity(n);
    for (size_t i = 0; i < n; ++i) c.at(i, i) = 2;
    switch (family) {
        case 'A':
            if (n < 1) throw std::invalid_argument("A rank >= 1");
            path(c);
            return c;
        case 'B':
            if (n < 2) throw std::invalid_argument("B rank >= 2");
            path(c);
            link(c, n - 2, n - 1, -2, -1);  // <alpha_{l-1}, alpha_l_vee> = -2, alpha_l short
            return c;
        case 'C':
            if (n < 2) throw std::invalid_argument("C rank >= 2");
            path(c);
            link(c, n - 2, n - 1, -1, -2);  // alpha_l long
            return c;
        case 'D':
            if (n < 3) throw std::invalid_argument("D rank >= 3");
            for (size_t i = 0; i + 1 < n - 1; ++i) link(c, i, i + 1);
            link(c, n - 3, n - 1);
            return c;
        case 'E': {
            if (n < 6 || n > 8) throw std::invalid_argument("E rank in {6,7,8}");
            // Bourbaki: chain 1-3-4-5-...-n, node 2 attached to 4
            link(c, 0, 2);
            link(c, 1, 3);
            for (size_t i = 2; i + 1 < n; ++i) link(c, i, i + 1);
            return c;
        }
        case 'F':
            if (n != 4) throw std::invalid_argument("F rank = 4");
            path(c);
            link(c, 1, 2, -2, -1);  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
            return c;
        case 'G':
            if (n != 2) throw std::invalid_argument("G rank = 2");
            link(c, 0, 1, -1, -3);  // alpha_1 short
            return c;
        default:
            throw std::invalid_argument("unknown family");
    }
}

RootDatum build_simply_connected(char family, size_t rank) {
    IntMatrix c = cartan_of_type(family, rank);
    std::vector<IntVec> sroots, scoroots;
    for (size_t i = 0; i < rank; ++i) {
        sroots.push_back(c.row(i));
        scoroots.push_back(unit(rank, i));
    }
    return datum_from_simple_system(rank, sroots, scoroots);
}

RootDatum build_adjoint(char family, size_t rank) {
    IntMatrix c = cartan_of_type(family, rank);
    std::vector<IntVec> sroots, scoroots;
    for (size_t i = 0; i < rank; ++i) {
        sroots.push_back(unit(rank, i));
        scoroots.push_back(c.col(i));
    }
    return datum_from_simple_system(rank, sroots, scoroots);
}

RootDatum build_isogeny_quotient(char family, size_t rank,
                                 const std::vector<IntVec> &coweight_numerators, const Int &den) {
    RootDatum sc = build_simply_connected(family, rank);
    // new cocharacter lattice Y' = Z^rank + sum Z * (w / den)
    IntMatrix gens(rank + coweight_numerators.size(), rank);
    for (size_t i = 0; i < rank; ++i) gens.at(i, i) = den;
    for (size_t k = 0; k < coweight_numerators.size(); ++k)
        for (size_t j = 0; j < rank; ++j) gens.at(rank + k, j) = coweight_numerators[k][j];
    Sublattice scaled = Sublattice::from_generators(gens, rank);  // den * Y'
    std::vector<Int> ones(sc.roots.size(), Int(1));
    RootDatum out =
        recoordinatize(scaled.basis(), den, sc.coroots, sc.roots, ones, sc.simple);
    validate_or_throw(out);
    return out;
}

namespace {

RootDatum build_gl(size_t r) {
    if (r < 1) throw std::invalid_argument("GL rank >= 1");
    RootDatum rd;
    rd.rank = r;
    if (r == 1) return rd;
    std::vector<IntVec> sroots, scoroots;
    for (size_t i = 0; i + 1 < r; ++i) {
        IntVec v(r, Int(0));
        v[i] = 1;
        v[i + 1] = -1;
        sroots.push_back(v);
        scoroots.push_back(v);
    }
    return datum_from_simple_system(r, sroots, scoroots);
}

// GSp_{2r} in the basis e_0, ..., e_r:
//   alpha_i = f_i - f_{i+1}, alpha_i_vee = e_i - e_{i+1}  (1 <= i < r)
//   alpha_r = 2 f_r - f_0,   alpha_r_vee = e_r
RootDatum build_gsp(size_t r) {
    if (r < 2) throw std::invalid_argument("GSp rank >= 2");
    size_t n = r + 1;
    std::vector<IntVec> sroots, scoroots;
    for (size_t i = 1; i < r; ++i) {
        IntVec a(n, Int(0)), av(n, Int(0));
        a[i] = 1;
        a[i + 1] = -1;
        av[i] = 1;
        av[i + 1] = -1;
        sroots.push_back(a);
        scoroots.push_back(av);
    }
    IntVec a(n, Int(0)), av(n, Int(0));
    a[r] = 2;
    a[0] = -1;
    av[r] = 1;
    sroots.push_back(a);
    scoroots.push_back(av);
    return datum_from_simple_system(n, sroots, scoroots);
}

RootDatum build_so_even(size_t l) {
    // Y' = Y_sc + Z * omega_1_vee (vector coweight)
    IntMatrix c = cartan_of_type('D', l);
    RatVec w = fundamental_coweight(c, 0);
    Int den = 1;
    for (const auto &x : w) den = lcm(den, x.get_den());
    IntVec num(l);
    for (size_t i = 0; i < l; ++i) {
        Rat t = w[i] * Rat(den);
        t.canonicalize();
        num[i] = t.get_num();
    }
    return build_isogeny_quotient('D', l, {num}, den);
}

RootDatum build_hspin(size_t l) {
    if (l % 2 != 0) throw std::invalid_argument("HSpin needs even rank");
    IntMatrix c = cartan_of_type('D', l);
    RatVec w = fundamental_coweight(c, l - 1);  // one of the half-spin nodes
    Int den = 1;
    for (const auto &x : w) den = lcm(den, x.get_den());
    IntVec num(l);
    for (size_t i = 0; i < l; ++i) {
        Rat t = w[i] * Rat(den);
        t.canonicalize();
        num[i] = t.get_num();
    }
    return build_isogeny_quotient('D', l, {num}, den);
}

RootDatum build_sl_mod_mu(size_t m, size_t k) {
    // SL_m / mu_k for k | m
    if (m < 2 || m % k != 0) throw std::invalid_argument("SL_m/mu_k needs k | m");
    size_t l = m - 1;
    if (k == 1) return build_simply_connected('A', l);
    IntMatrix c = cartan_of_type('A', l);
    RatVec w = fundamental_coweight(c, 0);  // class generates P_vee / Q_vee = Z/m
    for (auto &x : w) {
        x *= Rat(m) / Rat(k);  // class of order k
        x.canonicalize();
    }
    Int den = 1;
    for (const auto &x : w) den = lcm(den, x.get_den());
    IntVec num(l);
    for (size_t i = 0; i < l; ++i) {
        Rat t = w[i] * Rat(den);
        t.canonicalize();
        num[i] = t.get_num();
    }
    return build_isogeny_quotient('A', l, {num}, den);
}

}  // namespace

RootDatum build_catalog(const std::string &family, long param) {
    auto even = [&](long n) {
        if (n % 2 != 0) throw std::invalid_argument(family + " parameter must be even");
        return static_cast<size_t>(n / 2);
    };
    auto odd = [&](long n) {
        if (n % 2 != 1) throw std::invalid_argument(family + " parameter must be odd");
        return static_cast<size_t>((n - 1) / 2);
    };
    if (family == "SL") return build_simply_connected('A', static_cast<size_t>(param - 1));
    if (family == "PGL") return build_adjoint('A', static_cast<size_t>(param - 1));
    if (family == "GL") return build_gl(static_cast<size_t>(param));
    if (family == "Sp") return build_simply_connected('C', even(param));
    if (family == "PGSp") return build_adjoint('C', even(param));
    if (family == "GSp") return build_gsp(even(param));
    if (family == "Spin")
        return param % 2 ? build_simply_connected('B', odd(param))
                         : build_simply_connected('D', even(param));
    if (family == "SO") return param % 2 ? build_adjoint('B', odd(param)) : build_so_even(even(param));
    if (family == "PGO") return build_adjoint('D', even(param));
    if (family == "HSpin") return build_hspin(even(param));
    if (family == "SLmod") {
        // param encodes m * 1000 + k
        return build_sl_mod_mu(static_cast<size_t>(param / 1000), static_cast<size_t>(param % 1000));
    }
    if (family == "E6sc") return build_simply_connected('E', 6);
    if (family == "E6adj") return build_adjoint('E', 6);
    if (family == "E7sc") return build_simply_connected('E', 7);
    if (family == "E7adj") return build_adjoint('E', 7);
    if (family == "E8") return build_simply_connected('E', 8);
    if (family == "F4") return build_simply_connected('F', 4);
    if (family == "G2") return build_simply_connected('G', 2);
    throw std::invalid_argument("unknown builder family: " + family);
}

RootDatum build_by_name(const std::string &name) {
    static const char *kExact[] = {"E6sc", "E6adj", "E7sc", "E7adj", "E8", "F4", "G2"};
    for (const char *e : kExact)
        if (name == e) return build_catalog(name, 0);
    if (name == "E6") return build_catalog("E6sc", 0);
    if (name == "E7") return build_catalog("E7sc", 0);
    size_t split = 0;
    while (split < name.size() && !std::isdigit(static_cast<unsigned char>(name[split]))) ++split;
    if (split == 0 || split == name.size())
        throw std::invalid_argument("unknown builder name: " + name);
    std::string fam = name.substr(0, split);
    long param = std::stol(name.substr(split));
    return build_catalog(fam, param);
}

bool is_catalog_name(const std::string &name) {
    try {
        (void)build_by_name(name);
        return true;
    } catch (const std::exception &) {
        return false;
    }
}

std::vector<std::string> catalog_names() {
    std::vector<std::string> names;
    for (long m = 2; m <= 6; ++m) names.push_back("SL" + std::to_string(m));
    for (long m = 2; m <= 6; ++m) names.push_back("PGL" + std::to_string(m));
    for (long m = 1; m <= 5; ++m) names.push_back("GL" + std::to_string(m));
    for (long n = 4; n <= 10; n += 2) {
        names.push_back("Sp" + std::to_string(n));
        names.push_back("PGSp" + std::to_string(n));
        names.push_back("GSp" + std::to_string(n));
    }
    for (long n = 7; n <= 17; n += 2) {
        names.push_back("Spin" + std::to_string(n));
        names.push_back("SO" + std::to_string(n));
    }
    for (long n = 8; n <= 18; n += 2) {
        names.push_back("Spin" + std::to_string(n));
        names.push_back("SO" + std::to_string(n));
        names.push_back("PGO" + std::to_string(n));
    }
    for (long n = 8; n <= 16; n += 4) names.push_back("HSpin" + std::to_string(n));
    for (const char *e : {"E6sc", "E6adj", "E7sc", "E7adj", "E8", "F4", "G2"}) names.push_back(e);
    return names;
}

}  // namespace covdual
