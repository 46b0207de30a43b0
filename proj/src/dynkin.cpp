#include "covdual/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace covdual {

std::string DynkinType::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto &c : components) {
        os << (first ? "" : "+") << c.to_string();
        first = false;
    }
    if (torus_rank) os << (first ? "" : "+") << "T" << torus_rank;
    if (first && !torus_rank) os << "0";
    return os.str();
}

bool DynkinType::same_shape(const DynkinType &rhs) const {
    if (torus_rank != rhs.torus_rank || components.size() != rhs.components.size()) return false;
    for (size_t i = 0; i < components.size(); ++i)
        if (components[i].family != rhs.components[i].family ||
            components[i].rank != rhs.components[i].rank)
            return false;
    return true;
}

namespace {

[[noreturn]] void not_finite(const std::string &why) {
    throw std::domain_error("classify_dynkin: not finite type (" + why + ")");
}

struct Graph {
    size_t n;
    std::vector<std::vector<size_t>> adj;
};

// walk a path graph starting from `start`, never revisiting
std::vector<size_t> walk_path(const Graph &g, size_t start) {
    std::vector<size_t> path{start};
    size_t prev = start, cur = start;
    while (true) {
        size_t next = cur;
        bool moved = false;
        for (size_t v : g.adj[cur])
            if (v != prev) {
                next = v;
                moved = true;
                break;
            }
        if (!moved) break;
        prev = cur;
        cur = next;
        path.push_back(cur);
    }
    return path;
}

Int component_det(const IntMatrix &c, const std::vector<size_t> &nodes) {
    IntMatrix sub(nodes.size(), nodes.size());
    for (size_t i = 0; i < nodes.size(); ++i)
        for (size_t j = 0; j < nodes.size(); ++j) sub.at(i, j) = c.at(nodes[i], nodes[j]);
    return sub.determinant();
}

DynkinComponent classify_component(const IntMatrix &c, const std::vector<size_t> &comp) {
    size_t n = comp.size();
    std::vector<long> pos(c.rows(), -1);
    for (size_t i = 0; i < n; ++i) pos[comp[i]] = static_cast<long>(i);

    Graph g{n, std::vector<std::vector<size_t>>(n)};
    size_t edges = 0;
    long heavy_i = -1, heavy_j = -1;  // C_ij = -2 or -3: alpha_j is the short root
    Int heavy_w = 0;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Int cab = c.at(comp[a], comp[b]), cba = c.at(comp[b], comp[a]);
            if (cab == 0 && cba == 0) continue;
            if (cab == 0 || cba == 0) not_finite("one-sided edge");
            if (cab > 0 || cba > 0) not_finite("positive off-diagonal");
            ++edges;
            g.adj[a].push_back(b);
            g.adj[b].push_back(a);
            Int w = cab * cba;
            if (w > 3) not_finite("edge weight > 3");
            if (w > 1) {
                if (heavy_i >= 0) not_finite("two multiple edges");
                heavy_w = w;
                if (cab <= -2) {
                    heavy_i = static_cast<long>(a);
                    heavy_j = static_cast<long>(b);
                } else {
                    heavy_i = static_cast<long>(b);
                    heavy_j = static_cast<long>(a);
                }
            }
        }
    if (edges != n - 1) not_finite("cycle");

    std::vector<size_t> deg(n);
    for (size_t i = 0; i < n; ++i) deg[i] = g.adj[i].size();
    size_t branch = n;
    for (size_t i = 0; i < n; ++i) {
        if (deg[i] > 3) not_finite("degree > 3");
        if (deg[i] == 3) {
            if (branch != n) not_finite("two branch nodes");
            branch = i;
        }
    }

    DynkinComponent out;
    out.rank = n;
    auto emit = [&](char fam, const std::vector<size_t> &order) {
        out.family = fam;
        out.nodes.clear();
        for (size_t i : order) out.nodes.push_back(comp[i]);
    };

    if (heavy_w == 3) {
        if (n != 2 || branch != n) not_finite("G2 shape");
        // short root first (Bourbaki)
        emit('G', {static_cast<size_t>(heavy_j), static_cast<size_t>(heavy_i)});
        return out;
    }
    if (heavy_w == 2) {
        if (branch != n) not_finite("branch with double edge");
        size_t hi = static_cast<size_t>(heavy_i), hj = static_cast<size_t>(heavy_j);
        if (n == 2) {
            emit('B', {hi, hj});  // B2 convention: long then short
            return out;
        }
        if (deg[hj] == 1) {  // short root at the end: type B
            size_t far = 0;
            for (size_t i = 0; i < n; ++i)
                if (deg[i] == 1 && i != hj) far = i;
            emit('B', walk_path(g, far));
            return out;
        }
        if (deg[hi] == 1) {  // long root at the end: type C
            size_t far = 0;
            for (size_t i = 0; i < n; ++i)
                if (deg[i] == 1 && i != hi) far = i;
            emit('C', walk_path(g, far));
            return out;
        }
        if (n == 4 && deg[hi] == 2 && deg[hj] == 2) {
            // F4: long end, long, short, short end
            size_t e1 = 0, e2 = 0;
            for (size_t v : g.adj[hi])
                if (v != hj) e1 = v;
            for (size_t v : g.adj[hj])
                if (v != hi) e2 = v;
            emit('F', {e1, hi, hj, e2});
            return out;
        }
        not_finite("double edge in the interior");
    }

    // simply laced
    if (branch == n) {
        if (n == 1) {
            emit('A', {0});
            return out;
        }
        std::vector<size_t> ends;
        for (size_t i = 0; i < n; ++i)
            if (deg[i] == 1) ends.push_back(i);
        if (ends.size() != 2) not_finite("path shape");
        size_t start = comp[ends[0]] < comp[ends[1]] ? ends[0] : ends[1];
        emit('A', walk_path(g, start));
        return out;
    }

    // one branch node: D or E
    std::vector<std::vector<size_t>> arms;  // from branch outward, branch excluded
    for (size_t v : g.adj[branch]) {
        std::vector<size_t> arm{v};
        size_t prev = branch, cur = v;
        while (deg[cur] == 2) {
            for (size_t w : g.adj[cur])
                if (w != prev) {
                    prev = cur;
                    cur = w;
                    break;
                }
            arm.push_back(cur);
        }
        arms.push_back(arm);
    }
    if (arms.size() != 3) not_finite("branch arms");
    std::sort(arms.begin(), arms.end(), [&](const auto &x, const auto &y) {
        if (x.size() != y.size()) return x.size() < y.size();
        return comp[x.back()] < comp[y.back()];
    });
    size_t l1 = arms[0].size(), l2 = arms[1].size(), l3 = arms[2].size();

    if (l1 == 1 && l2 == 1) {
        // D_n, n >= 4: long arm far end .. branch, then the two fork nodes
        std::vector<size_t> order(arms[2].rbegin(), arms[2].rend());
        order.push_back(branch);
        size_t f1 = arms[0][0], f2 = arms[1][0];
        if (comp[f1] > comp[f2]) std::swap(f1, f2);
        order.push_back(f1);
        order.push_back(f2);
        emit('D', order);
        return out;
    }
    if (l1 == 1 && l2 == 2 && (l3 >= 2 && l3 <= 4)) {
        // E6/E7/E8, Bourbaki numbering
        std::vector<size_t> order;
        order.push_back(arms[1][1]);  // node 1: far end of the length-2 arm
        order.push_back(arms[0][0]);  // node 2: the short arm
        order.push_back(arms[1][0]);  // node 3
        order.push_back(branch);      // node 4
        for (size_t v : arms[2]) order.push_back(v);
        emit('E', order);
        return out;
    }
    not_finite("branch arm lengths");
}

}  // namespace

DynkinType classify_dynkin(const IntMatrix &cartan) {
    size_t n = cartan.rows();
    if (cartan.cols() != n) throw std::invalid_argument("classify_dynkin: non-square matrix");
    for (size_t i = 0; i < n; ++i)
        if (cartan.at(i, i) != 2) not_finite("diagonal entry != 2");

    // connected components
    std::vector<int> comp_of(n, -1);
    std::vector<std::vector<size_t>> comps;
    for (size_t i = 0; i < n; ++i) {
        if (comp_of[i] >= 0) continue;
        std::vector<size_t> stack{i}, comp;
        comp_of[i] = static_cast<int>(comps.size());
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (size_t w = 0; w < n; ++w)
                if (w != v && (cartan.at(v, w) != 0 || cartan.at(w, v) != 0) && comp_of[w] < 0) {
                    comp_of[w] = comp_of[v];
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(comp);
    }

    DynkinType out;
    for (const auto &comp : comps) {
        DynkinComponent dc = classify_component(cartan, comp);
        // determinant safety net
        Int det = component_det(cartan, comp);
        Int expect;
        switch (dc.family) {
            case 'A': expect = Int(dc.rank + 1); break;
            case 'B':
            case 'C': expect = 2; break;
            case 'D': expect = 4; break;
            case 'E': expect = Int(9 - dc.rank); break;
            case 'F':
            case 'G': expect = 1; break;
            default: expect = 0;
        }
        if (det != expect) not_finite("determinant check failed for " + dc.to_string());
        if (dc.family == 'E' && (dc.rank < 6 || dc.rank > 8)) not_finite("E rank");
        if (dc.family == 'F' && dc.rank != 4) not_finite("F rank");
        out.components.push_back(std::move(dc));
    }
    std::sort(out.components.begin(), out.components.end(), [](const auto &x, const auto &y) {
        if (x.family != y.family) return x.family < y.family;
        if (x.rank != y.rank) return x.rank < y.rank;
        return x.nodes < y.nodes;
    });
    return out;
}

DynkinType classify_datum(const RootDatum &rd) {
    DynkinType t = classify_dynkin(cartan_matrix(rd));
    t.torus_rank = rd.rank - rd.simple.size();
    return t;
}

IntVec cartan_symmetrizer(const IntMatrix &cartan) {
    size_t n = cartan.rows();
    std::vector<Rat> d(n, Rat(0));
    for (size_t i = 0; i < n; ++i) {
        if (d[i] != 0) continue;
        d[i] = 1;
        std::vector<size_t> stack{i};
        std::vector<size_t> comp{i};
        while (!stack.empty()) {
            size_t v = stack.back();
            stack.pop_back();
            for (size_t w = 0; w < n; ++w) {
                if (w == v || cartan.at(v, w) == 0) continue;
                Rat dw = d[v] * Rat(cartan.at(v, w)) / Rat(cartan.at(w, v));
                dw.canonicalize();
                if (d[w] == 0) {
                    d[w] = dw;
                    stack.push_back(w);
                    comp.push_back(w);
                } else if (d[w] != dw)
                    throw std::domain_error("cartan_symmetrizer: matrix not symmetrizable");
            }
        }
        // normalize the component: min value 1, integral
        Rat mn = d[comp[0]];
        for (size_t v : comp) mn = std::min(mn, d[v]);
        for (size_t v : comp) {
            d[v] /= mn;
            d[v].canonicalize();
        }
    }
    IntVec out(n);
    for (size_t i = 0; i < n; ++i) {
        if (d[i].get_den() != 1) throw std::domain_error("cartan_symmetrizer: non-integral");
        out[i] = d[i].get_num();
    }
    return out;
}

}  // namespace covdual
