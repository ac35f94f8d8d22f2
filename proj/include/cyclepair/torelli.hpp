#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <optional>
#include <vector>

#include "homology.hpp"
#include "matrix.hpp"
#include "multigraph.hpp"

namespace cyclepair {

struct IsometryList {
    std::vector<IntMatrix> isometries; // columns are images of the source basis
    bool truncated = false;
};

namespace detail {

inline Int quad(const IntMatrix& g, const IntVector& x, const IntVector& y) {
    Int s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * g(i, j) * y[j];
    }
    return s;
}

// All x with x^T G x = norm. |x_j| <= sqrt(norm * (G^-1)_jj) bounds the box.
inline std::vector<IntVector> vectors_of_norm(const IntMatrix& gram, Int norm, const RationalMatrix& gram_inv) {
    const std::size_t n = gram.rows();
    std::vector<Int> bound(n);
    for (std::size_t j = 0; j < n; ++j) {
        Rational q = Rational(static_cast<long>(norm)) * gram_inv(j, j);
        Integer fl = q.get_num() / q.get_den();
        Integer root = sqrt(fl);
        bound[j] = root.get_si();
    }
    std::vector<IntVector> out;
    IntVector x(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            if (quad(gram, x, x) == norm) out.push_back(x);
            return;
        }
        for (Int v = -bound[j]; v <= bound[j]; ++v) {
            x[j] = v;
            rec(j + 1);
        }
        x[j] = 0;
    };
    rec(0);
    return out;
}

} // namespace detail

/// Every integer M with M^T G' M = G, by backtracking over columns.
inline IsometryList enumerate_isometries(const IntMatrix& G, const IntMatrix& G2, std::size_t limit = 10000) {
    if (G.rows() != G2.rows()) throw Error(ErrorKind::RankMismatch, "lattices of different rank");
    const std::size_t n = G.rows();
    IsometryList out;
    if (n == 0) {
        out.isometries.push_back(IntMatrix(0, 0));
        return out;
    }
    auto inv = inverse(convert<Rational>(G2));
    if (!inv) throw Error(ErrorKind::SingularPairing, "target Gram matrix is singular");
    std::vector<std::vector<IntVector>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) candidates[i] = detail::vectors_of_norm(G2, G(i, i), *inv);

    std::vector<const IntVector*> cols(n, nullptr);
    std::function<bool(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            IntMatrix m(n, n);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t r = 0; r < n; ++r) m(r, c) = (*cols[c])[r];
            Integer det = determinant(convert<Integer>(m));
            if (det != 1 && det != -1) return true;
            if (out.isometries.size() >= limit) {
                out.truncated = true;
                return false;
            }
            out.isometries.push_back(std::move(m));
            return true;
        }
        for (const auto& v : candidates[i]) {
            bool ok = true;
            for (std::size_t j = 0; j < i && ok; ++j) ok = detail::quad(G2, *cols[j], v) == G(j, i);
            if (!ok) continue;
            cols[i] = &v;
            if (!rec(i + 1)) return false;
        }
        return true;
    };
    rec(0);
    return out;
}

inline IntMatrix integer_inverse(const IntMatrix& m) {
    auto inv = inverse(convert<Rational>(m));
    if (!inv || !is_integral(*inv)) throw Error(ErrorKind::RankMismatch, "matrix is not unimodular");
    IntMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = (*inv)(i, j).get_num().get_si();
    return out;
}

// Row vector f times matrix m.
inline IntVector row_times(const IntVector& f, const IntMatrix& m) {
    IntVector out(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (std::size_t i = 0; i < m.rows(); ++i) out[j] += f[i] * m(i, j);
    return out;
}

struct ClassBijection {
    std::vector<int> target; // source class -> target class
    std::vector<int> sign;   // ψ(C*) = sign * C'*
    friend bool operator==(const ClassBijection&, const ClassBijection&) = default;
};

/// Push each class functional through the isometry (C* ∘ φ^-1) and find the
/// unique class of equal size whose functional agrees up to sign.
inline std::optional<ClassBijection> class_bijection_from_isometry(const IntMatrix& m, const ConcyclicityPartition& a,
                                                                   const ConcyclicityPartition& b) {
    if (a.classes.size() != b.classes.size()) return std::nullopt;
    IntMatrix n = integer_inverse(m);
    ClassBijection cb;
    std::vector<bool> hit(b.classes.size(), false);
    for (std::size_t c = 0; c < a.classes.size(); ++c) {
        IntVector psi = row_times(a.functional[c], n);
        int found = -1, sign = 0, matches = 0;
        for (std::size_t d = 0; d < b.classes.size(); ++d) {
            if (a.classes[c].size() != b.classes[d].size()) continue;
            int t = 0;
            if (psi == b.functional[d]) t = 1;
            else {
                IntVector neg = psi;
                for (auto& x : neg) x = -x;
                if (neg == b.functional[d]) t = -1;
            }
            if (t == 0) continue;
            ++matches;
            found = static_cast<int>(d);
            sign = t;
        }
        if (matches != 1 || hit[found]) return std::nullopt;
        hit[found] = true;
        cb.target.push_back(found);
        cb.sign.push_back(sign);
    }
    return cb;
}

/// Signed edge bijection representing a class bijection: members of each
/// class are matched in id order; s_e = σ_e σ'_{Φe} t_C.
struct SignedEdgeMap {
    std::vector<int> edge_map;
    std::vector<int> edge_sign;
    friend bool operator==(const SignedEdgeMap&, const SignedEdgeMap&) = default;
};

inline SignedEdgeMap representing_edge_map(const ClassBijection& cbij, const ConcyclicityPartition& a,
                                           const ConcyclicityPartition& b) {
    SignedEdgeMap out;
    out.edge_map.assign(a.edge_class.size(), -1);
    out.edge_sign.assign(a.edge_class.size(), 1);
    for (std::size_t c = 0; c < a.classes.size(); ++c) {
        const auto& src = a.classes[c];
        const auto& dst = b.classes[cbij.target[c]];
        for (std::size_t k = 0; k < src.size(); ++k) {
            out.edge_map[src[k]] = dst[k];
            out.edge_sign[src[k]] = a.edge_sign[src[k]] * b.edge_sign[dst[k]] * cbij.sign[c];
        }
    }
    return out;
}

/// Simple cycles as coordinate vectors: chains with coefficients in
/// {-1, 0, 1} supported on a single cycle.
inline std::vector<IntVector> simple_cycles(const Multigraph& g, const CycleBasis& cb) {
    const std::size_t n = cb.genus();
    std::vector<IntVector> out;
    IntVector x(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t j) {
        if (j == n) {
            if (std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; })) return;
            IntVector c = cb.to_chain(x);
            std::vector<int> support;
            for (int e = 0; e < cb.edge_count; ++e) {
                if (c[e] < -1 || c[e] > 1) return;
                if (c[e]) support.push_back(e);
            }
            if (is_cycle_subgraph(g, support)) out.push_back(x);
            return;
        }
        for (Int v = -1; v <= 1; ++v) {
            x[j] = v;
            rec(j + 1);
        }
        x[j] = 0;
    };
    rec(0);
    return out;
}

/// Every simple cycle of the source maps to a vector pairing to -1, 0 or 1
/// with every class functional of the target.
inline bool simple_cycle_check(const IntMatrix& m, const std::vector<IntVector>& cycles, const ConcyclicityPartition& b) {
    for (const auto& x : cycles) {
        IntVector y = m * x;
        for (const auto& f : b.functional) {
            Int v = inner_product(f, y);
            if (v < -1 || v > 1) return false;
        }
    }
    return true;
}

struct TwoCycles {
    std::vector<int> first;
    std::vector<int> second;
    bool degenerate = false;
    bool used_fallback = false;
};

namespace detail {

// Unit-capacity max flow on an undirected multigraph; returns up to `want`
// edge-disjoint s-t paths as edge lists.
inline std::vector<std::vector<int>> disjoint_paths(const Multigraph& h, int s, int t, int want) {
    const int m = h.edge_count();
    // flow[e] in {-1, 0, 1}: direction of use relative to (tail, head)
    std::vector<int> flow(m, 0);
    auto inc = incidence(h);
    int found = 0;
    while (found < want) {
        std::vector<int> via(h.vertex_count, -2);
        std::deque<int> q{s};
        via[s] = -1;
        while (!q.empty() && via[t] == -2) {
            int v = q.front();
            q.pop_front();
            for (int e : inc[v]) {
                const auto& ed = h.edges[e];
                if (ed.is_loop()) continue;
                int w = ed.other(v);
                int dir = ed.tail == v ? 1 : -1;
                if (flow[e] == dir) continue; // saturated this way
                if (via[w] != -2) continue;
                via[w] = e;
                q.push_back(w);
            }
        }
        if (via[t] == -2) break;
        for (int v = t; v != s;) {
            int e = via[v];
            const auto& ed = h.edges[e];
            int from = ed.other(v);
            flow[e] += ed.tail == from ? 1 : -1;
            v = from;
        }
        ++found;
    }
    std::vector<std::vector<int>> paths;
    std::vector<bool> used(m, false);
    for (int p = 0; p < found; ++p) {
        std::vector<int> path;
        int v = s;
        while (v != t) {
            int next = -1;
            for (int e : inc[v]) {
                if (used[e] || flow[e] == 0) continue;
                const auto& ed = h.edges[e];
                if ((flow[e] == 1 && ed.tail == v) || (flow[e] == -1 && ed.head == v)) {
                    next = e;
                    break;
                }
            }
            if (next < 0) break;
            used[next] = true;
            path.push_back(next);
            v = h.edges[next].other(v);
        }
        paths.push_back(path);
    }
    return paths;
}

} // namespace detail

/// Two cyclic subgraphs meeting exactly in the class C. Contract C \ {e},
/// delete e, and route two edge-disjoint paths between e's endpoints.
inline TwoCycles concyclic_two_cycles(const Multigraph& g, const std::vector<int>& cls) {
    require_bridgeless(g);
    TwoCycles out;
    std::vector<bool> keep(g.edges.size(), true);
    for (int e : cls)
        if (e != cls.front()) keep[e] = false;
    auto con = contract(g, keep);
    int e0 = con.edge_map[cls.front()];
    const Edge& ed = con.graph.edges[e0];
    if (ed.is_loop()) {
        out.first = out.second = cls;
        out.degenerate = true;
        return out;
    }
    Multigraph h = con.graph;
    // keep ids aligned with con.graph: disable e0 by turning it into a loop
    h.edges[e0] = {ed.tail, ed.tail};
    auto paths = detail::disjoint_paths(h, ed.tail, ed.head, 2);
    std::vector<int> back(con.graph.edges.size(), -1);
    for (int e = 0; e < g.edge_count(); ++e)
        if (con.edge_map[e] >= 0) back[con.edge_map[e]] = e;
    auto lift = [&](const std::vector<int>& path) {
        std::vector<int> s = cls;
        for (int e : path) s.push_back(back[e]);
        std::sort(s.begin(), s.end());
        return s;
    };
    bool good = paths.size() == 2;
    if (good) {
        out.first = lift(paths[0]);
        out.second = lift(paths[1]);
        good = is_cycle_subgraph(g, out.first) && is_cycle_subgraph(g, out.second);
    }
    if (good) return out;

    // exhaustive fallback over simple cycles
    out.used_fallback = true;
    auto cb = cycle_basis(g);
    auto cycles = simple_cycles(g, cb);
    std::vector<std::vector<int>> supports;
    for (const auto& x : cycles) {
        auto c = cb.to_chain(x);
        std::vector<int> s;
        for (int e = 0; e < g.edge_count(); ++e)
            if (c[e]) s.push_back(e);
        supports.push_back(s);
    }
    for (std::size_t i = 0; i < supports.size(); ++i)
        for (std::size_t j = i + 1; j < supports.size(); ++j) {
            std::vector<int> inter;
            std::set_intersection(supports[i].begin(), supports[i].end(), supports[j].begin(), supports[j].end(),
                                  std::back_inserter(inter));
            if (inter == cls) {
                out.first = supports[i];
                out.second = supports[j];
                return out;
            }
        }
    out.first = out.second = cls;
    out.degenerate = true;
    return out;
}

} // namespace cyclepair
