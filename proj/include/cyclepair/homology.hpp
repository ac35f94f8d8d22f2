#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "multigraph.hpp"
#include "smith.hpp"
#include "words.hpp"

namespace cyclepair {

inline IntMatrix boundary_matrix(const Multigraph& g) {
    IntMatrix d(g.vertex_count, g.edges.size());
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        if (ed.is_loop()) continue;
        d(ed.head, e) += 1;
        d(ed.tail, e) -= 1;
    }
    return d;
}

inline bool is_cycle_chain(const Multigraph& g, const IntVector& c) {
    std::vector<Int> b(g.vertex_count, 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        b[g.edges[e].head] += c[e];
        b[g.edges[e].tail] -= c[e];
    }
    return std::all_of(b.begin(), b.end(), [](Int x) { return x == 0; });
}

inline Int inner_product(const IntVector& a, const IntVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::LengthMismatch, "inner product of chains of different length");
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// BFS tree from vertex 0; neighbours are visited in edge-id order.
struct SpanningTree {
    std::vector<int> parent;      // -1 at the root
    std::vector<int> parent_edge; // -1 at the root
    std::vector<int> depth;
    std::vector<bool> in_tree;    // per edge

    // Word walking the tree from x to y.
    EdgeWord path(const Multigraph& g, int x, int y) const {
        EdgeWord up, down;
        while (x != y) {
            if (depth[x] >= depth[y]) {
                int e = parent_edge[x];
                up.push_back({e, g.edges[e].tail == x ? 1 : -1});
                x = parent[x];
            } else {
                int e = parent_edge[y];
                down.push_back({e, g.edges[e].head == y ? 1 : -1});
                y = parent[y];
            }
        }
        up.insert(up.end(), down.rbegin(), down.rend());
        return up;
    }
};

inline SpanningTree spanning_tree(const Multigraph& g) {
    SpanningTree t;
    t.parent.assign(g.vertex_count, -1);
    t.parent_edge.assign(g.vertex_count, -1);
    t.depth.assign(g.vertex_count, -1);
    t.in_tree.assign(g.edges.size(), false);
    auto inc = incidence(g);
    std::deque<int> queue{0};
    t.depth[0] = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int e : inc[v]) {
            int w = g.edges[e].other(v);
            if (t.depth[w] >= 0) continue;
            t.depth[w] = t.depth[v] + 1;
            t.parent[w] = v;
            t.parent_edge[w] = e;
            t.in_tree[e] = true;
            queue.push_back(w);
        }
    }
    return t;
}

struct CycleBasis {
    std::vector<IntVector> basis; // g chains of length m
    IntMatrix gram;
    std::vector<int> non_tree;    // basis i is the fundamental cycle of edge non_tree[i]
    SpanningTree tree;
    int edge_count = 0;

    std::size_t genus() const noexcept { return basis.size(); }

    // Coordinates of a cycle: its coefficients on the non-tree edges.
    IntVector coordinates(const IntVector& cycle) const {
        IntVector x(non_tree.size());
        for (std::size_t i = 0; i < non_tree.size(); ++i) x[i] = cycle[non_tree[i]];
        return x;
    }

    IntVector to_chain(const IntVector& coords) const {
        if (coords.size() != basis.size()) throw Error(ErrorKind::LengthMismatch, "cycle coordinates have the wrong length");
        IntVector c(edge_count, 0);
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (coords[i] != 0)
                for (int e = 0; e < edge_count; ++e) c[e] += coords[i] * basis[i][e];
        return c;
    }

    // (b_1[e], ..., b_g[e]): the restriction of e* to H_1.
    IntVector edge_functional(int e) const {
        IntVector f(basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) f[i] = basis[i][e];
        return f;
    }
};

/// Fundamental loop of non-tree edge e based at v: tree path to the tail,
/// the edge, tree path home.
inline EdgeWord fundamental_loop(const Multigraph& g, const SpanningTree& t, int e, int v) {
    const auto& ed = g.edges[e];
    EdgeWord w = t.path(g, v, ed.tail);
    w.push_back({e, 1});
    auto back = t.path(g, ed.head, v);
    w.insert(w.end(), back.begin(), back.end());
    return reduce_word(w);
}

inline CycleBasis cycle_basis(const Multigraph& g) {
    validate(g);
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
    CycleBasis cb;
    cb.edge_count = g.edge_count();
    cb.tree = spanning_tree(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (cb.tree.in_tree[e]) continue;
        cb.non_tree.push_back(e);
        cb.basis.push_back(chain_of_word(fundamental_loop(g, cb.tree, e, 0), g.edge_count()));
    }
    const std::size_t n = cb.basis.size();
    cb.gram = IntMatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cb.gram(i, j) = inner_product(cb.basis[i], cb.basis[j]);
    return cb;
}

inline std::vector<EdgeWord> generator_loops(const Multigraph& g, const CycleBasis& cb, int basepoint) {
    std::vector<EdgeWord> out;
    for (int e : cb.non_tree) out.push_back(fundamental_loop(g, cb.tree, e, basepoint));
    return out;
}

struct ConcyclicityPartition {
    std::vector<std::vector<int>> classes;   // sorted, ordered by smallest edge id
    std::vector<IntVector> functional;       // per class, first nonzero entry positive
    std::vector<int> edge_class;
    std::vector<int> edge_sign;              // e*|H1 = edge_sign[e] * functional[class]
};

inline ConcyclicityPartition concyclicity(const Multigraph& g, const CycleBasis& cb) {
    require_bridgeless(g);
    ConcyclicityPartition p;
    p.edge_class.assign(g.edges.size(), -1);
    p.edge_sign.assign(g.edges.size(), 1);
    std::map<IntVector, int> index;
    for (int e = 0; e < g.edge_count(); ++e) {
        IntVector f = cb.edge_functional(e);
        auto nz = std::find_if(f.begin(), f.end(), [](Int x) { return x != 0; });
        if (nz == f.end()) throw Error(ErrorKind::HasBridge, "edge " + std::to_string(e) + " lies on no cycle");
        int sign = *nz > 0 ? 1 : -1;
        if (sign < 0)
            for (auto& x : f) x = -x;
        auto [it, fresh] = index.emplace(f, static_cast<int>(p.classes.size()));
        if (fresh) {
            p.classes.emplace_back();
            p.functional.push_back(f);
        }
        p.classes[it->second].push_back(e);
        p.edge_class[e] = it->second;
        p.edge_sign[e] = sign;
    }
    return p;
}

inline ConcyclicityPartition concyclicity(const Multigraph& g) { return concyclicity(g, cycle_basis(g)); }

struct OrientedGraph {
    Multigraph graph;
    std::vector<int> signs; // -1 where the edge was flipped
};

/// Flip edges so that every member of a class has the functional of the
/// class's lowest-id edge.
inline OrientedGraph cyclic_orientation(const Multigraph& g) {
    auto p = concyclicity(g);
    OrientedGraph out;
    out.signs.assign(g.edges.size(), 1);
    for (const auto& cls : p.classes) {
        int ref = p.edge_sign[cls.front()];
        for (int e : cls)
            if (p.edge_sign[e] != ref) out.signs[e] = -1;
    }
    out.graph = reorient(g, out.signs);
    return out;
}

inline bool is_cyclically_oriented(const Multigraph&, const ConcyclicityPartition& p) {
    for (const auto& cls : p.classes)
        for (int e : cls)
            if (p.edge_sign[e] != p.edge_sign[cls.front()]) return false;
    return true;
}

/// Γ(C) is a cycle graph, Γ∖C is bridgeless, and Γ(C∪D) is two cycles
/// sharing exactly one vertex, for all classes C ≠ D.
struct StructureReport {
    std::size_t checks = 0;
    std::vector<std::string> failures;
};

inline StructureReport check_concyclicity_structure(const Multigraph& g, const ConcyclicityPartition& p) {
    StructureReport r;
    const auto& cls = p.classes;
    for (std::size_t c = 0; c < cls.size(); ++c) {
        ++r.checks;
        if (!is_cycle_graph(contract(g, edge_mask(g, cls[c])).graph))
            r.failures.push_back("contraction to class " + std::to_string(c) + " is not a cycle");
        ++r.checks;
        if (!bridges(delete_edges(g, edge_mask(g, cls[c]))).empty())
            r.failures.push_back("deleting class " + std::to_string(c) + " leaves a bridge");
    }
    for (std::size_t c = 0; c < cls.size(); ++c)
        for (std::size_t d = c + 1; d < cls.size(); ++d) {
            ++r.checks;
            std::vector<int> both = cls[c];
            both.insert(both.end(), cls[d].begin(), cls[d].end());
            auto con = contract(g, edge_mask(g, both));
            std::vector<int> ic, id;
            for (int e : cls[c]) ic.push_back(con.edge_map[e]);
            for (int e : cls[d]) id.push_back(con.edge_map[e]);
            std::vector<int> on(con.graph.vertex_count, 0);
            for (int e : ic) on[con.graph.edges[e].tail] |= 1, on[con.graph.edges[e].head] |= 1;
            for (int e : id) on[con.graph.edges[e].tail] |= 2, on[con.graph.edges[e].head] |= 2;
            bool ok = is_cycle_subgraph(con.graph, ic) && is_cycle_subgraph(con.graph, id) &&
                      std::count(on.begin(), on.end(), 3) == 1 && std::count(on.begin(), on.end(), 0) == 0;
            if (!ok)
                r.failures.push_back("classes " + std::to_string(c) + "," + std::to_string(d) + " do not contract to a vertex join");
        }
    return r;
}

// Invariant factors of coker(gram), 1s suppressed.
inline std::vector<Integer> jacobian(const CycleBasis& cb) {
    return smith_normal_form(convert<Integer>(cb.gram)).invariant_factors();
}

/// Isometry H1(g) -> H1(g2) induced by the signed edge bijection
/// e -> emap[e] (with sign[e]); none when it does not carry H1 onto H1'.
inline std::optional<IntMatrix> two_isomorphism_from_edge_bijection(const Multigraph& g, const CycleBasis& cb,
                                                                   const Multigraph& g2, const CycleBasis& cb2,
                                                                   const std::vector<int>& emap,
                                                                   const std::vector<int>& sign = {}) {
    if (g.edge_count() != g2.edge_count() || cb.genus() != cb2.genus()) return std::nullopt;
    const std::size_t n = cb.genus();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector image(g2.edges.size(), 0);
        for (int e = 0; e < g.edge_count(); ++e) image[emap[e]] += (sign.empty() ? 1 : sign[e]) * cb.basis[i][e];
        if (!is_cycle_chain(g2, image)) return std::nullopt;
        IntVector x = cb2.coordinates(image);
        for (std::size_t k = 0; k < n; ++k) m(k, i) = x[k];
    }
    Integer det = determinant(convert<Integer>(m));
    if (det != 1 && det != -1) return std::nullopt;
    return m;
}

inline std::optional<IntMatrix> two_isomorphism_from_edge_bijection(const Multigraph& g, const Multigraph& g2,
                                                                   const std::vector<int>& emap,
                                                                   const std::vector<int>& sign = {}) {
    return two_isomorphism_from_edge_bijection(g, cycle_basis(g), g2, cycle_basis(g2), emap, sign);
}

} // namespace cyclepair
