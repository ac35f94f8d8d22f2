#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "error.hpp"

namespace cyclepair {

struct Edge {
    int tail = 0;
    int head = 0;

    bool is_loop() const noexcept { return tail == head; }
    int other(int v) const noexcept { return v == tail ? head : tail; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Connected multigraph with loops and parallel edges. Edge ids are list
/// positions; the orientation is the (tail, head) order.
struct Multigraph {
    int vertex_count = 0;
    std::vector<Edge> edges;

    Multigraph() = default;
    Multigraph(int n, std::vector<Edge> e) : vertex_count(n), edges(std::move(e)) {}

    int edge_count() const noexcept { return static_cast<int>(edges.size()); }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;
};

struct PointedGraph {
    Multigraph graph;
    int basepoint = 0;

    friend bool operator==(const PointedGraph&, const PointedGraph&) = default;
};

inline void validate(const Multigraph& g) {
    if (g.vertex_count <= 0) throw Error(ErrorKind::InvalidGraph, "graph needs at least one vertex");
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.tail < 0 || e.tail >= g.vertex_count || e.head < 0 || e.head >= g.vertex_count)
            throw Error(ErrorKind::InvalidGraph, "edge " + std::to_string(i) + " has an endpoint out of range");
    }
}

inline void validate(const PointedGraph& pg) {
    validate(pg.graph);
    if (pg.basepoint < 0 || pg.basepoint >= pg.graph.vertex_count)
        throw Error(ErrorKind::InvalidGraph, "basepoint out of range");
}

// incident[v] lists edge ids touching v; a loop appears once.
inline std::vector<std::vector<int>> incidence(const Multigraph& g) {
    std::vector<std::vector<int>> inc(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ed = g.edges[e];
        inc[ed.tail].push_back(e);
        if (!ed.is_loop()) inc[ed.head].push_back(e);
    }
    return inc;
}

inline std::vector<int> degrees(const Multigraph& g) {
    std::vector<int> d(g.vertex_count, 0);
    for (const auto& e : g.edges) {
        ++d[e.tail];
        ++d[e.head];
    }
    return d;
}

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        return true;
    }

private:
    std::vector<int> parent_;
};

// Component label per vertex, using only edges with active[e] (all if empty).
inline std::vector<int> components(const Multigraph& g, const std::vector<bool>& active = {}) {
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e)
        if (active.empty() || active[e])
            uf.unite(g.edges[e].tail, g.edges[e].head);
    std::vector<int> label(g.vertex_count);
    for (int v = 0; v < g.vertex_count; ++v) label[v] = uf.find(v);
    return label;
}

inline bool is_connected(const Multigraph& g, const std::vector<bool>& active = {}) {
    if (g.vertex_count == 0) return false;
    auto label = components(g, active);
    return std::all_of(label.begin(), label.end(), [&](int l) { return l == label[0]; });
}

inline std::vector<int> bridges(const Multigraph& g) {
    std::vector<int> out;
    std::vector<bool> active(g.edges.size(), true);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (g.edges[e].is_loop()) continue;
        active[e] = false;
        auto label = components(g, active);
        const auto& ed = g.edges[e];
        if (label[ed.tail] != label[ed.head]) out.push_back(e);
        active[e] = true;
    }
    return out;
}

inline bool is_bridgeless(const Multigraph& g) {
    validate(g);
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
    return bridges(g).empty();
}

inline void require_connected(const Multigraph& g) {
    if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph is not connected");
}

inline void require_bridgeless(const Multigraph& g) {
    if (!is_bridgeless(g)) throw Error(ErrorKind::HasBridge, "edge " + std::to_string(bridges(g).front()) + " is a bridge");
}

struct ContractResult {
    Multigraph graph;
    std::vector<int> vertex_map; // old vertex -> new vertex
    std::vector<int> edge_map;   // old edge -> new edge, -1 when contracted away
};

/// Γ(keep): contract every edge outside `keep`. Kept edges retain their
/// relative order; new vertex ids follow the smallest old vertex in each
/// merged group.
inline ContractResult contract(const Multigraph& g, const std::vector<bool>& keep) {
    UnionFind uf(g.vertex_count);
    for (int e = 0; e < g.edge_count(); ++e)
        if (!keep[e]) uf.unite(g.edges[e].tail, g.edges[e].head);
    ContractResult r;
    r.vertex_map.assign(g.vertex_count, -1);
    std::vector<int> root_id(g.vertex_count, -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v) {
        int root = uf.find(v);
        if (root_id[root] < 0) root_id[root] = next++;
        r.vertex_map[v] = root_id[root];
    }
    r.graph.vertex_count = next;
    r.edge_map.assign(g.edges.size(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!keep[e]) continue;
        const auto& ed = g.edges[e];
        r.edge_map[e] = r.graph.edge_count();
        r.graph.edges.push_back({r.vertex_map[ed.tail], r.vertex_map[ed.head]});
    }
    return r;
}

inline std::vector<bool> edge_mask(const Multigraph& g, const std::vector<int>& ids) {
    std::vector<bool> m(g.edges.size(), false);
    for (int e : ids) m[e] = true;
    return m;
}

/// Remove edges; vertices are kept, so the result may be disconnected.
inline Multigraph delete_edges(const Multigraph& g, const std::vector<bool>& remove) {
    Multigraph out;
    out.vertex_count = g.vertex_count;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!remove[e]) out.edges.push_back(g.edges[e]);
    return out;
}

inline Multigraph reorient(const Multigraph& g, const std::vector<int>& signs) {
    Multigraph out = g;
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        if (signs[e] < 0) std::swap(out.edges[e].tail, out.edges[e].head);
    return out;
}

/// C_n with edges i -> i+1 (mod n). C_1 is a single loop.
inline Multigraph cycle_graph(int n) {
    Multigraph g;
    g.vertex_count = n;
    for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
    return g;
}

inline Multigraph bouquet(int loops) {
    Multigraph g;
    g.vertex_count = 1;
    for (int i = 0; i < loops; ++i) g.edges.push_back({0, 0});
    return g;
}

inline Multigraph theta_graph(int parallel = 3) {
    Multigraph g;
    g.vertex_count = 2;
    for (int i = 0; i < parallel; ++i) g.edges.push_back({0, 1});
    return g;
}

inline bool is_cycle_graph(const Multigraph& g) {
    if (g.vertex_count <= 0 || g.edge_count() != g.vertex_count || !is_connected(g)) return false;
    auto d = degrees(g);
    return std::all_of(d.begin(), d.end(), [](int x) { return x == 2; });
}

/// a ∨ b with ua ~ ub. Vertices of a keep their ids; b's vertices follow,
/// skipping ub. Edges of a come first.
inline Multigraph vertex_join(const Multigraph& a, const Multigraph& b, int ua, int ub) {
    if (!is_cycle_graph(a) || !is_cycle_graph(b)) throw Error(ErrorKind::NotCyclic, "vertex_join needs two cycle graphs");
    if (ua < 0 || ua >= a.vertex_count || ub < 0 || ub >= b.vertex_count) throw Error(ErrorKind::InvalidGraph, "join vertex out of range");
    Multigraph out;
    out.vertex_count = a.vertex_count + b.vertex_count - 1;
    out.edges = a.edges;
    auto map_b = [&](int v) {
        if (v == ub) return ua;
        return a.vertex_count + (v < ub ? v : v - 1);
    };
    for (const auto& e : b.edges) out.edges.push_back({map_b(e.tail), map_b(e.head)});
    return out;
}

// Drop vertices no edge touches, renumbering the rest in order.
inline Multigraph compact_vertices(const Multigraph& g, std::vector<int>* old_to_new = nullptr) {
    std::vector<int> map(g.vertex_count, -1);
    std::vector<bool> used(g.vertex_count, false);
    for (const auto& e : g.edges) used[e.tail] = used[e.head] = true;
    int next = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (used[v]) map[v] = next++;
    Multigraph out;
    out.vertex_count = next;
    for (const auto& e : g.edges) out.edges.push_back({map[e.tail], map[e.head]});
    if (old_to_new) *old_to_new = map;
    return out;
}

/// Edge ids of a subgraph that form a single cycle (connected, every touched
/// vertex has degree 2).
inline bool is_cycle_subgraph(const Multigraph& g, const std::vector<int>& ids) {
    if (ids.empty()) return false;
    std::vector<int> deg(g.vertex_count, 0);
    UnionFind uf(g.vertex_count);
    for (int e : ids) {
        const auto& ed = g.edges[e];
        ++deg[ed.tail];
        ++deg[ed.head];
        uf.unite(ed.tail, ed.head);
    }
    int root = -1;
    for (int v = 0; v < g.vertex_count; ++v) {
        if (deg[v] == 0) continue;
        if (deg[v] != 2) return false;
        if (root < 0) root = uf.find(v);
        else if (uf.find(v) != root) return false;
    }
    return true;
}

} // namespace cyclepair
