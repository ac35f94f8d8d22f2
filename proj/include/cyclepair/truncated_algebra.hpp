#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "homology.hpp"
#include "matrix.hpp"
#include "words.hpp"

namespace cyclepair {

struct FreeBasis {};
struct LoopBasis {};

/// c0 + Σ deg1[i] x_i + Σ deg2[i][j] x_i x_j modulo degree three, where
/// x_i = (e_i - 1) over edges (FreeBasis) or (γ_i - 1) over loop
/// generators (LoopBasis).
template <typename Basis>
struct Truncated {
    Int c0 = 1;
    IntVector deg1;
    IntMatrix deg2;

    Truncated() = default;
    explicit Truncated(std::size_t n, Int constant = 1) : c0(constant), deg1(n, 0), deg2(n, n) {}

    std::size_t size() const noexcept { return deg1.size(); }

    static Truncated one(std::size_t n) { return Truncated(n, 1); }
    static Truncated zero(std::size_t n) { return Truncated(n, 0); }
    static Truncated generator(std::size_t n, std::size_t i) {
        Truncated x(n, 0);
        x.deg1[i] = 1;
        return x;
    }

    // [c0, deg1..., deg2 row-major]
    IntVector coordinates() const {
        IntVector v{c0};
        v.insert(v.end(), deg1.begin(), deg1.end());
        v.insert(v.end(), deg2.data().begin(), deg2.data().end());
        return v;
    }
    static Truncated from_coordinates(std::size_t n, const IntVector& v) {
        if (v.size() != 1 + n + n * n) throw Error(ErrorKind::BasisMismatch, "coordinate vector has the wrong length");
        Truncated x(n, v[0]);
        for (std::size_t i = 0; i < n; ++i) x.deg1[i] = v[1 + i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) x.deg2(i, j) = v[1 + n + i * n + j];
        return x;
    }

    friend bool operator==(const Truncated&, const Truncated&) = default;

    friend Truncated operator+(Truncated a, const Truncated& b) {
        check_same(a, b);
        a.c0 += b.c0;
        for (std::size_t i = 0; i < a.size(); ++i) a.deg1[i] += b.deg1[i];
        a.deg2 = a.deg2 + b.deg2;
        return a;
    }
    friend Truncated operator-(Truncated a, const Truncated& b) {
        check_same(a, b);
        a.c0 -= b.c0;
        for (std::size_t i = 0; i < a.size(); ++i) a.deg1[i] -= b.deg1[i];
        a.deg2 = a.deg2 - b.deg2;
        return a;
    }
    friend Truncated operator*(Int s, Truncated a) {
        a.c0 *= s;
        for (auto& x : a.deg1) x *= s;
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < a.size(); ++j) a.deg2(i, j) *= s;
        return a;
    }

    friend Truncated operator*(const Truncated& a, const Truncated& b) {
        check_same(a, b);
        const std::size_t n = a.size();
        Truncated c(n, a.c0 * b.c0);
        for (std::size_t i = 0; i < n; ++i) c.deg1[i] = a.c0 * b.deg1[i] + b.c0 * a.deg1[i];
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                c.deg2(i, j) = a.c0 * b.deg2(i, j) + b.c0 * a.deg2(i, j) + a.deg1[i] * b.deg1[j];
        return c;
    }

private:
    static void check_same(const Truncated& a, const Truncated& b) {
        if (a.size() != b.size()) throw Error(ErrorKind::BasisMismatch, "truncated elements over different bases");
    }
};

using TruncatedFreeElement = Truncated<FreeBasis>;
using TruncatedLoopElement = Truncated<LoopBasis>;

template <typename B>
Truncated<B> multiply(const Truncated<B>& a, const Truncated<B>& b) {
    return a * b;
}

// 1 + x for a positive letter, 1 - x + x^2 for an inverse letter.
template <typename B>
Truncated<B> letter_expand(std::size_t n, std::size_t i, int sign) {
    Truncated<B> x = Truncated<B>::one(n);
    x.deg1[i] = sign;
    if (sign < 0) x.deg2(i, i) = 1;
    return x;
}

inline TruncatedFreeElement word2_expand(const EdgeWord& w, int edge_count) {
    auto x = TruncatedFreeElement::one(edge_count);
    for (const auto& l : w) x = x * letter_expand<FreeBasis>(edge_count, l.edge, l.sign);
    return x;
}

inline bool reduce_check(const EdgeWord& w, const EdgeWord& w_reduced, int edge_count) {
    return word2_expand(w, edge_count) == word2_expand(w_reduced, edge_count);
}

/// Inverse of a group-like element 1 + y: 1 - y + y^2.
template <typename B>
Truncated<B> antipode_expand(const Truncated<B>& x) {
    if (x.c0 != 1) throw Error(ErrorKind::BasisMismatch, "antipode_expand needs a group-like element");
    const std::size_t n = x.size();
    Truncated<B> out(n, 1);
    for (std::size_t i = 0; i < n; ++i) out.deg1[i] = -x.deg1[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.deg2(i, j) = -x.deg2(i, j) + x.deg1[i] * x.deg1[j];
    return out;
}

/// Fundamental-loop generators of a pointed graph.
struct Generators {
    std::vector<EdgeWord> loops;
    int basepoint = 0;
    bool minimal = false; // vertex-join minimal generators
};

inline Generators tree_generators(const Multigraph& g, const CycleBasis& cb, int basepoint) {
    return Generators{generator_loops(g, cb, basepoint), basepoint, false};
}

/// Rewrite a loop at the basepoint in the tree generators: tree letters
/// vanish, non-tree edge j becomes γ_j^{±1}.
inline TruncatedLoopElement loop_to_pi1(const Multigraph& g, const CycleBasis& cb, const EdgeWord& w, int basepoint) {
    require_loop_at(g, w, basepoint);
    const std::size_t n = cb.genus();
    std::vector<int> gen_of(g.edges.size(), -1);
    for (std::size_t i = 0; i < n; ++i) gen_of[cb.non_tree[i]] = static_cast<int>(i);
    auto x = TruncatedLoopElement::one(n);
    for (const auto& l : w) {
        int j = gen_of[l.edge];
        if (j < 0) continue;
        x = x * letter_expand<LoopBasis>(n, j, l.sign);
    }
    return x;
}

inline IntVector homology_class(const TruncatedLoopElement& x) { return x.deg1; }

/// The embedding word2: linear, 1 -> 1, y_i -> word2(γ_i) - 1,
/// y_i y_j -> (word2(γ_i) - 1)(word2(γ_j) - 1).
inline TruncatedFreeElement word2_map(const TruncatedLoopElement& x, const Generators& gens, int edge_count) {
    if (x.size() != gens.loops.size()) throw Error(ErrorKind::BasisMismatch, "generator count mismatch");
    const std::size_t n = x.size();
    std::vector<TruncatedFreeElement> y;
    for (const auto& w : gens.loops) y.push_back(word2_expand(w, edge_count) - TruncatedFreeElement::one(edge_count));
    TruncatedFreeElement out = x.c0 * TruncatedFreeElement::one(edge_count);
    for (std::size_t i = 0; i < n; ++i)
        if (x.deg1[i] != 0) out = out + x.deg1[i] * y[i];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (x.deg2(i, j) != 0) out = out + x.deg2(i, j) * (y[i] * y[j]);
    return out;
}

struct MinimalGenerators {
    Generators gens;
    std::vector<int> delta1; // edge ids of Δ^1, in cyclic order from u
    std::vector<int> delta2;
    int join_vertex = 0;
    int c1 = 0;
    int c2 = 0;
};

namespace detail {

// Follow out-edges of class `cls` from v; returns letters until `stop`
// (or back to v when stop < 0).
inline EdgeWord follow_class(const Multigraph& g, const std::vector<bool>& in_class, int v, int stop) {
    EdgeWord w;
    int cur = v;
    std::vector<bool> used(g.edges.size(), false);
    do {
        if (stop >= 0 && cur == stop) break;
        int next_edge = -1;
        for (int e = 0; e < g.edge_count(); ++e)
            if (in_class[e] && !used[e] && g.edges[e].tail == cur) {
                next_edge = e;
                break;
            }
        if (next_edge < 0) throw Error(ErrorKind::NotCyclicallyOriented, "class edges do not form a directed cycle");
        used[next_edge] = true;
        w.push_back({next_edge, 1});
        cur = g.edges[next_edge].head;
    } while (stop >= 0 || cur != v);
    return w;
}

} // namespace detail

/// Minimal generators of a cyclically oriented vertex join Δ^1 ∨_u Δ^2.
/// `order` optionally fixes which class is Δ^1 (class ids into the
/// concyclicity partition); default is by smallest edge id.
inline MinimalGenerators minimal_generators(const PointedGraph& pg, std::optional<std::pair<int, int>> order = std::nullopt) {
    const Multigraph& g = pg.graph;
    validate(pg);
    auto part = concyclicity(g);
    if (part.classes.size() != 2) throw Error(ErrorKind::NotVertexJoin, "a vertex join has exactly two concyclicity classes");
    if (!is_cyclically_oriented(g, part)) throw Error(ErrorKind::NotCyclicallyOriented, "apply cyclic_orientation first");
    int i1 = 0, i2 = 1;
    if (order) std::tie(i1, i2) = *order;
    const auto& cls1 = part.classes[i1];
    const auto& cls2 = part.classes[i2];
    if (!is_cycle_subgraph(g, cls1) || !is_cycle_subgraph(g, cls2))
        throw Error(ErrorKind::NotVertexJoin, "classes are not cycles");
    std::vector<bool> in1 = edge_mask(g, cls1), in2 = edge_mask(g, cls2);
    std::vector<bool> on1(g.vertex_count, false), on2(g.vertex_count, false);
    for (int e : cls1) on1[g.edges[e].tail] = on1[g.edges[e].head] = true;
    for (int e : cls2) on2[g.edges[e].tail] = on2[g.edges[e].head] = true;
    int u = -1, shared = 0;
    for (int v = 0; v < g.vertex_count; ++v)
        if (on1[v] && on2[v]) {
            u = v;
            ++shared;
        }
    if (shared != 1) throw Error(ErrorKind::NotVertexJoin, "cycles must share exactly one vertex");

    MinimalGenerators mg;
    mg.join_vertex = u;
    mg.gens.basepoint = pg.basepoint;
    mg.gens.minimal = true;
    auto cyc1 = detail::follow_class(g, in1, u, -1);
    auto cyc2 = detail::follow_class(g, in2, u, -1);
    for (const auto& l : cyc1) mg.delta1.push_back(l.edge);
    for (const auto& l : cyc2) mg.delta2.push_back(l.edge);

    const int v = pg.basepoint;
    auto build = [&](bool v_on_mine, const std::vector<bool>& mine, const std::vector<bool>& other, int& c) {
        if (v_on_mine) {
            c = 0;
            return detail::follow_class(g, mine, v, -1);
        }
        EdgeWord path = detail::follow_class(g, other, v, u);
        c = static_cast<int>(path.size());
        EdgeWord w = concat(path, detail::follow_class(g, mine, u, -1));
        return concat(w, inverse_word(path));
    };
    mg.gens.loops.push_back(build(on1[v], in1, in2, mg.c1));
    mg.gens.loops.push_back(build(on2[v], in2, in1, mg.c2));
    return mg;
}

} // namespace cyclepair
