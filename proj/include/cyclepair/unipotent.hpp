#pragma once

#include <algorithm>
#include <array>
#include <cstdlib>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include "cycle_pairing.hpp"
#include "homology.hpp"
#include "matrix.hpp"
#include "torelli.hpp"
#include "truncated_algebra.hpp"

namespace cyclepair {

/// Everything about one pointed graph that the reconstruction reuses.
struct PointedData {
    PointedGraph pg;
    CycleBasis cb;
    Generators gens;
    ConcyclicityPartition part;
    RationalMatrix X;     // g x g^2: ∫_{γ_i} ω_a ω_b
    RationalMatrix G;
    RationalMatrix G_inv;
    std::vector<TruncatedFreeElement> word2_gens;

    std::size_t genus() const { return cb.genus(); }
    int edge_count() const { return pg.graph.edge_count(); }
};

inline PointedData make_pointed_data(const PointedGraph& pg) {
    validate(pg);
    require_bridgeless(pg.graph);
    PointedData d;
    d.pg = pg;
    d.cb = cycle_basis(pg.graph);
    d.gens = tree_generators(pg.graph, d.cb, pg.basepoint);
    d.part = concyclicity(pg.graph, d.cb);
    const std::size_t n = d.genus();
    d.X = RationalMatrix(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b)
                d.X(i, a * n + b) = integrate_word(d.gens.loops[i], {unit_vector(n, a), unit_vector(n, b)}, d.cb);
    d.G = convert<Rational>(d.cb.gram);
    auto inv = inverse(d.G);
    if (!inv) throw Error(ErrorKind::SingularPairing, "Gram matrix is singular");
    d.G_inv = *inv;
    for (const auto& w : d.gens.loops) d.word2_gens.push_back(word2_expand(w, pg.graph.edge_count()));
    return d;
}

/// Rational map on coordinates [c0, y_i, y_i y_j] (column vectors), source
/// tree basis to target tree basis.
struct CanonicalPhi {
    RationalMatrix matrix;
    IntMatrix isometry;
    RationalMatrix Y; // g x g^2 off-diagonal block: y_i -> M y_i + Σ Y[i][(k,l)] y'_k y'_l
};

namespace detail {

inline RationalMatrix assemble_phi(const IntMatrix& m, const RationalMatrix& Y) {
    const std::size_t n = m.rows();
    RationalMatrix out(1 + n + n * n, 1 + n + n * n);
    out(0, 0) = 1;
    RationalMatrix mq = convert<Rational>(m);
    RationalMatrix mm = kronecker(mq, mq);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) out(1 + k, 1 + i) = mq(k, i);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t r = 0; r < n * n; ++r) out(1 + n + r, 1 + i) = Y(i, r);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) out(1 + n + r, 1 + n + c) = mm(r, c);
    return out;
}

} // namespace detail

/// Closed form: Y = (X_A (N⊗N) - M^T X_B)(G_B^-1 ⊗ G_B^-1), N = M^-1.
inline CanonicalPhi canonical_phi(const PointedData& a, const PointedData& b, const IntMatrix& m) {
    const std::size_t n = a.genus();
    if (b.genus() != n || m.rows() != n || m.cols() != n) throw Error(ErrorKind::RankMismatch, "isometry shape mismatch");
    CanonicalPhi phi;
    phi.isometry = m;
    RationalMatrix nq = convert<Rational>(integer_inverse(m));
    RationalMatrix lhs = a.X * kronecker(nq, nq) - convert<Rational>(m).transpose() * b.X;
    phi.Y = lhs * kronecker(b.G_inv, b.G_inv);
    phi.matrix = detail::assemble_phi(m, phi.Y);
    return phi;
}

/// Independent route: F = P_A T^-1 P_B^-1 with T = M ⊕ (M⊗M); Φ = 1 ⊕ F^T.
inline RationalMatrix canonical_phi_full(const PointedGraph& pa, const PointedGraph& pb, const IntMatrix& m) {
    auto P_A = pairing_tensor(pa).matrix;
    auto P_B = pairing_tensor(pb).matrix;
    RationalMatrix mq = convert<Rational>(m);
    auto T = direct_sum(mq, kronecker(mq, mq));
    auto T_inv = inverse(T);
    auto P_B_inv = inverse(P_B);
    if (!T_inv || !P_B_inv) throw Error(ErrorKind::SingularPairing, "pairing tensor or isometry is singular");
    RationalMatrix F = P_A * *T_inv * *P_B_inv;
    RationalMatrix one(1, 1);
    one(0, 0) = 1;
    return direct_sum(one, F.transpose());
}

inline RationalMatrix phi_inverse(const CanonicalPhi& phi) {
    const std::size_t n = phi.isometry.rows();
    IntMatrix ninv = integer_inverse(phi.isometry);
    RationalMatrix nq = convert<Rational>(ninv);
    RationalMatrix nn = kronecker(nq, nq);
    // y'_k -> N y'_k - (N⊗N) Y^T N
    RationalMatrix corr = nn * phi.Y.transpose() * nq;
    RationalMatrix out(1 + n + n * n, 1 + n + n * n);
    out(0, 0) = 1;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) out(1 + k, 1 + i) = nq(k, i);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t i = 0; i < n; ++i) out(1 + n + r, 1 + i) = -corr(r, i);
    for (std::size_t r = 0; r < n * n; ++r)
        for (std::size_t c = 0; c < n * n; ++c) out(1 + n + r, 1 + n + c) = nn(r, c);
    return out;
}

inline bool is_integral(const CanonicalPhi& phi) {
    return is_integral(phi.matrix) && is_integral(phi_inverse(phi));
}

inline TruncatedLoopElement apply_phi(const CanonicalPhi& phi, const TruncatedLoopElement& x) {
    const std::size_t n = phi.isometry.rows();
    IntVector c = x.coordinates();
    std::vector<Rational> cq;
    for (Int v : c) cq.push_back(Rational(static_cast<long>(v)));
    auto img = phi.matrix * cq;
    IntVector out;
    for (const auto& v : img) {
        if (v.get_den() != 1) throw Error(ErrorKind::NotInduced, "phi is not integral");
        out.push_back(v.get_num().get_si());
    }
    return TruncatedLoopElement::from_coordinates(n, out);
}

/// Reads e_1...e_d off deg2[e_i][e_j] = 1 exactly when i < j.
inline std::vector<int> recover_cyclic_order(const TruncatedFreeElement& x) {
    std::vector<int> edges;
    for (std::size_t e = 0; e < x.size(); ++e) {
        if (x.deg1[e] == 0) continue;
        if (x.deg1[e] != 1) throw Error(ErrorKind::NotCyclicOrder, "edge appears with multiplicity other than one");
        edges.push_back(static_cast<int>(e));
    }
    std::vector<std::pair<int, int>> later;
    for (int e : edges) {
        int count = 0;
        for (int f : edges) count += static_cast<int>(x.deg2(e, f));
        later.push_back({-count, e});
    }
    std::sort(later.begin(), later.end());
    std::vector<int> order;
    for (auto& [c, e] : later) order.push_back(e);
    for (std::size_t i = 0; i < order.size(); ++i)
        for (std::size_t j = 0; j < order.size(); ++j)
            if (x.deg2(order[i], order[j]) != (i < j ? 1 : 0))
                throw Error(ErrorKind::NotCyclicOrder, "degree-two pattern is not a strict linear order");
    return order;
}

struct ClassWalk {
    std::vector<int> order; // edges of the class in traversal order from the basepoint image
    std::vector<int> dir;   // +1 when traversed tail -> head
};

namespace detail {

// Walk the cycle graph Γ(C) from the basepoint image so that the class's
// reference edge is traversed forwards.
inline ClassWalk walk_class(const Multigraph& g, const std::vector<int>& cls, int basepoint) {
    auto con = contract(g, edge_mask(g, cls));
    const Multigraph& h = con.graph;
    if (!is_cycle_graph(h)) throw Error(ErrorKind::NotInduced, "class contraction is not a cycle graph");
    std::vector<int> back(h.edges.size());
    for (int e : cls) back[con.edge_map[e]] = e;
    int start = con.vertex_map[basepoint];
    ClassWalk w;
    std::vector<bool> used(h.edges.size(), false);
    int cur = start;
    auto inc = incidence(h);
    for (std::size_t step = 0; step < h.edges.size(); ++step) {
        int next = -1;
        for (int e : inc[cur])
            if (!used[e]) {
                next = e;
                break;
            }
        used[next] = true;
        int d = h.edges[next].tail == cur ? 1 : -1;
        w.order.push_back(back[next]);
        w.dir.push_back(d);
        cur = h.edges[next].other(cur);
    }
    int ref = cls.front();
    auto pos = std::find(w.order.begin(), w.order.end(), ref) - w.order.begin();
    if (w.dir[pos] < 0) {
        std::reverse(w.order.begin(), w.order.end());
        std::reverse(w.dir.begin(), w.dir.end());
        for (auto& d : w.dir) d = -d;
    }
    // confirm the walk through the degree-two pattern of its own word
    EdgeWord word;
    for (int e : w.order) word.push_back({e, 1});
    if (recover_cyclic_order(word2_expand(word, g.edge_count())) != w.order)
        throw Error(ErrorKind::NotCyclicOrder, "cyclic order recovery disagrees with the walk");
    return w;
}

// ρ_C on coordinates [c0, y_i, y_iy_j] -> [c0, y, y^2] with n_i the winding of
// γ_i around C measured on the reference edge.
inline RationalMatrix class_contraction(const PointedData& d, int cls) {
    const std::size_t n = d.genus();
    int ref = d.part.classes[cls].front();
    RationalMatrix rho(3, 1 + n + n * n);
    rho(0, 0) = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int ni = d.cb.basis[i][ref];
        rho(1, 1 + i) = static_cast<long>(ni);
        rho(2, 1 + i) = ratio(ni * (ni - 1), 2);
        for (std::size_t j = 0; j < n; ++j) rho(2, 1 + n + i * n + j) = static_cast<long>(ni * d.cb.basis[j][ref]);
    }
    return rho;
}

inline RationalMatrix class_contraction_right_inverse(const PointedData& d, int cls) {
    const std::size_t n = d.genus();
    int ref = d.part.classes[cls].front();
    std::size_t i = 0;
    while (i < n && d.cb.basis[i][ref] == 0) ++i;
    if (i == n) throw Error(ErrorKind::HasBridge, "class meets no generator");
    Rational ni = static_cast<long>(d.cb.basis[i][ref]);
    RationalMatrix r(1 + n + n * n, 3);
    r(0, 0) = 1;
    std::size_t sq = 1 + n + i * n + i;
    r(sq, 2) = 1 / (ni * ni);
    // y = (y_i - C(n_i,2) y^2) / n_i
    r(1 + i, 1) = 1 / ni;
    r(sq, 1) = -(ni * (ni - 1) / 2) / (ni * ni * ni);
    return r;
}

} // namespace detail

struct ReconstructionCertificate {
    std::vector<int> edge_map;
    std::vector<int> edge_sign; // relative to the input orientations
    std::vector<int> vertex_map;
    std::vector<int> class_target;
    std::vector<int> class_sign;      // +1 when the class generator goes to the target's
    std::vector<std::vector<int>> source_orders;
    std::vector<std::vector<int>> target_orders;
    std::vector<std::array<int, 4>> join_constants; // (C, D, c1, c2) per class pair
    IntMatrix isometry;
    Int word2_residual = 0;

    friend bool operator<(const ReconstructionCertificate& x, const ReconstructionCertificate& y) {
        return std::tie(x.edge_map, x.edge_sign, x.vertex_map) < std::tie(y.edge_map, y.edge_sign, y.vertex_map);
    }
};

namespace detail {

inline Multigraph contraction_oriented(const Multigraph& g, const std::vector<int>& edges, const std::vector<int>& orient,
                                       int basepoint, int& base_out, std::vector<int>& edge_map_out) {
    auto con = contract(g, edge_mask(g, edges));
    std::vector<int> signs(con.graph.edges.size(), 1);
    for (int e : edges) signs[con.edge_map[e]] = orient[e];
    base_out = con.vertex_map[basepoint];
    edge_map_out = con.edge_map;
    return reorient(con.graph, signs);
}

} // namespace detail

/// Build the edge bijection from an integral canonical φ and verify it is
/// a pointed isomorphism. Any inconsistency raises NotInduced.
inline ReconstructionCertificate reconstruct(const PointedData& a, const PointedData& b, const CanonicalPhi& phi) {
    const std::size_t n = a.genus();
    if (!is_integral(phi.matrix)) throw Error(ErrorKind::NotInduced, "phi is not integral");
    auto cbij = class_bijection_from_isometry(phi.isometry, a.part, b.part);
    if (!cbij) throw Error(ErrorKind::NotInduced, "isometry matches no class bijection");
    ReconstructionCertificate cert;
    cert.isometry = phi.isometry;
    cert.class_target = cbij->target;
    const std::size_t m = a.edge_count();
    cert.edge_map.assign(m, -1);
    cert.edge_sign.assign(m, 0);
    std::vector<int> walk_dir_a(m, 0), walk_dir_b(m, 0);

    for (std::size_t c = 0; c < a.part.classes.size(); ++c) {
        int c2 = cbij->target[c];
        auto rho_a = detail::class_contraction(a, static_cast<int>(c));
        auto rho_b = detail::class_contraction(b, c2);
        auto phi_c = rho_b * phi.matrix * detail::class_contraction_right_inverse(a, static_cast<int>(c));
        if (!(rho_b * phi.matrix - phi_c * rho_a).is_zero())
            throw Error(ErrorKind::NotInduced, "contraction square does not commute for class " + std::to_string(c));
        RationalMatrix plus = RationalMatrix::identity(3);
        RationalMatrix minus = RationalMatrix::identity(3);
        minus(1, 1) = -1;
        minus(2, 1) = 1;
        int sign = 0;
        if (phi_c == plus) sign = 1;
        else if (phi_c == minus) sign = -1;
        else throw Error(ErrorKind::NotInduced, "class map is not δ -> δ'^{±1} for class " + std::to_string(c));
        cert.class_sign.push_back(sign);

        auto wa = detail::walk_class(a.pg.graph, a.part.classes[c], a.pg.basepoint);
        auto wb = detail::walk_class(b.pg.graph, b.part.classes[c2], b.pg.basepoint);
        if (wa.order.size() != wb.order.size()) throw Error(ErrorKind::NotInduced, "class sizes differ");
        const std::size_t d = wa.order.size();
        for (std::size_t k = 0; k < d; ++k) {
            std::size_t kb = sign > 0 ? k : d - 1 - k;
            int e = wa.order[k];
            int f = wb.order[kb];
            cert.edge_map[e] = f;
            cert.edge_sign[e] = wa.dir[k] * wb.dir[kb] * sign;
            walk_dir_a[e] = wa.dir[k];
        }
        for (std::size_t k = 0; k < d; ++k) walk_dir_b[wb.order[k]] = wb.dir[k] * sign;
        cert.source_orders.push_back(wa.order);
        std::vector<int> tb;
        for (std::size_t k = 0; k < d; ++k) tb.push_back(wb.order[sign > 0 ? k : d - 1 - k]);
        cert.target_orders.push_back(tb);
    }

    std::vector<bool> hit(m, false);
    for (int f : cert.edge_map) {
        if (f < 0 || hit[f]) throw Error(ErrorKind::NotInduced, "edge map is not a bijection");
        hit[f] = true;
    }

    // vertex-join constants on every pair of classes
    const std::size_t k = a.part.classes.size();
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = c + 1; d < k; ++d) {
            std::vector<int> ea = a.part.classes[c], eb_src = a.part.classes[d];
            std::vector<int> edges_a = ea;
            edges_a.insert(edges_a.end(), eb_src.begin(), eb_src.end());
            std::sort(edges_a.begin(), edges_a.end());
            std::vector<int> edges_b;
            for (int e : edges_a) edges_b.push_back(cert.edge_map[e]);
            std::sort(edges_b.begin(), edges_b.end());
            int base_a = 0, base_b = 0;
            std::vector<int> map_a, map_b;
            auto ga = detail::contraction_oriented(a.pg.graph, edges_a, walk_dir_a, a.pg.basepoint, base_a, map_a);
            auto gb = detail::contraction_oriented(b.pg.graph, edges_b, walk_dir_b, b.pg.basepoint, base_b, map_b);
            auto class_of = [](const Multigraph& h, int edge) {
                auto p = concyclicity(h);
                return p.edge_class[edge];
            };
            int a1 = class_of(ga, map_a[a.part.classes[c].front()]);
            int b1 = class_of(gb, map_b[cert.edge_map[a.part.classes[c].front()]]);
            auto mga = minimal_generators({ga, base_a}, std::make_pair(a1, 1 - a1));
            auto mgb = minimal_generators({gb, base_b}, std::make_pair(b1, 1 - b1));
            if (mga.c1 != mgb.c1 || mga.c2 != mgb.c2)
                throw Error(ErrorKind::NotInduced, "vertex-join constants differ for classes " + std::to_string(c) + "," + std::to_string(d));
            cert.join_constants.push_back({static_cast<int>(c), static_cast<int>(d), mga.c1, mga.c2});
        }

    // non-abelian Whitney: ZFΦ(word2(γ_i)) = word2'(φ(γ_i))
    for (std::size_t i = 0; i < n; ++i) {
        EdgeWord mapped;
        for (const auto& l : a.gens.loops[i]) mapped.push_back({cert.edge_map[l.edge], l.sign * cert.edge_sign[l.edge]});
        auto lhs = word2_expand(mapped, b.edge_count());
        auto image = apply_phi(phi, TruncatedLoopElement::generator(n, i));
        image.c0 = 1;
        auto rhs = word2_map(image, b.gens, b.edge_count());
        auto diff = lhs - rhs;
        Int residual = std::abs(diff.c0);
        for (Int v : diff.deg1) residual += std::abs(v);
        for (Int v : diff.deg2.data()) residual += std::abs(v);
        cert.word2_residual += residual;
    }
    if (cert.word2_residual != 0) throw Error(ErrorKind::NotInduced, "word2 diagram does not commute");

    const Multigraph& ga = a.pg.graph;
    const Multigraph& gb = b.pg.graph;
    cert.vertex_map.assign(ga.vertex_count, -1);
    auto assign = [&](int v, int w) {
        if (cert.vertex_map[v] >= 0 && cert.vertex_map[v] != w) throw Error(ErrorKind::NotInduced, "edge map is not induced by a vertex map");
        cert.vertex_map[v] = w;
    };
    for (std::size_t e = 0; e < m; ++e) {
        const Edge& s = ga.edges[e];
        const Edge& t = gb.edges[cert.edge_map[e]];
        if (cert.edge_sign[e] > 0) {
            assign(s.tail, t.tail);
            assign(s.head, t.head);
        } else {
            assign(s.tail, t.head);
            assign(s.head, t.tail);
        }
    }
    if (ga.vertex_count == 1 && cert.vertex_map[0] < 0) cert.vertex_map[0] = 0;
    if (ga.vertex_count != gb.vertex_count) throw Error(ErrorKind::NotInduced, "vertex counts differ");
    std::vector<bool> vhit(gb.vertex_count, false);
    for (int w : cert.vertex_map) {
        if (w < 0 || vhit[w]) throw Error(ErrorKind::NotInduced, "vertex map is not a bijection");
        vhit[w] = true;
    }
    if (cert.vertex_map[a.pg.basepoint] != b.pg.basepoint) throw Error(ErrorKind::NotInduced, "basepoint is not preserved");
    return cert;
}

/// ρ_E: Zπ1(Γ,v)/J^3 -> Zπ1(Γ(E),v)/J^3 on coordinates, for the tree
/// generators on both sides. Returns rows for the target coordinates.
inline RationalMatrix contraction_map(const PointedData& d, const std::vector<int>& edges) {
    const Multigraph& g = d.pg.graph;
    auto con = contract(g, edge_mask(g, edges));
    auto cb = cycle_basis(con.graph);
    int base = con.vertex_map[d.pg.basepoint];
    const std::size_t n = d.genus();
    const std::size_t h = cb.genus();
    std::vector<TruncatedLoopElement> y;
    for (const auto& w : d.gens.loops) {
        EdgeWord image;
        for (const auto& l : w)
            if (con.edge_map[l.edge] >= 0) image.push_back({con.edge_map[l.edge], l.sign});
        y.push_back(loop_to_pi1(con.graph, cb, image, base) - TruncatedLoopElement::one(h));
    }
    RationalMatrix rho(1 + h + h * h, 1 + n + n * n);
    auto put = [&](std::size_t col, const TruncatedLoopElement& x) {
        IntVector c = x.coordinates();
        for (std::size_t r = 0; r < c.size(); ++r) rho(r, col) = static_cast<long>(c[r]);
    };
    put(0, TruncatedLoopElement::one(h));
    for (std::size_t i = 0; i < n; ++i) put(1 + i, y[i]);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) put(1 + n + i * n + j, y[i] * y[j]);
    return rho;
}

/// Stack the contractions onto every pair of classes (or the single class)
/// and test full column rank on J/J^3.
inline bool joint_contraction_injectivity(const PointedData& d) {
    const auto& cls = d.part.classes;
    std::vector<RationalMatrix> blocks;
    if (cls.size() == 1) blocks.push_back(contraction_map(d, cls[0]));
    for (std::size_t c = 0; c < cls.size(); ++c)
        for (std::size_t e = c + 1; e < cls.size(); ++e) {
            std::vector<int> edges = cls[c];
            edges.insert(edges.end(), cls[e].begin(), cls[e].end());
            blocks.push_back(contraction_map(d, edges));
        }
    const std::size_t n = d.genus();
    std::size_t rows = 0;
    for (const auto& b : blocks) rows += b.rows() - 1;
    RationalMatrix stacked(rows, n + n * n);
    std::size_t r0 = 0;
    for (const auto& b : blocks) {
        for (std::size_t r = 1; r < b.rows(); ++r)
            for (std::size_t c = 0; c < n + n * n; ++c) stacked(r0 + r - 1, c) = b(r, 1 + c);
        r0 += b.rows() - 1;
    }
    return rank(stacked) == n + n * n;
}

struct DecideOptions {
    std::size_t isometry_limit = 10000;
    unsigned jobs = 1;
};

struct DecideResult {
    std::optional<ReconstructionCertificate> certificate;
    std::size_t isometries = 0;
    std::size_t graphic = 0;   // survived the class-bijection filter
    std::size_t integral = 0;
    std::size_t certificates = 0;
    bool truncated = false;
    std::vector<std::string> anomalies; // integral φ that failed to reconstruct
    std::vector<ReconstructionCertificate> all; // filled when requested
};

inline DecideResult decide_pointed_isomorphism(const PointedData& a, const PointedData& b, const DecideOptions& opt = {},
                                               bool keep_all = false) {
    DecideResult res;
    if (a.genus() != b.genus() || a.part.classes.size() != b.part.classes.size()) return res;
    auto list = enumerate_isometries(a.cb.gram, b.cb.gram, opt.isometry_limit);
    res.isometries = list.isometries.size();
    res.truncated = list.truncated;
    std::mutex lock;
    auto work = [&](std::size_t begin, std::size_t step) {
        DecideResult local;
        for (std::size_t idx = begin; idx < list.isometries.size(); idx += step) {
            const auto& m = list.isometries[idx];
            if (!class_bijection_from_isometry(m, a.part, b.part)) continue;
            ++local.graphic;
            auto phi = canonical_phi(a, b, m);
            if (!is_integral(phi)) continue;
            ++local.integral;
            try {
                auto cert = reconstruct(a, b, phi);
                ++local.certificates;
                if (!local.certificate || cert < *local.certificate) local.certificate = cert;
                if (keep_all) local.all.push_back(std::move(cert));
            } catch (const Error& e) {
                local.anomalies.push_back(e.what());
            }
        }
        std::lock_guard<std::mutex> guard(lock);
        res.graphic += local.graphic;
        res.integral += local.integral;
        res.certificates += local.certificates;
        if (local.certificate && (!res.certificate || *local.certificate < *res.certificate)) res.certificate = local.certificate;
        res.anomalies.insert(res.anomalies.end(), local.anomalies.begin(), local.anomalies.end());
        res.all.insert(res.all.end(), local.all.begin(), local.all.end());
    };
    const unsigned jobs = std::max(1u, opt.jobs);
    if (jobs == 1) work(0, 1);
    else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work, t, jobs);
        for (auto& th : pool) th.join();
    }
    std::sort(res.anomalies.begin(), res.anomalies.end());
    std::sort(res.all.begin(), res.all.end());
    return res;
}

inline DecideResult decide_pointed_isomorphism(const PointedGraph& a, const PointedGraph& b, const DecideOptions& opt = {}) {
    return decide_pointed_isomorphism(make_pointed_data(a), make_pointed_data(b), opt);
}

} // namespace cyclepair
