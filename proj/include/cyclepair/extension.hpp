#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "cycle_pairing.hpp"
#include "homology.hpp"
#include "isomorphism.hpp"
#include "smith.hpp"
#include "torelli.hpp"
#include "truncated_algebra.hpp"
#include "two_moves.hpp"

namespace cyclepair {

/// coker(G⊗G)^g, presented through the Smith form of G⊗G.
struct J2Group {
    std::size_t genus = 0;
    SmithForm snf;

    // Nontrivial invariant factors of the whole group (one block per row of μ).
    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> one = snf.invariant_factors(), out;
        for (std::size_t i = 0; i < genus; ++i) out.insert(out.end(), one.begin(), one.end());
        return out;
    }
    Integer order() const {
        Integer n = 1;
        for (const auto& d : invariant_factors()) n *= d;
        return n;
    }
    // 0 for a finite group; G is positive definite so this always holds.
    std::size_t free_rank() const { return genus * (snf.diagonal.size() - snf.rank); }
};

inline J2Group j2_group(const CycleBasis& cb) {
    J2Group j;
    j.genus = cb.genus();
    auto g = convert<Integer>(cb.gram);
    j.snf = smith_normal_form(kronecker(g, g));
    return j;
}

struct HarmonicVolume {
    IntMatrix mu;                     // g x g^2, row α, column a*g + b
    std::vector<Integer> normal_form; // residues per row, trivial factors dropped
};

/// Residues of U·μ_α modulo the invariant factors, concatenated over rows.
inline std::vector<Integer> normal_form(const J2Group& j, const IntMatrix& mu) {
    std::vector<Integer> out;
    const std::size_t n2 = j.genus * j.genus;
    for (std::size_t a = 0; a < mu.rows(); ++a) {
        std::vector<Integer> row(n2);
        for (std::size_t c = 0; c < n2; ++c) row[c] = static_cast<long>(mu(a, c));
        auto u = j.snf.U * row;
        for (std::size_t k = 0; k < n2; ++k) {
            const Integer& d = j.snf.diagonal[k];
            if (d == 1) continue;
            if (d == 0) {
                out.push_back(u[k]);
                continue;
            }
            Integer r = u[k] % d;
            if (r < 0) r += d;
            out.push_back(r);
        }
    }
    return out;
}

namespace detail {

// Coordinates of each generator's homology class; rows are generators.
inline IntMatrix generator_coordinates(const CycleBasis& cb, const Generators& gens) {
    const std::size_t n = cb.genus();
    IntMatrix c(gens.loops.size(), n);
    for (std::size_t i = 0; i < gens.loops.size(); ++i) {
        auto x = cb.coordinates(chain_of_word(gens.loops[i], cb.edge_count));
        for (std::size_t a = 0; a < n; ++a) c(i, a) = x[a];
    }
    return c;
}

// Re-express rows given on generator classes in the cycle basis.
inline IntMatrix to_basis_rows(const CycleBasis& cb, const Generators& gens, const IntMatrix& per_generator) {
    IntMatrix cinv = integer_inverse(generator_coordinates(cb, gens));
    return cinv * per_generator;
}

} // namespace detail

/// μ(b_α)(ω_a ⊗ ω_b) = Σ_{e,f} B_ef ω_a(e) ω_b(f) with B the degree-two part
/// of word2(σ(α)); rows are in the cycle basis whatever the generators.
inline IntMatrix harmonic_mu(const Multigraph& g, const CycleBasis& cb, const Generators& gens) {
    const std::size_t n = cb.genus();
    if (gens.loops.size() != n) throw Error(ErrorKind::BasisMismatch, "need one generator per basis cycle");
    IntMatrix per_gen(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        require_loop_at(g, gens.loops[i], gens.basepoint);
        auto x = word2_expand(gens.loops[i], g.edge_count());
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Int s = 0;
                for (int e = 0; e < g.edge_count(); ++e) {
                    if (cb.basis[a][e] == 0) continue;
                    for (int f = 0; f < g.edge_count(); ++f) s += x.deg2(e, f) * cb.basis[a][e] * cb.basis[b][f];
                }
                per_gen(i, a * n + b) = s;
            }
    }
    return detail::to_basis_rows(cb, gens, per_gen);
}

/// The two-term formula ∫_σ(α) ω_aω_b - ∫_τ(word1 α) ω_aω_b, per generator.
inline RationalMatrix harmonic_mu_rational(const Multigraph& g, const CycleBasis& cb, const Generators& gens) {
    const std::size_t n = cb.genus();
    RationalMatrix per_gen(n, n * n);
    for (std::size_t i = 0; i < n; ++i) {
        IntVector c = chain_of_word(gens.loops[i], g.edge_count());
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Rational v = integrate_word(gens.loops[i], {unit_vector(n, a), unit_vector(n, b)}, cb);
                Rational tau = 0;
                for (int e = 0; e < g.edge_count(); ++e)
                    tau += ratio(c[e] * cb.basis[a][e] * cb.basis[b][e], 2);
                per_gen(i, a * n + b) = v - tau;
            }
    }
    auto cinv = convert<Rational>(integer_inverse(detail::generator_coordinates(cb, gens)));
    return cinv * per_gen;
}

inline HarmonicVolume harmonic_volume(const Multigraph& g, const CycleBasis& cb, const Generators& gens, const J2Group& j) {
    HarmonicVolume hv;
    hv.mu = harmonic_mu(g, cb, gens);
    hv.normal_form = normal_form(j, hv.mu);
    return hv;
}

inline HarmonicVolume harmonic_volume(const PointedGraph& pg) {
    validate(pg);
    require_bridgeless(pg.graph);
    auto cb = cycle_basis(pg.graph);
    return harmonic_volume(pg.graph, cb, tree_generators(pg.graph, cb, pg.basepoint), j2_group(cb));
}

/// Two generator systems with the same classes give the same point of 𝒥₂.
inline bool section_ambiguity_check(const Multigraph& g, const Generators& gens, const Generators& gens_alt) {
    auto cb = cycle_basis(g);
    auto j = j2_group(cb);
    return harmonic_volume(g, cb, gens, j).normal_form == harmonic_volume(g, cb, gens_alt, j).normal_form;
}

/// Move μ along a signed edge map H -> H' inducing the isometry m (columns
/// are images of H's basis). Flipped edges F add
/// K_F[α][(c,d)] = Σ_{e∈F} b_α[e] b_c[e] b_d[e] before the change of basis.
inline IntMatrix transport_mu(const IntMatrix& mu, const CycleBasis& cb, const IntMatrix& m, const std::vector<int>& edge_sign) {
    const std::size_t n = cb.genus();
    IntMatrix shifted = mu;
    for (int e = 0; e < cb.edge_count; ++e) {
        if (edge_sign.empty() || edge_sign[e] > 0) continue;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) shifted(a, c * n + d) += cb.basis[a][e] * cb.basis[c][e] * cb.basis[d][e];
    }
    IntMatrix inv = integer_inverse(m);
    IntMatrix out(n, n * n);
    for (std::size_t al = 0; al < n; ++al)
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                Int s = 0;
                for (std::size_t i = 0; i < n; ++i) {
                    if (inv(i, al) == 0) continue;
                    for (std::size_t c = 0; c < n; ++c) {
                        if (inv(c, a) == 0) continue;
                        for (std::size_t d = 0; d < n; ++d) s += inv(i, al) * inv(c, a) * inv(d, b) * shifted(i, c * n + d);
                    }
                }
                out(al, a * n + b) = s;
            }
    return out;
}

struct GraphicAutomorphism {
    IntMatrix isometry;
    SignedEdgeMap edges;
};

/// Isometries of H1(g) that come from a class bijection, with their
/// representing signed edge maps. Expects a cyclically oriented g.
inline std::vector<GraphicAutomorphism> graphic_automorphisms(const Multigraph& g, const CycleBasis& cb,
                                                              const ConcyclicityPartition& part, std::size_t limit = 10000) {
    std::vector<GraphicAutomorphism> out;
    for (const auto& m : enumerate_isometries(cb.gram, cb.gram, limit).isometries) {
        auto cbij = class_bijection_from_isometry(m, part, part);
        if (!cbij) continue;
        auto rep = representing_edge_map(*cbij, part, part);
        auto induced = two_isomorphism_from_edge_bijection(g, cb, g, cb, rep.edge_map, rep.edge_sign);
        if (!induced || *induced != m) continue;
        out.push_back({m, rep});
    }
    return out;
}

struct NuMember {
    int orbit_index = 0;
    int basepoint = 0;
    Multigraph graph;
    std::vector<int> edge_sign; // to the base graph
    IntMatrix mu;               // in the base graph's basis
    std::vector<Integer> key;   // least normal form over graphic automorphisms
};

struct NuReport {
    Multigraph base;
    std::vector<Integer> invariant_factors;
    std::size_t orbit_size = 0;
    std::size_t automorphisms = 0;
    std::vector<NuMember> members;
    std::size_t pairs = 0;
    std::size_t equal_nu = 0;
    std::size_t isomorphic_pairs = 0;
    std::size_t distinct_values = 0;
    std::vector<std::pair<int, int>> collisions;     // equal ν, not pointed-isomorphic
    std::vector<std::pair<int, int>> missed;         // pointed-isomorphic, different ν
    bool ok() const { return collisions.empty() && missed.empty(); }
};

/// Harmonic volumes of every pointing of every graph in the 2-move orbit,
/// moved to the base graph's 𝒥₂ and compared against the pointed
/// isomorphism oracle.
inline NuReport nu_injectivity_experiment(const Multigraph& input, int budget) {
    NuReport rep;
    require_bridgeless(input);
    rep.base = cyclic_orientation(input).graph;
    auto cb = cycle_basis(rep.base);
    auto part = concyclicity(rep.base, cb);
    auto j = j2_group(cb);
    rep.invariant_factors = j.invariant_factors();
    auto autos = graphic_automorphisms(rep.base, cb, part);
    rep.automorphisms = autos.size();
    auto orbit = enumerate_two_move_orbit(rep.base, budget);
    rep.orbit_size = orbit.size();

    std::vector<int> identity(rep.base.edges.size());
    std::iota(identity.begin(), identity.end(), 0);
    for (std::size_t o = 0; o < orbit.size(); ++o) {
        const auto& h = orbit[o].graph;
        auto hcb = cycle_basis(h);
        auto m = two_isomorphism_from_edge_bijection(h, hcb, rep.base, cb, identity, orbit[o].edge_sign);
        if (!m) throw Error(ErrorKind::NotInduced, "orbit member is not 2-isomorphic through its recorded signs");
        for (int v = 0; v < h.vertex_count; ++v) {
            NuMember mem;
            mem.orbit_index = static_cast<int>(o);
            mem.basepoint = v;
            mem.graph = h;
            mem.edge_sign = orbit[o].edge_sign;
            auto mu_h = harmonic_mu(h, hcb, tree_generators(h, hcb, v));
            mem.mu = transport_mu(mu_h, hcb, *m, orbit[o].edge_sign);
            for (const auto& a : autos) {
                auto nf = normal_form(j, transport_mu(mem.mu, cb, a.isometry, a.edges.edge_sign));
                if (mem.key.empty() || nf < mem.key) mem.key = nf;
            }
            if (autos.empty()) mem.key = normal_form(j, mem.mu);
            rep.members.push_back(std::move(mem));
        }
    }
    std::map<std::vector<Integer>, int> values;
    for (const auto& mem : rep.members) values[mem.key] += 1;
    rep.distinct_values = values.size();
    for (std::size_t x = 0; x < rep.members.size(); ++x)
        for (std::size_t y = x + 1; y < rep.members.size(); ++y) {
            const auto& a = rep.members[x];
            const auto& b = rep.members[y];
            ++rep.pairs;
            bool same = a.key == b.key;
            bool iso = isomorphic(PointedGraph{a.graph, a.basepoint}, PointedGraph{b.graph, b.basepoint}).has_value();
            rep.equal_nu += same;
            rep.isomorphic_pairs += iso;
            if (same && !iso) rep.collisions.push_back({static_cast<int>(x), static_cast<int>(y)});
            if (!same && iso) rep.missed.push_back({static_cast<int>(x), static_cast<int>(y)});
        }
    return rep;
}

} // namespace cyclepair
