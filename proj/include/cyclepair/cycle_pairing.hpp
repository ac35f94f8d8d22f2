#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "homology.hpp"
#include "matrix.hpp"
#include "truncated_algebra.hpp"
#include "words.hpp"

namespace cyclepair {

// ω_1 ⊗ ... ⊗ ω_k, each factor in cycle-basis coordinates.
using TensorWord = std::vector<IntVector>;

struct PairingOptions {
    int k_max = 6;
    int inverse_sign = -1; // [e^-1] = inverse_sign * [e]; anything but -1 is a deliberate bug
};

namespace detail {

inline Rational factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return Rational(f);
}

// a[t][j] = <ω_t, [letter j]>
inline std::vector<std::vector<Int>> letter_values(const EdgeWord& alpha, const TensorWord& omega, const CycleBasis& cb,
                                                   const PairingOptions& opt) {
    std::vector<std::vector<Int>> a(omega.size(), std::vector<Int>(alpha.size(), 0));
    for (std::size_t t = 0; t < omega.size(); ++t) {
        IntVector chain = cb.to_chain(omega[t]);
        for (std::size_t j = 0; j < alpha.size(); ++j)
            a[t][j] = (alpha[j].sign > 0 ? 1 : opt.inverse_sign) * chain[alpha[j].edge];
    }
    return a;
}

inline void check_k(std::size_t k, const PairingOptions& opt) {
    if (static_cast<int>(k) > opt.k_max)
        throw Error(ErrorKind::KTooLarge, "tensor length " + std::to_string(k) + " exceeds k_max " + std::to_string(opt.k_max));
}

} // namespace detail

/// Nonnegative compositions (n_1, ..., n_r) of k, i.e. weakly increasing
/// maps {1..k} -> {1..r} counted by fibre sizes.
inline void for_each_composition(int k, int r, const std::function<void(const std::vector<int>&)>& visit) {
    if (r == 0) {
        if (k == 0) visit({});
        return;
    }
    std::vector<int> n(r, 0);
    std::function<void(int, int)> rec = [&](int j, int left) {
        if (j == r - 1) {
            n[j] = left;
            visit(n);
            return;
        }
        for (int x = 0; x <= left; ++x) {
            n[j] = x;
            rec(j + 1, left - x);
        }
    };
    rec(0, k);
}

/// ∫_α ω_1...ω_k = Σ_{f ∈ Δ(k,r)} (1/f!) Π_t <ω_t, [e_f(t)]>.
inline Rational integrate_word(const EdgeWord& alpha, const TensorWord& omega, const CycleBasis& cb,
                               const PairingOptions& opt = {}) {
    detail::check_k(omega.size(), opt);
    const int k = static_cast<int>(omega.size());
    const int r = static_cast<int>(alpha.size());
    if (k == 0) return 1;
    if (r == 0) return 0;
    auto a = detail::letter_values(alpha, omega, cb, opt);
    std::vector<Rational> inv_fact(k + 1);
    for (int i = 0; i <= k; ++i) inv_fact[i] = 1 / detail::factorial(i);
    Rational total = 0;
    for_each_composition(k, r, [&](const std::vector<int>& n) {
        Integer prod = 1;
        Rational weight = 1;
        int t = 0;
        for (int j = 0; j < r && prod != 0; ++j) {
            for (int c = 0; c < n[j]; ++c, ++t) prod *= static_cast<long>(a[t][j]);
            weight *= inv_fact[n[j]];
        }
        if (prod != 0) total += weight * Rational(prod);
    });
    return total;
}

/// The recursive definition: ∫_{αe} ω_{1..k} = Σ_i ∫_α ω_{1..i} · ∫_e ω_{i+1..k},
/// with ∫_e ω_{i+1..k} = Π <ω_t,[e]> / (k-i)!.
inline Rational integrate_word_inductive(const EdgeWord& alpha, const TensorWord& omega, const CycleBasis& cb,
                                         const PairingOptions& opt = {}) {
    detail::check_k(omega.size(), opt);
    const std::size_t k = omega.size();
    auto a = detail::letter_values(alpha, omega, cb, opt);
    // prefix[i] = ∫_{α so far} ω_1...ω_i
    std::vector<Rational> prefix(k + 1, Rational(0));
    prefix[0] = 1;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        std::vector<Rational> next(k + 1, Rational(0));
        for (std::size_t top = 0; top <= k; ++top)
            for (std::size_t i = 0; i <= top; ++i) {
                if (prefix[i] == 0) continue;
                Rational single = 1 / detail::factorial(static_cast<int>(top - i));
                for (std::size_t t = i; t < top; ++t) single *= static_cast<long>(a[t][j]);
                next[top] += prefix[i] * single;
            }
        prefix = std::move(next);
    }
    return prefix[k];
}

namespace detail {

inline Rational edge_pairing(const std::vector<IntVector>& chains, int e) {
    // ∫_{(e-1)} ω_1...ω_k = Π <ω_t, e> / k! for k >= 1
    Rational v = 1 / factorial(static_cast<int>(chains.size()));
    for (const auto& c : chains) v *= static_cast<long>(c[e]);
    return v;
}

} // namespace detail

/// Linear extension of ∫ to ZF/I^3 for tensors of length at most 2.
inline Rational integrate_element(const TruncatedFreeElement& x, const TensorWord& omega, const CycleBasis& cb) {
    const std::size_t k = omega.size();
    if (k > 2) throw Error(ErrorKind::KTooLarge, "truncated elements pair with tensors of length at most 2");
    if (x.size() != static_cast<std::size_t>(cb.edge_count)) throw Error(ErrorKind::BasisMismatch, "free element over the wrong edge set");
    if (k == 0) return Rational(static_cast<long>(x.c0));
    std::vector<IntVector> chains;
    for (const auto& w : omega) chains.push_back(cb.to_chain(w));
    Rational total = 0;
    for (int e = 0; e < cb.edge_count; ++e)
        if (x.deg1[e] != 0) total += Rational(static_cast<long>(x.deg1[e])) * detail::edge_pairing(chains, e);
    if (k == 2)
        for (int e = 0; e < cb.edge_count; ++e)
            for (int f = 0; f < cb.edge_count; ++f)
                if (x.deg2(e, f) != 0) total += Rational(static_cast<long>(x.deg2(e, f) * chains[0][e] * chains[1][f]));
    return total;
}

/// Same on Zπ1/J^3 in the basis {1, y_i, y_i y_j} of the given generators.
inline Rational integrate_element(const TruncatedLoopElement& x, const TensorWord& omega, const CycleBasis& cb,
                                  const Generators& gens) {
    const std::size_t k = omega.size();
    if (k > 2) throw Error(ErrorKind::KTooLarge, "truncated elements pair with tensors of length at most 2");
    const std::size_t n = x.size();
    if (n != gens.loops.size()) throw Error(ErrorKind::BasisMismatch, "generator count mismatch");
    if (k == 0) return Rational(static_cast<long>(x.c0));
    std::vector<IntVector> chains;
    for (const auto& w : omega) chains.push_back(cb.to_chain(w));
    std::vector<IntVector> classes;
    for (const auto& w : gens.loops) classes.push_back(chain_of_word(w, cb.edge_count));
    Rational total = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (x.deg1[i] == 0) continue;
        Rational v = k == 1 ? Rational(static_cast<long>(inner_product(chains[0], classes[i]))) : integrate_word(gens.loops[i], omega, cb);
        total += Rational(static_cast<long>(x.deg1[i])) * v;
    }
    if (k == 2)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (x.deg2(i, j) != 0)
                    total += Rational(static_cast<long>(x.deg2(i, j) * inner_product(chains[0], classes[i]) *
                                                        inner_product(chains[1], classes[j])));
    return total;
}

inline TensorWord slice(const TensorWord& w, std::size_t from, std::size_t to) {
    return TensorWord(w.begin() + static_cast<std::ptrdiff_t>(from), w.begin() + static_cast<std::ptrdiff_t>(to));
}

/// Product: ∫ω_{1..k} ∫ω_{k+1..k+l} = Σ over (k,l)-shuffles.
inline bool check_shuffle(const EdgeWord& alpha, const TensorWord& left, const TensorWord& right, const CycleBasis& cb,
                          const PairingOptions& opt = {}) {
    Rational lhs = integrate_word(alpha, left, cb, opt) * integrate_word(alpha, right, cb, opt);
    const std::size_t k = left.size(), l = right.size();
    // choose the positions of the left factors
    std::vector<bool> mask(k + l, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(k), true);
    Rational rhs = 0;
    do {
        TensorWord w;
        std::size_t a = 0, b = 0;
        for (bool m : mask) w.push_back(m ? left[a++] : right[b++]);
        rhs += integrate_word(alpha, w, cb, opt);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return lhs == rhs;
}

/// ∫_{αβ} ω_{1..k} = Σ_i ∫_α ω_{1..i} ∫_β ω_{i+1..k}.
inline bool check_coproduct(const EdgeWord& alpha, const EdgeWord& beta, const TensorWord& omega, const CycleBasis& cb,
                            const PairingOptions& opt = {}) {
    Rational lhs = integrate_word(concat(alpha, beta), omega, cb, opt);
    Rational rhs = 0;
    for (std::size_t i = 0; i <= omega.size(); ++i)
        rhs += integrate_word(alpha, slice(omega, 0, i), cb, opt) * integrate_word(beta, slice(omega, i, omega.size()), cb, opt);
    return lhs == rhs;
}

/// ∫_{α^-1} ω_1...ω_k = (-1)^k ∫_α ω_k...ω_1.
inline bool check_antipode(const EdgeWord& alpha, const TensorWord& omega, const CycleBasis& cb, const PairingOptions& opt = {}) {
    TensorWord rev(omega.rbegin(), omega.rend());
    Rational rhs = integrate_word(alpha, rev, cb, opt);
    if (omega.size() % 2) rhs = -rhs;
    return integrate_word(inverse_word(alpha), omega, cb, opt) == rhs;
}

/// Σ_σ ∫_α ω_σ(1)...ω_σ(k) = Π_i ∫_α ω_i.
inline bool check_symmetrization(const EdgeWord& alpha, const TensorWord& omega, const CycleBasis& cb,
                                 const PairingOptions& opt = {}) {
    std::vector<std::size_t> perm(omega.size());
    std::iota(perm.begin(), perm.end(), 0);
    Rational lhs = 0;
    do {
        TensorWord w;
        for (auto p : perm) w.push_back(omega[p]);
        lhs += integrate_word(alpha, w, cb, opt);
    } while (std::next_permutation(perm.begin(), perm.end()));
    Rational rhs = 1;
    for (const auto& w : omega) rhs *= integrate_word(alpha, TensorWord{w}, cb, opt);
    return lhs == rhs;
}

/// ∫_{α_1...α_r} ω_{1..k} = Σ_{(n_j) ∈ Δ(k,r)} Π_j ∫_{α_j} (block j).
inline bool check_iterated_coproduct(const std::vector<EdgeWord>& alphas, const TensorWord& omega, const CycleBasis& cb,
                                     const PairingOptions& opt = {}) {
    EdgeWord whole;
    for (const auto& a : alphas) whole = concat(whole, a);
    Rational lhs = integrate_word(whole, omega, cb, opt);
    Rational rhs = 0;
    for_each_composition(static_cast<int>(omega.size()), static_cast<int>(alphas.size()), [&](const std::vector<int>& n) {
        Rational term = 1;
        std::size_t t = 0;
        for (std::size_t j = 0; j < alphas.size() && term != 0; ++j) {
            term *= integrate_word(alphas[j], slice(omega, t, t + n[j]), cb, opt);
            t += n[j];
        }
        rhs += term;
    });
    if (alphas.empty()) rhs = omega.empty() ? 1 : 0;
    return lhs == rhs;
}

/// ∫_{βαβ^-1} ω1ω2 = ∫_α ω1ω2 + ∫_β ω1 ∫_α ω2 - ∫_α ω1 ∫_β ω2.
inline bool check_conjugation(const EdgeWord& alpha, const EdgeWord& beta, const IntVector& w1, const IntVector& w2,
                              const CycleBasis& cb, const PairingOptions& opt = {}) {
    EdgeWord conj = concat(concat(beta, alpha), inverse_word(beta));
    Rational lhs = integrate_word(conj, {w1, w2}, cb, opt);
    Rational rhs = integrate_word(alpha, {w1, w2}, cb, opt) +
                   integrate_word(beta, {w1}, cb, opt) * integrate_word(alpha, {w2}, cb, opt) -
                   integrate_word(alpha, {w1}, cb, opt) * integrate_word(beta, {w2}, cb, opt);
    return lhs == rhs;
}

/// ∫ over (α_1 - 1)...(α_r - 1), expanded into ±∫ over sub-products.
inline Rational integrate_augmentation_product(const std::vector<EdgeWord>& alphas, const TensorWord& omega,
                                               const CycleBasis& cb, const PairingOptions& opt = {}) {
    const std::size_t r = alphas.size();
    Rational total = 0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << r); ++mask) {
        EdgeWord w;
        std::size_t dropped = 0;
        for (std::size_t j = 0; j < r; ++j) {
            if (mask >> j & 1) w = concat(w, alphas[j]);
            else ++dropped;
        }
        Rational v = integrate_word(w, omega, cb, opt);
        total += dropped % 2 ? -v : v;
    }
    return total;
}

inline IntVector unit_vector(std::size_t n, std::size_t i) {
    IntVector v(n, 0);
    v[i] = 1;
    return v;
}

/// Rows: y_i (i < g) then y_i y_j at g + i*g + j. Columns: ω_a then
/// ω_a ⊗ ω_b at g + a*g + b, with ω_a the a-th basis cycle.
struct PairingTensor {
    RationalMatrix matrix;
    std::size_t genus = 0;
};

inline PairingTensor pairing_tensor(const Multigraph& g, const CycleBasis& cb, const Generators& gens) {
    const std::size_t n = cb.genus();
    const std::size_t dim = n + n * n;
    PairingTensor p;
    p.genus = n;
    p.matrix = RationalMatrix(dim, dim);
    (void)g;
    for (std::size_t i = 0; i < n; ++i) {
        auto yi = TruncatedLoopElement::generator(n, i);
        yi.c0 = 0;
        for (std::size_t a = 0; a < n; ++a) {
            p.matrix(i, a) = integrate_element(yi, {unit_vector(n, a)}, cb, gens);
            for (std::size_t b = 0; b < n; ++b)
                p.matrix(i, n + a * n + b) = integrate_word(gens.loops[i], {unit_vector(n, a), unit_vector(n, b)}, cb);
        }
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t a = 0; a < n; ++a)
                for (std::size_t b = 0; b < n; ++b)
                    p.matrix(n + i * n + j, n + a * n + b) = Rational(static_cast<long>(cb.gram(a, i) * cb.gram(b, j)));
    }
    if (!inverse(p.matrix)) throw Error(ErrorKind::SingularPairing, "pairing tensor is singular");
    return p;
}

inline PairingTensor pairing_tensor(const PointedGraph& pg) {
    auto cb = cycle_basis(pg.graph);
    return pairing_tensor(pg.graph, cb, tree_generators(pg.graph, cb, pg.basepoint));
}

} // namespace cyclepair
