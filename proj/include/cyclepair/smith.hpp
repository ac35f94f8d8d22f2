#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "matrix.hpp"

namespace cyclepair {

/// U * A * V = D with U, V unimodular and D diagonal, d_0 | d_1 | ... .
struct SmithForm {
    IntegerMatrix U;
    IntegerMatrix V;
    IntegerMatrix D;
    std::vector<Integer> diagonal; // length min(rows, cols), zeros last
    std::size_t rank = 0;

    // Nontrivial invariant factors, 1s suppressed, zero factors kept as 0.
    std::vector<Integer> invariant_factors() const {
        std::vector<Integer> out;
        for (const auto& d : diagonal)
            if (d != 1) out.push_back(d);
        return out;
    }
};

namespace detail {

inline void swap_rows(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}
inline void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}
// row[dst] += f * row[src]
inline void add_row(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) += f * m(src, j);
}
inline void add_col(IntegerMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, dst) += f * m(i, src);
}
inline void negate_row(IntegerMatrix& m, std::size_t r) {
    for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) = -m(r, j);
}

} // namespace detail

inline SmithForm smith_normal_form(const IntegerMatrix& a) {
    using namespace detail;
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    SmithForm s;
    s.D = a;
    s.U = IntegerMatrix::identity(n);
    s.V = IntegerMatrix::identity(m);
    IntegerMatrix& D = s.D;

    const std::size_t steps = std::min(n, m);
    for (std::size_t t = 0; t < steps; ++t) {
        for (;;) {
            // smallest nonzero entry of the trailing block becomes the pivot
            std::size_t pi = n, pj = m;
            Integer best;
            for (std::size_t i = t; i < n; ++i)
                for (std::size_t j = t; j < m; ++j) {
                    if (D(i, j) == 0) continue;
                    Integer v = abs(D(i, j));
                    if (pi == n || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == n) goto done;
            swap_rows(D, t, pi);
            swap_rows(s.U, t, pi);
            swap_cols(D, t, pj);
            swap_cols(s.V, t, pj);

            bool clean = true;
            for (std::size_t i = t + 1; i < n; ++i) {
                if (D(i, t) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(i, t).get_mpz_t(), D(t, t).get_mpz_t());
                add_row(D, i, t, -q);
                add_row(s.U, i, t, -q);
                if (D(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < m; ++j) {
                if (D(t, j) == 0) continue;
                Integer q;
                mpz_fdiv_q(q.get_mpz_t(), D(t, j).get_mpz_t(), D(t, t).get_mpz_t());
                add_col(D, j, t, -q);
                add_col(s.V, j, t, -q);
                if (D(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // divisibility: fold an offending row into the pivot row and retry
            std::size_t bad = n;
            for (std::size_t i = t + 1; i < n && bad == n; ++i)
                for (std::size_t j = t + 1; j < m; ++j)
                    if (D(i, j) % D(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad == n) break;
            add_row(D, t, bad, Integer(1));
            add_row(s.U, t, bad, Integer(1));
        }
        if (D(t, t) < 0) {
            negate_row(D, t);
            negate_row(s.U, t);
        }
    }
done:
    s.diagonal.resize(steps);
    for (std::size_t i = 0; i < steps; ++i) {
        s.diagonal[i] = D(i, i);
        if (D(i, i) != 0) ++s.rank;
    }
    return s;
}

} // namespace cyclepair
