#pragma once

#include "gkz/rational.hpp"

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

namespace gkz {

using QMat = std::vector<QVec>;
using ZMat = std::vector<std::vector<Integer>>;

inline ZMat zmat_from_rows(const std::vector<IntVec>& rows) {
    ZMat m;
    m.reserve(rows.size());
    for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
    return m;
}

inline ZMat zmat_transpose(const ZMat& m) {
    if (m.empty()) return {};
    ZMat t(m[0].size(), std::vector<Integer>(m.size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
    return t;
}

/// Gaussian elimination over Q. Returns rank; `m` is reduced in place to row
/// echelon form and `pivots` receives the pivot column of each nonzero row.
inline int q_echelon(QMat& m, std::vector<int>& pivots) {
    pivots.clear();
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[r], m[p]);
        Rational inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(static_cast<int>(c));
        ++r;
    }
    return static_cast<int>(r);
}

inline int q_rank(QMat m) {
    std::vector<int> pivots;
    return q_echelon(m, pivots);
}

struct SolveResult {
    bool consistent = false;
    QVec particular;             // one exact solution when consistent
    std::vector<QVec> nullspace; // basis of the rational null space
};

/// Solve M x = rhs exactly over Q.
inline SolveResult q_solve(const QMat& m, const QVec& rhs) {
    SolveResult res;
    const size_t rows = m.size();
    const size_t cols = rows == 0 ? 0 : m[0].size();
    QMat aug(rows, QVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = rhs[i];
    }
    std::vector<int> pivots;
    int rank = q_echelon(aug, pivots);
    for (int i = 0; i < rank; ++i)
        if (pivots[i] == static_cast<int>(cols)) return res;  // inconsistent
    res.consistent = true;
    res.particular.assign(cols, Rational(0));
    std::vector<bool> is_pivot(cols, false);
    for (int i = 0; i < rank; ++i) {
        is_pivot[pivots[i]] = true;
        res.particular[pivots[i]] = aug[i][cols];
    }
    for (size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        QVec v(cols, Rational(0));
        v[c] = 1;
        for (int i = 0; i < rank; ++i) v[pivots[i]] = -aug[i][c];
        res.nullspace.push_back(std::move(v));
    }
    return res;
}

/// Rank of the span of `vecs` inside the span of `basis`; used for exact
/// span-containment checks.
inline bool q_span_contains(const std::vector<QVec>& basis, const QVec& v) {
    if (basis.empty()) {
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }
    QMat m(v.size(), QVec(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (size_t i = 0; i < v.size(); ++i) m[i][j] = basis[j][i];
    return q_solve(m, v).consistent;
}

inline int q_rank_of_vectors(const std::vector<QVec>& vecs) {
    QMat m;
    for (const auto& v : vecs) m.push_back(v);
    return m.empty() ? 0 : q_rank(std::move(m));
}

namespace detail {

// One step of column reduction: make m[r][c2] zero using column c1 (gcd style).
inline void col_gcd_step(ZMat& m, size_t r, size_t c1, size_t c2) {
    Integer g, x, y;
    mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), m[r][c1].get_mpz_t(),
               m[r][c2].get_mpz_t());
    Integer a = m[r][c1] / g, b = m[r][c2] / g;
    for (size_t i = 0; i < m.size(); ++i) {
        Integer u = m[i][c1], v = m[i][c2];
        m[i][c1] = x * u + y * v;
        m[i][c2] = a * v - b * u;
    }
}

}  // namespace detail

/// Column-style Hermite normal form. Pivot entries positive, entries to the
/// right of a pivot in its row reduced into [0, pivot). Columns with pivots
/// come first, ordered by pivot row; zero columns are dropped.
inline ZMat column_hnf(ZMat m) {
    if (m.empty()) return m;
    const size_t rows = m.size();
    size_t cols = m[0].size();
    size_t c = 0;
    for (size_t r = 0; r < rows && c < cols; ++r) {
        size_t p = c;
        while (p < cols && m[r][p] == 0) ++p;
        if (p == cols) continue;
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][c], m[i][p]);
        for (size_t j = c + 1; j < cols; ++j)
            if (m[r][j] != 0) detail::col_gcd_step(m, r, c, j);
        if (m[r][c] < 0)
            for (size_t i = 0; i < rows; ++i) m[i][c] = -m[i][c];
        // reduce earlier columns against this pivot
        for (size_t j = 0; j < c; ++j) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), m[r][j].get_mpz_t(), m[r][c].get_mpz_t());
            if (q != 0)
                for (size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][c];
        }
        ++c;
    }
    // drop zero columns
    ZMat out(rows);
    for (size_t j = 0; j < c; ++j)
        for (size_t i = 0; i < rows; ++i) out[i].push_back(m[i][j]);
    return out;
}

/// Row HNF of `m` together with the unimodular transform: U * m = H.
inline void row_hnf_with_transform(const ZMat& m, ZMat& h, ZMat& u) {
    const size_t rows = m.size();
    h = m;
    u.assign(rows, std::vector<Integer>(rows, 0));
    for (size_t i = 0; i < rows; ++i) u[i][i] = 1;
    if (rows == 0) return;
    const size_t cols = h[0].size();
    size_t r = 0;
    auto row_op = [&](size_t i, size_t k, const Integer& q) {
        for (size_t j = 0; j < cols; ++j) h[i][j] -= q * h[k][j];
        for (size_t j = 0; j < rows; ++j) u[i][j] -= q * u[k][j];
    };
    for (size_t c = 0; c < cols && r < rows; ++c) {
        // gcd-reduce the column below row r
        while (true) {
            size_t p = rows;
            for (size_t i = r; i < rows; ++i)
                if (h[i][c] != 0 && (p == rows || abs(h[i][c]) < abs(h[p][c]))) p = i;
            if (p == rows) break;
            std::swap(h[p], h[r]);
            std::swap(u[p], u[r]);
            bool done = true;
            for (size_t i = r + 1; i < rows; ++i) {
                if (h[i][c] == 0) continue;
                Integer q = h[i][c] / h[r][c];
                row_op(i, r, q);
                if (h[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (h[r][c] == 0) continue;
        if (h[r][c] < 0) {
            for (size_t j = 0; j < cols; ++j) h[r][j] = -h[r][j];
            for (size_t j = 0; j < rows; ++j) u[r][j] = -u[r][j];
        }
        for (size_t i = 0; i < r; ++i) {
            Integer q;
            mpz_fdiv_q(q.get_mpz_t(), h[i][c].get_mpz_t(), h[r][c].get_mpz_t());
            if (q != 0) row_op(i, r, q);
        }
        ++r;
    }
}

/// Elementary divisors of the Smith normal form, nonzero ones only.
inline std::vector<Integer> smith_divisors(ZMat m) {
    std::vector<Integer> div;
    if (m.empty() || m[0].empty()) return div;
    size_t rows = m.size(), cols = m[0].size();
    size_t t = 0;
    while (t < rows && t < cols) {
        size_t pi = rows, pj = cols;
        for (size_t i = t; i < rows; ++i)
            for (size_t j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pi == rows || abs(m[i][j]) < abs(m[pi][pj]))) {
                    pi = i;
                    pj = j;
                }
        if (pi == rows) break;
        std::swap(m[pi], m[t]);
        for (size_t i = 0; i < rows; ++i) std::swap(m[i][pj], m[i][t]);
        bool clean = true;
        for (size_t i = t + 1; i < rows; ++i) {
            if (m[i][t] == 0) continue;
            Integer q = m[i][t] / m[t][t];
            for (size_t j = t; j < cols; ++j) m[i][j] -= q * m[t][j];
            if (m[i][t] != 0) clean = false;
        }
        for (size_t j = t + 1; j < cols; ++j) {
            if (m[t][j] == 0) continue;
            Integer q = m[t][j] / m[t][t];
            for (size_t i = t; i < rows; ++i) m[i][j] -= q * m[i][t];
            if (m[t][j] != 0) clean = false;
        }
        if (!clean) continue;
        // entry not dividing some remaining entry gets folded in
        bool divides_all = true;
        for (size_t i = t + 1; i < rows && divides_all; ++i)
            for (size_t j = t + 1; j < cols && divides_all; ++j)
                if (m[i][j] % m[t][t] != 0) {
                    for (size_t jj = t; jj < cols; ++jj) m[t][jj] += m[i][jj];
                    divides_all = false;
                }
        if (!divides_all) continue;
        div.push_back(abs(m[t][t]));
        ++t;
    }
    return div;
}

}  // namespace gkz
