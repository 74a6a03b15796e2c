#pragma once

#include "gkz/matrix.hpp"
#include "gkz/rational.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace gkz {

/// Integer matrix A whose columns lie on a common affine hyperplane off the
/// origin (there is a rational row c with c*A = (1,...,1), verified at
/// construction). The row count may exceed the rational rank; the kernel and
/// everything downstream use the rank.
struct AMatrix {
    int d = 0;  // rows
    int n = 0;  // columns
    std::vector<IntVec> rows;
    std::vector<std::string> labels;  // column labels
    QVec hyperplane;                  // c with c*A = 1
    int rank = 0;

    AMatrix() = default;

    AMatrix(std::vector<IntVec> entries, std::vector<std::string> column_labels = {})
        : rows(std::move(entries)) {
        d = static_cast<int>(rows.size());
        n = d == 0 ? 0 : static_cast<int>(rows[0].size());
        for (const auto& r : rows)
            if (static_cast<int>(r.size()) != n)
                throw InputError("RaggedMatrix", "rows have different lengths");
        if (column_labels.empty()) {
            for (int j = 0; j < n; ++j) labels.push_back(std::to_string(j + 1));
        } else {
            if (static_cast<int>(column_labels.size()) != n)
                throw InputError("BadLabels", "expected one label per column");
            labels = std::move(column_labels);
        }
        // homogeneity certificate: solve A^T c = (1,...,1)
        QMat at(n, QVec(d));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) at[j][i] = rows[i][j];
        SolveResult sol = q_solve(at, QVec(n, Rational(1)));
        if (!sol.consistent)
            throw MathError("NotHomogeneous",
                            "columns do not lie on a common hyperplane c*a_j = 1");
        hyperplane = sol.particular;
        QMat m(d, QVec(n));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) m[i][j] = rows[i][j];
        rank = q_rank(std::move(m));
    }

    IntVec column(int j) const {
        IntVec c(d);
        for (int i = 0; i < d; ++i) c[i] = rows[i][j];
        return c;
    }

    QMat columns_q(const std::vector<int>& cols) const {
        QMat m(d, QVec(cols.size()));
        for (int i = 0; i < d; ++i)
            for (size_t k = 0; k < cols.size(); ++k) m[i][k] = rows[i][cols[k]];
        return m;
    }

    QVec apply(const QVec& v) const {
        QVec r(d, Rational(0));
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) r[i] += Rational(rows[i][j]) * v[j];
        return r;
    }

    IntVec apply(const IntVec& v) const {
        IntVec r(d, 0);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < n; ++j) r[i] += rows[i][j] * v[j];
        return r;
    }

    bool in_kernel(const IntVec& u) const {
        IntVec r = apply(u);
        return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
    }
};

/// Z-basis of ker_Z(A), stored as the columns of an n x r integer matrix in
/// canonical column Hermite form (pivot entries positive), so the output is
/// reproducible.
struct LatticeBasis {
    std::vector<IntVec> vecs;  // each of length n

    size_t size() const { return vecs.size(); }
    bool empty() const { return vecs.empty(); }

    IntVec combine(const IntVec& coeffs) const {
        IntVec u(vecs.empty() ? 0 : vecs[0].size(), 0);
        for (size_t i = 0; i < vecs.size(); ++i)
            for (size_t j = 0; j < u.size(); ++j) u[j] += coeffs[i] * vecs[i][j];
        return u;
    }

    /// supp(B): union of the supports of the members.
    std::set<int> support() const {
        std::set<int> s;
        for (const auto& b : vecs)
            for (size_t j = 0; j < b.size(); ++j)
                if (b[j] != 0) s.insert(static_cast<int>(j));
        return s;
    }

    /// (Bs)_j as a length-h rational vector of coefficients.
    QVec row_form(size_t j) const {
        QVec f(vecs.size(), Rational(0));
        for (size_t k = 0; k < vecs.size(); ++k) f[k] = vecs[k][j];
        return f;
    }
};

/// Canonical basis of ker_Z(A) via the row Hermite form of A^T with
/// transform: rows of U facing zero rows of H span the kernel saturated.
inline LatticeBasis kernel_basis(const AMatrix& a) {
    LatticeBasis basis;
    if (a.n == 0) return basis;
    ZMat at(a.n, std::vector<Integer>(a.d));
    for (int i = 0; i < a.d; ++i)
        for (int j = 0; j < a.n; ++j) at[j][i] = a.rows[i][j];
    ZMat h, u;
    row_hnf_with_transform(at, h, u);
    ZMat kernel_cols;  // as rows first
    for (int i = 0; i < a.n; ++i) {
        bool zero = true;
        for (int c = 0; c < a.d && zero; ++c)
            if (h[i][c] != 0) zero = false;
        if (zero) kernel_cols.push_back(u[i]);
    }
    if (static_cast<int>(kernel_cols.size()) != a.n - a.rank)
        throw Error("KernelRankMismatch", "kernel dimension disagrees with rank computation");
    ZMat canon = column_hnf(zmat_transpose(kernel_cols));
    for (size_t k = 0; canon.size() && k < canon[0].size(); ++k) {
        IntVec v(a.n);
        for (int j = 0; j < a.n; ++j) {
            if (!canon[j][k].fits_slong_p())
                throw Error("Overflow", "kernel basis entry out of range");
            v[j] = canon[j][k].get_si();
        }
        basis.vecs.push_back(std::move(v));
    }
    return basis;
}

/// Every member lies in ker_Z(A), members are independent, and the Z-span is
/// the full kernel (Smith elementary divisors all 1, rank n - rank(A)).
inline bool is_kernel_z_basis(const AMatrix& a, const std::vector<IntVec>& vecs) {
    for (const auto& v : vecs)
        if (!a.in_kernel(v)) return false;
    if (static_cast<int>(vecs.size()) != a.n - a.rank) return false;
    if (vecs.empty()) return true;
    std::vector<Integer> div = smith_divisors(zmat_transpose(zmat_from_rows(vecs)));
    if (div.size() != vecs.size()) return false;
    return std::all_of(div.begin(), div.end(), [](const Integer& x) { return x == 1; });
}

/// One exact solution of M x = rhs plus a rational null space basis.
inline SolveResult solve_exact(const QMat& m, const QVec& rhs) { return q_solve(m, rhs); }

/// Decides membership in the monoid C(w) of N-combinations of the given
/// lattice vectors. Exact depth-first search pruned by the remaining
/// w-weight, memoized on the query vector.
class CwOracle {
public:
    CwOracle(std::vector<IntVec> generators, QVec w)
        : gens_(std::move(generators)), w_(std::move(w)) {
        for (const auto& g : gens_) {
            Rational gw = dot(w_, g);
            if (gw <= 0)
                throw MathError("NonPositiveWeight",
                                "monoid generator with non-positive w-weight");
            gen_weights_.push_back(gw);
        }
    }

    const std::vector<IntVec>& generators() const { return gens_; }

    bool contains(const IntVec& u) {
        if (std::all_of(u.begin(), u.end(), [](long x) { return x == 0; })) return true;
        if (gens_.empty()) return false;
        Rational uw = dot(w_, u);
        if (uw <= 0) return false;
        return search(u, uw);
    }

private:
    bool search(const IntVec& u, const Rational& uw) {
        if (std::all_of(u.begin(), u.end(), [](long x) { return x == 0; })) return true;
        auto it = memo_.find(u);
        if (it != memo_.end()) return it->second;
        bool found = false;
        for (size_t i = 0; i < gens_.size() && !found; ++i) {
            Rational rest = uw - gen_weights_[i];
            if (rest < 0) continue;
            found = search(vec_sub(u, gens_[i]), rest);
        }
        memo_.emplace(u, found);
        return found;
    }

    std::vector<IntVec> gens_;
    QVec w_;
    std::vector<Rational> gen_weights_;
    std::map<IntVec, bool> memo_;
};

inline bool in_monoid_Cw(const IntVec& u, const std::vector<IntVec>& gens, const QVec& w) {
    CwOracle oracle(gens, w);
    return oracle.contains(u);
}

/// Enumerates all u in the lattice spanned by `basis` with |u|_inf <= radius.
/// Works level by level over the Hermite pivot structure, pruning with
/// interval bounds on every coordinate.
class LatticeBoxEnumerator {
public:
    LatticeBoxEnumerator(const LatticeBasis& basis, size_t ambient_dim, long radius)
        : basis_(basis), radius_(radius) {
        n_ = ambient_dim;
        r_ = basis.size();
        // pivot row of column k: first row where this column is nonzero and
        // all later columns are zero (column HNF guarantees the staircase)
        pivot_.resize(r_);
        for (size_t k = 0; k < r_; ++k) {
            size_t p = 0;
            while (p < n_ && basis.vecs[k][p] == 0) ++p;
            pivot_[k] = p;
        }
    }

    /// Calls f(u) for every lattice point in the box, the origin included.
    template <typename F>
    void for_each(F&& f) const {
        if (r_ == 0) {
            IntVec zero(n_, 0);
            f(zero);
            return;
        }
        IntVec partial(n_, 0);
        std::vector<long> coeff(r_, 0);
        recurse(0, partial, coeff, f);
    }

private:
    template <typename F>
    void recurse(size_t k, IntVec& partial, std::vector<long>& coeff, F&& f) const {
        if (k == r_) {
            for (size_t j = 0; j < n_; ++j)
                if (partial[j] > radius_ || partial[j] < -radius_) return;
            f(partial);
            return;
        }
        // remaining columns are zero above their pivots, so the pivot row of
        // column k is already final once t_k is fixed
        long piv_val = basis_.vecs[k][pivot_[k]];
        long base = partial[pivot_[k]];
        // need |base + t*piv_val| <= radius
        long lo, hi;
        if (piv_val > 0) {
            lo = ceil_div(-radius_ - base, piv_val);
            hi = floor_div(radius_ - base, piv_val);
        } else {
            lo = ceil_div(radius_ - base, piv_val);
            hi = floor_div(-radius_ - base, piv_val);
        }
        for (long t = lo; t <= hi; ++t) {
            coeff[k] = t;
            for (size_t j = 0; j < n_; ++j) partial[j] += t * basis_.vecs[k][j];
            if (feasible(k + 1, partial)) recurse(k + 1, partial, coeff, f);
            for (size_t j = 0; j < n_; ++j) partial[j] -= t * basis_.vecs[k][j];
        }
        coeff[k] = 0;
    }

    /// Interval check: can rows still reach the box with columns >= k free?
    bool feasible(size_t k, const IntVec& partial) const {
        for (size_t j = 0; j < n_; ++j) {
            bool fixed = true;
            for (size_t c = k; c < r_ && fixed; ++c)
                if (basis_.vecs[c][j] != 0) fixed = false;
            if (fixed && (partial[j] > radius_ || partial[j] < -radius_)) return false;
        }
        return true;
    }

    static long floor_div(long a, long b) {
        long q = a / b, r = a % b;
        return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
    }
    static long ceil_div(long a, long b) { return -floor_div(-a, b); }

    const LatticeBasis& basis_;
    long radius_;
    size_t n_ = 0, r_ = 0;
    std::vector<size_t> pivot_;
};

}  // namespace gkz
