#pragma once

#include "gkz/lattice.hpp"
#include "gkz/toric.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace gkz {

/// Anchor-and-face description of a family of monomials x^(a + N^sigma)
/// outside a monomial ideal; supp(a) and sigma are disjoint.
struct StandardPair {
    Monomial anchor;
    std::set<int> face;

    bool operator==(const StandardPair& other) const {
        return anchor == other.anchor && face == other.face;
    }
    bool operator<(const StandardPair& other) const {
        if (!(anchor == other.anchor)) return anchor.e < other.anchor.e;
        return face < other.face;
    }
};

namespace detail {

/// (a, sigma) is admissible iff no generator m of M has m_j <= a_j for every
/// j outside sigma; equivalently the whole family misses M.
inline bool admissible(const Monomial& a, unsigned long face_mask, const MonomialIdeal& m) {
    for (const auto& g : m.gens) {
        bool covered = true;
        for (size_t j = 0; j < m.nvars && covered; ++j) {
            if (face_mask >> j & 1u) continue;
            if (g.e[j] > a.e[j]) covered = false;
        }
        if (covered) return false;
    }
    return true;
}

}  // namespace detail

/// All standard pairs of a monomial ideal: maximal admissible pairs, anchors
/// bounded coordinatewise by the generator exponents.
inline std::vector<StandardPair> standard_pairs(const MonomialIdeal& m) {
    const size_t n = m.nvars;
    if (m.gens.empty()) {
        std::set<int> all;
        for (size_t j = 0; j < n; ++j) all.insert(static_cast<int>(j));
        return {StandardPair{Monomial(n), all}};
    }
    std::vector<int> bound(n, 0);
    for (const auto& g : m.gens)
        for (size_t j = 0; j < n; ++j) bound[j] = std::max(bound[j], g.e[j]);
    for (auto& b : bound) b = std::max(0, b - 1);  // standard-pair anchors stay below the bound

    // enumerate admissible pairs, keeping only face-maximal ones per anchor
    struct Raw {
        Monomial a;
        unsigned long mask;
    };
    std::vector<Raw> admissibles;
    std::vector<int> cur(n, 0);
    auto enumerate_faces = [&](const Monomial& a) {
        unsigned long var_mask = 0;
        for (size_t j = 0; j < n; ++j)
            if (a.e[j] == 0) var_mask |= 1ul << j;  // faces avoid supp(a)
        std::vector<unsigned long> good;
        unsigned long sub = var_mask;
        while (true) {
            if (detail::admissible(a, sub, m)) good.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & var_mask;
        }
        for (unsigned long s : good) {
            bool maximal = true;
            for (unsigned long t : good)
                if (t != s && (s & t) == s) {
                    maximal = false;
                    break;
                }
            if (maximal) admissibles.push_back({a, s});
        }
    };
    std::function<void(size_t)> rec = [&](size_t j) {
        if (j == n) {
            Monomial a(cur);
            if (!m.contains(a)) enumerate_faces(a);
            return;
        }
        for (cur[j] = 0; cur[j] <= bound[j]; ++cur[j]) rec(j + 1);
        cur[j] = 0;
    };
    rec(0);

    // keep the maximal pairs only
    auto contained_in = [&](const Raw& p, const Raw& q) {
        if ((p.mask & q.mask) != p.mask) return false;
        for (size_t j = 0; j < n; ++j) {
            bool in_q = q.mask >> j & 1u;
            if (!in_q && p.a.e[j] != q.a.e[j]) return false;
            if (in_q && !(p.mask >> j & 1u) && p.a.e[j] < q.a.e[j]) return false;
        }
        return true;
    };
    std::vector<StandardPair> out;
    for (size_t i = 0; i < admissibles.size(); ++i) {
        bool maximal = true;
        for (size_t j = 0; j < admissibles.size() && maximal; ++j) {
            if (i == j) continue;
            if (contained_in(admissibles[i], admissibles[j]) &&
                !contained_in(admissibles[j], admissibles[i]))
                maximal = false;
        }
        if (!maximal) continue;
        StandardPair sp;
        sp.anchor = admissibles[i].a;
        // canonical form: anchor entries on the face are zero already
        for (size_t j = 0; j < n; ++j)
            if (admissibles[i].mask >> j & 1u) sp.face.insert(static_cast<int>(j));
        out.push_back(std::move(sp));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// nsupp: indices whose entries are negative integers.
inline std::set<int> negative_support(const QVec& v) {
    std::set<int> s;
    for (size_t j = 0; j < v.size(); ++j)
        if (is_negative_integer(v[j])) s.insert(static_cast<int>(j));
    return s;
}

inline std::set<int> negative_support(const QVec& v, const IntVec& shift) {
    std::set<int> s;
    for (size_t j = 0; j < v.size(); ++j)
        if (is_negative_integer(v[j] + shift[j])) s.insert(static_cast<int>(j));
    return s;
}

/// Falling-factorial evaluation [v]_mu.
inline Rational falling_factorial_at(const QVec& v, const Monomial& mu) {
    Rational r = 1;
    for (size_t j = 0; j < v.size(); ++j) r *= falling_factorial(v[j], mu.e[j]);
    return r;
}

/// v with A v = beta whose falling factorials [v]_{g+} vanish for every basis
/// binomial; the candidates for series starting exponents.
struct FakeExponent {
    QVec v;
    std::vector<StandardPair> witnesses;
};

struct FakeExponentDiagnostics {
    int inconsistent_pairs = 0;
    int underdetermined_pairs = 0;
    int uncertified = 0;
};

/// Solve per standard pair: v agrees with the anchor off the face and
/// A v = beta on it; keep solutions annihilating the distraction generators.
inline std::vector<FakeExponent> fake_exponents(const AMatrix& a, const QVec& beta,
                                                const ToricGB& gb,
                                                FakeExponentDiagnostics* diag = nullptr) {
    MonomialIdeal ini = initial_ideal(gb, static_cast<size_t>(a.n));
    std::vector<StandardPair> pairs = standard_pairs(ini);
    std::map<QVec, std::vector<StandardPair>> found;
    FakeExponentDiagnostics local;
    for (const auto& sp : pairs) {
        std::vector<int> face(sp.face.begin(), sp.face.end());
        QMat m = a.columns_q(face);
        QVec rhs = beta;
        for (int i = 0; i < a.d; ++i)
            for (int j = 0; j < a.n; ++j) rhs[i] -= Rational(a.rows[i][j]) * sp.anchor.e[j];
        SolveResult sol = solve_exact(m, rhs);
        if (!sol.consistent) {
            ++local.inconsistent_pairs;
            continue;
        }
        if (!sol.nullspace.empty()) {
            ++local.underdetermined_pairs;
            continue;
        }
        QVec v(a.n, Rational(0));
        for (int j = 0; j < a.n; ++j) v[j] = sp.anchor.e[j];
        for (size_t k = 0; k < face.size(); ++k) v[face[k]] = sol.particular[k];
        bool certified = true;
        for (const auto& b : gb.basis)
            if (falling_factorial_at(v, b.lead()) != 0) {
                certified = false;
                break;
            }
        if (!certified) {
            ++local.uncertified;
            continue;
        }
        found[v].push_back(sp);
    }
    if (diag) *diag = local;
    std::vector<FakeExponent> out;
    for (auto& [v, wits] : found) out.push_back({v, std::move(wits)});
    return out;
}

/// Distraction data at a fake exponent: the sets G^(i) (indices where the
/// localized factors vanish) plus the corresponding generators in theta.
struct Distraction {
    std::vector<std::set<int>> g_sets;              // one per basis binomial
    std::vector<SparsePoly> distraction_gens;       // [theta]_{g+}
    std::vector<SparsePoly> localized_gens;         // prod_{j in G^(i)} (theta_j - v_j)
};

/// G^(i) = nsupp(v - g^(i)) \ nsupp(v) = {j : v_j in N, g_j > v_j}.
inline std::set<int> g_set(const QVec& v, const IntVec& g) {
    std::set<int> s;
    for (size_t j = 0; j < v.size(); ++j)
        if (is_nonnegative_integer(v[j]) && Rational(g[j]) > v[j]) s.insert(static_cast<int>(j));
    return s;
}

inline Distraction distraction_generators(const ToricGB& gb, const QVec& v) {
    const size_t n = v.size();
    Distraction d;
    for (const auto& b : gb.basis) {
        d.g_sets.push_back(g_set(v, b.g));

        SparsePoly full = SparsePoly::constant(n, "theta", 1);
        for (size_t j = 0; j < n; ++j) {
            for (long t = 0; t < b.g[j]; ++t) {
                SparsePoly factor = SparsePoly::variable(n, "theta", j);
                factor.add_term(Monomial(n), Rational(-t));
                full *= factor;
            }
        }
        d.distraction_gens.push_back(full);

        SparsePoly local = SparsePoly::constant(n, "theta", 1);
        for (int j : d.g_sets.back()) {
            SparsePoly factor = SparsePoly::variable(n, "theta", static_cast<size_t>(j));
            factor.add_term(Monomial(n), -v[j]);
            local *= factor;
        }
        d.localized_gens.push_back(local);
    }
    return d;
}

/// Generators of the fake indicial ideal <A theta - beta> + distraction.
inline std::vector<SparsePoly> fake_indicial_generators(const AMatrix& a, const QVec& beta,
                                                        const ToricGB& gb) {
    std::vector<SparsePoly> gens;
    const size_t n = static_cast<size_t>(a.n);
    for (int i = 0; i < a.d; ++i) {
        SparsePoly e(n, "theta");
        for (int j = 0; j < a.n; ++j)
            if (a.rows[i][j] != 0) e.add_term(Monomial::unit(n, j), Rational(a.rows[i][j]));
        e.add_term(Monomial(n), -beta[i]);
        gens.push_back(std::move(e));
    }
    for (const auto& b : gb.basis) {
        SparsePoly full = SparsePoly::constant(n, "theta", 1);
        for (size_t j = 0; j < n; ++j)
            for (long t = 0; t < b.g[j]; ++t) {
                SparsePoly factor = SparsePoly::variable(n, "theta", j);
                factor.add_term(Monomial(n), Rational(-t));
                full *= factor;
            }
        gens.push_back(std::move(full));
    }
    return gens;
}

}  // namespace gkz
