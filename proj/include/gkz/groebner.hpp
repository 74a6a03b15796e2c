#pragma once

#include "gkz/poly.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace gkz {

/// Remainder of f on division by `gens`: no term of the result is divisible
/// by any leading monomial of `gens`.
inline SparsePoly normal_form(const SparsePoly& f, const std::vector<SparsePoly>& gens,
                              const TermOrder& order) {
    struct Lead {
        Monomial m;
        Rational c;
    };
    std::vector<Lead> leads;
    leads.reserve(gens.size());
    for (const auto& g : gens) {
        auto [m, c] = g.leading_term(order);
        leads.push_back({m, c});
    }
    SparsePoly work = f;
    SparsePoly rem(f.nvars(), f.label());
    while (!work.is_zero()) {
        auto [m, c] = work.leading_term(order);
        bool reduced = false;
        for (size_t i = 0; i < gens.size(); ++i) {
            if (!leads[i].m.divides(m)) continue;
            work -= gens[i].times_monomial(m / leads[i].m, c / leads[i].c);
            reduced = true;
            break;
        }
        if (!reduced) {
            rem.add_term(m, c);
            work.add_term(m, -c);
        }
    }
    return rem;
}

namespace detail {

inline SparsePoly s_polynomial(const SparsePoly& f, const SparsePoly& g, const TermOrder& order) {
    auto [mf, cf] = f.leading_term(order);
    auto [mg, cg] = g.leading_term(order);
    Monomial l = lcm(mf, mg);
    return f.times_monomial(l / mf, 1 / cf) - g.times_monomial(l / mg, 1 / cg);
}

}  // namespace detail

/// Buchberger with the normal selection strategy and Gebauer-Moeller style
/// pruning (coprime-lead and chain criteria). Weight orders with negative
/// entries are accepted for homogeneous input only.
inline std::vector<SparsePoly> buchberger(std::vector<SparsePoly> gens, const TermOrder& order) {
    std::vector<SparsePoly> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back(g.monic(order));
    if (basis.empty()) return basis;
    if (order.kind == TermOrder::Kind::WeightGrevLex && order.has_negative_weight())
        for (const auto& g : basis)
            if (!g.is_homogeneous())
                throw Error("NonTermOrder",
                            "weight order with negative entries needs homogeneous input");

    auto lead = [&](size_t i) { return basis[i].leading_term(order).first; };

    struct Pair {
        size_t i, j;
        Monomial l;
    };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](size_t j) {
        for (size_t i = 0; i < j; ++i) pairs.push_back({i, j, lcm(lead(i), lead(j))});
    };
    for (size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        // normal strategy: smallest lcm first
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k)
            if (order.less(pairs[k].l, pairs[best].l)) best = k;
        Pair p = pairs[best];
        pairs.erase(pairs.begin() + static_cast<long>(best));

        if (lead(p.i).coprime_with(lead(p.j))) continue;
        bool chained = false;
        for (size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == p.i || k == p.j) continue;
            if (!lead(k).divides(p.l)) continue;
            auto pending = [&](size_t a, size_t b) {
                for (const auto& q : pairs)
                    if ((q.i == std::min(a, b)) && (q.j == std::max(a, b))) return true;
                return false;
            };
            if (!pending(p.i, k) && !pending(p.j, k)) chained = true;
        }
        if (chained) continue;

        SparsePoly s = detail::s_polynomial(basis[p.i], basis[p.j], order);
        SparsePoly r = normal_form(s, basis, order);
        if (!r.is_zero()) {
            basis.push_back(r.monic(order));
            push_pairs_for(basis.size() - 1);
        }
    }
    return basis;
}

/// The unique reduced Groebner basis: minimal, monic, tails in normal form,
/// sorted ascending by leading monomial.
inline std::vector<SparsePoly> reduced_groebner(const std::vector<SparsePoly>& gens,
                                                const TermOrder& order) {
    std::vector<SparsePoly> gb = buchberger(gens, order);
    if (gb.empty()) return gb;
    // minimalize
    std::vector<SparsePoly> minimal;
    for (size_t i = 0; i < gb.size(); ++i) {
        Monomial mi = gb[i].leading_term(order).first;
        bool redundant = false;
        for (size_t j = 0; j < gb.size() && !redundant; ++j) {
            if (i == j) continue;
            Monomial mj = gb[j].leading_term(order).first;
            if (mj.divides(mi) && !(mi == mj && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(gb[i]);
    }
    // reduce tails
    std::vector<SparsePoly> reduced;
    for (size_t i = 0; i < minimal.size(); ++i) {
        std::vector<SparsePoly> others;
        for (size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        SparsePoly r = others.empty() ? minimal[i] : normal_form(minimal[i], others, order);
        reduced.push_back(r.monic(order));
    }
    std::sort(reduced.begin(), reduced.end(), [&](const SparsePoly& a, const SparsePoly& b) {
        return order.less(a.leading_term(order).first, b.leading_term(order).first);
    });
    return reduced;
}

inline bool ideals_equal(const std::vector<SparsePoly>& gens_a,
                         const std::vector<SparsePoly>& gens_b, const TermOrder& order) {
    auto nonzero = [](const std::vector<SparsePoly>& v) {
        std::vector<SparsePoly> r;
        for (const auto& p : v)
            if (!p.is_zero()) r.push_back(p);
        return r;
    };
    std::vector<SparsePoly> a = nonzero(gens_a), b = nonzero(gens_b);
    if (a.empty() || b.empty()) return a.empty() && b.empty();
    return reduced_groebner(a, order) == reduced_groebner(b, order);
}

/// Leading monomials of a reduced GB, i.e. the minimal generators of the
/// initial ideal.
inline std::vector<Monomial> initial_generators(const std::vector<SparsePoly>& reduced_gb,
                                                const TermOrder& order) {
    std::vector<Monomial> gens;
    gens.reserve(reduced_gb.size());
    for (const auto& g : reduced_gb) gens.push_back(g.leading_term(order).first);
    return gens;
}

inline bool monomial_in_ideal(const Monomial& m, const std::vector<Monomial>& gens) {
    for (const auto& g : gens)
        if (g.divides(m)) return true;
    return false;
}

/// Each variable has a pure power among the initial generators iff the
/// quotient is finite dimensional.
inline bool is_artinian(const std::vector<Monomial>& initial_gens, size_t nvars) {
    for (size_t j = 0; j < nvars; ++j) {
        bool found = false;
        for (const auto& g : initial_gens) {
            bool pure = g.e[j] > 0;
            for (size_t k = 0; k < nvars && pure; ++k)
                if (k != j && g.e[k] > 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

/// Monomials outside the ideal generated by `initial_gens`, by BFS over
/// variable multiplications. `cap` bounds the degree when the quotient is not
/// finite dimensional (cap < 0 means unbounded; caller must know it is safe).
inline std::vector<Monomial> standard_monomials(const std::vector<Monomial>& initial_gens,
                                                size_t nvars, int cap = -1) {
    std::vector<Monomial> out;
    std::set<Monomial> seen;
    std::vector<Monomial> frontier{Monomial(nvars)};
    seen.insert(frontier[0]);
    while (!frontier.empty()) {
        std::vector<Monomial> next;
        for (const auto& m : frontier) {
            if (monomial_in_ideal(m, initial_gens)) continue;
            out.push_back(m);
            if (cap >= 0 && m.degree() >= cap) continue;
            for (size_t j = 0; j < nvars; ++j) {
                Monomial mm = m * Monomial::unit(nvars, j);
                if (seen.insert(mm).second) next.push_back(mm);
            }
        }
        frontier = std::move(next);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.e < b.e;
    });
    return out;
}

}  // namespace gkz
