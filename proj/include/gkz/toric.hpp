#pragma once

#include "gkz/groebner.hpp"
#include "gkz/lattice.hpp"
#include "gkz/poly.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace gkz {

/// Pure-difference binomial del^{g+} - del^{g-}, stored by its lattice vector
/// oriented so that del^{g+} is the leading side.
struct Binomial {
    IntVec g;

    SparsePoly poly(const std::string& label = "dx") const {
        SparsePoly p(g.size(), label);
        p.add_term(Monomial(positive_part_exps()), 1);
        p.add_term(Monomial(negative_part_exps()), -1);
        return p;
    }

    std::vector<int> positive_part_exps() const {
        std::vector<int> e(g.size(), 0);
        for (size_t j = 0; j < g.size(); ++j) e[j] = g[j] > 0 ? static_cast<int>(g[j]) : 0;
        return e;
    }
    std::vector<int> negative_part_exps() const {
        std::vector<int> e(g.size(), 0);
        for (size_t j = 0; j < g.size(); ++j) e[j] = g[j] < 0 ? static_cast<int>(-g[j]) : 0;
        return e;
    }

    Monomial lead() const { return Monomial(positive_part_exps()); }
    Monomial trail() const { return Monomial(negative_part_exps()); }

    bool operator==(const Binomial& other) const { return g == other.g; }
};

/// Minimal generators of a monomial ideal.
struct MonomialIdeal {
    std::vector<Monomial> gens;
    size_t nvars = 0;

    bool contains(const Monomial& m) const { return monomial_in_ideal(m, gens); }
};

struct ToricGB {
    std::vector<Binomial> basis;  // indexed as g^(1), g^(2), ... (0-based storage)
    TermOrder order;              // w refined by grevlex
    QVec w;
    bool generic = true;  // false when some basis element has w-tied sides

    std::vector<SparsePoly> polys(const std::string& label = "dx") const {
        std::vector<SparsePoly> out;
        out.reserve(basis.size());
        for (const auto& b : basis) out.push_back(b.poly(label));
        return out;
    }

    QVec lead_weights() const {
        QVec out;
        for (const auto& b : basis) {
            Rational s = 0;
            for (size_t j = 0; j < b.g.size(); ++j)
                if (b.g[j] > 0) s += w[j] * b.g[j];
            out.push_back(s);
        }
        return out;
    }

    std::vector<IntVec> vectors() const {
        std::vector<IntVec> out;
        out.reserve(basis.size());
        for (const auto& b : basis) out.push_back(b.g);
        return out;
    }
};

namespace detail {

inline SparsePoly binomial_of(const IntVec& u, const std::string& label) {
    return Binomial{u}.poly(label);
}

/// Divide a pure binomial by the largest power of variable j present in both
/// monomials.
inline SparsePoly strip_variable(const SparsePoly& f, size_t j) {
    if (f.term_count() != 2) return f;
    auto it = f.terms().begin();
    int a = it->first.e[j];
    int b = std::next(it)->first.e[j];
    int m = std::min(a, b);
    if (m == 0) return f;
    SparsePoly r(f.nvars(), f.label());
    for (const auto& [mono, c] : f.terms()) {
        Monomial q = mono;
        q.e[j] -= m;
        r.add_term(q, c);
    }
    return r;
}

}  // namespace detail

/// Reduced Groebner basis of the toric ideal I_A with respect to w, realized
/// by saturating the lattice-basis ideal variable by variable (grevlex with
/// the saturation variable cheapest, then divide by its largest common
/// power), followed by a final reduced basis under the w-refined order.
/// The input binomials are homogeneous in the standard grading thanks to the
/// hyperplane certificate of A, which the saturation step needs.
inline ToricGB toric_groebner(const AMatrix& a, const QVec& w) {
    if (static_cast<int>(w.size()) != a.n)
        throw InputError("BadWeight", "weight length must match the column count");
    const std::string label = "dx";
    LatticeBasis kb = kernel_basis(a);

    ToricGB out;
    out.w = w;
    out.order = TermOrder::weighted(w);
    if (kb.empty()) return out;

    std::vector<SparsePoly> gens;
    for (const auto& b : kb.vecs) gens.push_back(detail::binomial_of(b, label));

    for (int j = 0; j < a.n; ++j) {
        TermOrder o = TermOrder::grevlex_with_last(a.n, static_cast<size_t>(j));
        std::vector<SparsePoly> gb = reduced_groebner(gens, o);
        gens.clear();
        for (const auto& f : gb) gens.push_back(detail::strip_variable(f, static_cast<size_t>(j)));
    }

    std::vector<SparsePoly> final_gb = reduced_groebner(gens, out.order);

    for (const auto& f : final_gb) {
        if (f.term_count() != 2)
            throw Error("NotBinomial", "saturation produced a non-binomial generator");
        auto it = f.terms().begin();
        Monomial m1 = it->first;
        Monomial m2 = std::next(it)->first;
        // orient by the refined order (leading side first)
        if (out.order.less(m1, m2)) std::swap(m1, m2);
        IntVec g(a.n);
        for (int k = 0; k < a.n; ++k) g[k] = m1.e[k] - m2.e[k];
        if (!a.in_kernel(g))
            throw Error("NotInKernel", "basis binomial does not annihilate under A");
        Rational w1 = dot(w, IntVec(m1.e.begin(), m1.e.end()));
        Rational w2 = dot(w, IntVec(m2.e.begin(), m2.e.end()));
        if (w1 == w2) out.generic = false;
        out.basis.push_back(Binomial{g});
    }
    // stable index: descending by leading monomial under the refined order
    std::sort(out.basis.begin(), out.basis.end(), [&](const Binomial& x, const Binomial& y) {
        return out.order.greater(x.lead(), y.lead());
    });
    return out;
}

/// Debug route: binomials of all kernel vectors within an enumeration radius,
/// Groebner basis, and a stabilization check (radius vs radius+1 agreement).
/// Exists to cross-check the saturation route; outputs must coincide.
inline ToricGB toric_groebner_enumerated(const AMatrix& a, const QVec& w, long radius) {
    const std::string label = "dx";
    LatticeBasis kb = kernel_basis(a);
    ToricGB out;
    out.w = w;
    out.order = TermOrder::weighted(w);
    if (kb.empty()) return out;

    auto gb_at = [&](long r) {
        std::vector<SparsePoly> gens;
        LatticeBoxEnumerator box(kb, static_cast<size_t>(a.n), r);
        box.for_each([&](const IntVec& u) {
            if (std::all_of(u.begin(), u.end(), [](long x) { return x == 0; })) return;
            gens.push_back(detail::binomial_of(u, label));
        });
        return reduced_groebner(gens, out.order);
    };
    std::vector<SparsePoly> gb = gb_at(radius);
    if (gb != gb_at(radius + 1))
        throw Error("Unstabilized", "enumerated toric basis did not stabilize at this radius");

    for (const auto& f : gb) {
        auto it = f.terms().begin();
        Monomial m1 = it->first;
        Monomial m2 = std::next(it)->first;
        if (out.order.less(m1, m2)) std::swap(m1, m2);
        IntVec g(a.n);
        for (int k = 0; k < a.n; ++k) g[k] = m1.e[k] - m2.e[k];
        out.basis.push_back(Binomial{g});
    }
    std::sort(out.basis.begin(), out.basis.end(), [&](const Binomial& x, const Binomial& y) {
        return out.order.greater(x.lead(), y.lead());
    });
    return out;
}

/// Minimal generators of in_w(I_A): the leading monomials of the reduced GB.
inline MonomialIdeal initial_ideal(const ToricGB& gb, size_t nvars) {
    MonomialIdeal m;
    m.nvars = nvars;
    for (const auto& b : gb.basis) m.gens.push_back(b.lead());
    std::sort(m.gens.begin(), m.gens.end(),
              [](const Monomial& x, const Monomial& y) { return x.e < y.e; });
    return m;
}

}  // namespace gkz
