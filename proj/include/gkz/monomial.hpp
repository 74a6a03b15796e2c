#pragma once

#include "gkz/rational.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace gkz {

/// Exponent vector; entries are nonnegative.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(size_t n) : e(n, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    size_t nvars() const { return e.size(); }

    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }

    bool is_one() const {
        return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
    }

    bool divides(const Monomial& other) const {
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] > other.e[j]) return false;
        return true;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r(*this);
        for (size_t j = 0; j < e.size(); ++j) r.e[j] += other.e[j];
        return r;
    }

    /// Quotient; caller guarantees divisibility.
    Monomial operator/(const Monomial& other) const {
        Monomial r(*this);
        for (size_t j = 0; j < e.size(); ++j) r.e[j] -= other.e[j];
        return r;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial r(a);
        for (size_t j = 0; j < r.e.size(); ++j) r.e[j] = std::max(r.e[j], b.e[j]);
        return r;
    }

    bool coprime_with(const Monomial& other) const {
        for (size_t j = 0; j < e.size(); ++j)
            if (e[j] > 0 && other.e[j] > 0) return false;
        return true;
    }

    bool operator==(const Monomial& other) const { return e == other.e; }
    // structural order used for canonical in-memory storage only
    bool operator<(const Monomial& other) const { return e < other.e; }

    static Monomial unit(size_t n, size_t j, int pow = 1) {
        Monomial m(n);
        m.e[j] = pow;
        return m;
    }
};

/// Total term order on monomials of a fixed ring.
///
/// Weight orders are refined by graded reverse lex; with negative weight
/// entries the result is a well-order only degree by degree, which suffices
/// for Groebner computations on homogeneous input.
struct TermOrder {
    enum class Kind { Lex, GrevLex, WeightGrevLex };

    Kind kind = Kind::GrevLex;
    QVec weight;            // WeightGrevLex only
    std::vector<int> prec;  // variable indices, most significant first; empty = natural

    static TermOrder lex(size_t) { return {Kind::Lex, {}, {}}; }
    static TermOrder grevlex(size_t) { return {Kind::GrevLex, {}, {}}; }
    static TermOrder weighted(QVec w) { return {Kind::WeightGrevLex, std::move(w), {}}; }

    /// GrevLex with variable j cheapest and the rest in natural order.
    static TermOrder grevlex_with_last(size_t n, size_t j) {
        TermOrder o{Kind::GrevLex, {}, {}};
        for (size_t k = 0; k < n; ++k)
            if (k != j) o.prec.push_back(static_cast<int>(k));
        o.prec.push_back(static_cast<int>(j));
        return o;
    }

    bool has_negative_weight() const {
        return std::any_of(weight.begin(), weight.end(), [](const Rational& w) { return w < 0; });
    }

    /// strict a < b
    bool less(const Monomial& a, const Monomial& b) const {
        if (kind == Kind::WeightGrevLex) {
            Rational wa = 0, wb = 0;
            for (size_t j = 0; j < a.e.size(); ++j) {
                wa += weight[j] * a.e[j];
                wb += weight[j] * b.e[j];
            }
            if (wa != wb) return wa < wb;
            return grevlex_less(a, b);
        }
        if (kind == Kind::Lex) {
            if (prec.empty()) {
                for (size_t j = 0; j < a.e.size(); ++j)
                    if (a.e[j] != b.e[j]) return a.e[j] < b.e[j];
                return false;
            }
            for (int v : prec)
                if (a.e[v] != b.e[v]) return a.e[v] < b.e[v];
            return false;
        }
        return grevlex_less(a, b);
    }

    bool greater(const Monomial& a, const Monomial& b) const { return less(b, a); }

private:
    bool grevlex_less(const Monomial& a, const Monomial& b) const {
        int da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        if (prec.empty()) {
            for (size_t j = a.e.size(); j-- > 0;)
                if (a.e[j] != b.e[j]) return a.e[j] > b.e[j];
            return false;
        }
        for (size_t k = prec.size(); k-- > 0;) {
            int v = prec[k];
            if (a.e[v] != b.e[v]) return a.e[v] > b.e[v];
        }
        return false;
    }
};

}  // namespace gkz
