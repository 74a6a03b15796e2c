#pragma once

#include "gkz/monomial.hpp"
#include "gkz/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gkz {

/// Sparse multivariate polynomial over Q with a named ambient variable set
/// ("s", "x", "theta", "ds", "dz", "log"). No zero coefficients are stored;
/// terms live in a map keyed structurally, so equality is canonical.
class SparsePoly {
public:
    using TermMap = std::map<Monomial, Rational>;

    SparsePoly() = default;
    SparsePoly(size_t nvars, std::string label) : nvars_(nvars), label_(std::move(label)) {}

    static SparsePoly zero(size_t nvars, const std::string& label) {
        return SparsePoly(nvars, label);
    }

    static SparsePoly constant(size_t nvars, const std::string& label, const Rational& c) {
        SparsePoly p(nvars, label);
        if (c != 0) p.terms_[Monomial(nvars)] = c;
        return p;
    }

    static SparsePoly variable(size_t nvars, const std::string& label, size_t j) {
        SparsePoly p(nvars, label);
        p.terms_[Monomial::unit(nvars, j)] = 1;
        return p;
    }

    static SparsePoly from_monomial(const Monomial& m, const Rational& c,
                                    const std::string& label) {
        SparsePoly p(m.nvars(), label);
        if (c != 0) p.terms_[m] = c;
        return p;
    }

    size_t nvars() const { return nvars_; }
    const std::string& label() const { return label_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    Rational constant_term() const {
        auto it = terms_.find(Monomial(nvars_));
        return it == terms_.end() ? Rational(0) : it->second;
    }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const {
        int d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;  // -1 for the zero polynomial
    }

    bool is_homogeneous() const {
        int d = -1;
        for (const auto& [m, c] : terms_) {
            if (d < 0) d = m.degree();
            else if (m.degree() != d) return false;
        }
        return true;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, c);
        return *this;
    }

    SparsePoly& operator-=(const SparsePoly& other) {
        check_compatible(other);
        for (const auto& [m, c] : other.terms_) add_term(m, -c);
        return *this;
    }

    friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
    friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }

    friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
        a.check_compatible(b);
        SparsePoly r(a.nvars_, a.label_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    SparsePoly& operator*=(const SparsePoly& other) { return *this = *this * other; }

    SparsePoly scaled(const Rational& c) const {
        SparsePoly r(nvars_, label_);
        if (c == 0) return r;
        for (const auto& [m, coef] : terms_) r.terms_[m] = coef * c;
        return r;
    }

    SparsePoly operator-() const { return scaled(-1); }

    SparsePoly times_monomial(const Monomial& m, const Rational& c) const {
        SparsePoly r(nvars_, label_);
        if (c == 0) return r;
        for (const auto& [mm, coef] : terms_) r.terms_[mm * m] = coef * c;
        return r;
    }

    SparsePoly pow(int k) const {
        SparsePoly r = constant(nvars_, label_, 1);
        for (int i = 0; i < k; ++i) r *= *this;
        return r;
    }

    bool operator==(const SparsePoly& other) const {
        return nvars_ == other.nvars_ && terms_ == other.terms_;
    }
    bool operator!=(const SparsePoly& other) const { return !(*this == other); }

    /// Largest term under `order`.
    std::pair<Monomial, Rational> leading_term(const TermOrder& order) const {
        if (terms_.empty()) throw Error("ZeroPolynomial", "zero polynomial has no leading term");
        auto best = terms_.begin();
        for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
            if (order.less(best->first, it->first)) best = it;
        return {best->first, best->second};
    }

    SparsePoly monic(const TermOrder& order) const {
        auto [m, c] = leading_term(order);
        return scaled(1 / c);
    }

    /// Keep terms of total degree at most `cap`.
    SparsePoly truncated(int cap) const {
        SparsePoly r(nvars_, label_);
        for (const auto& [m, c] : terms_)
            if (m.degree() <= cap) r.terms_[m] = c;
        return r;
    }

    /// Homogeneous component of degree d.
    SparsePoly component(int d) const {
        SparsePoly r(nvars_, label_);
        for (const auto& [m, c] : terms_)
            if (m.degree() == d) r.terms_[m] = c;
        return r;
    }

    SparsePoly relabeled(const std::string& label) const {
        SparsePoly r = *this;
        r.label_ = label;
        return r;
    }

    Rational evaluate(const QVec& point) const {
        Rational r = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (size_t j = 0; j < nvars_; ++j)
                for (int k = 0; k < m.e[j]; ++k) t *= point[j];
            r += t;
        }
        return r;
    }

    /// Coefficient vector over a fixed monomial list (for exact rank work).
    QVec coefficient_vector(const std::vector<Monomial>& basis) const {
        QVec v(basis.size(), Rational(0));
        for (size_t i = 0; i < basis.size(); ++i) v[i] = coefficient(basis[i]);
        return v;
    }

    std::string str(const std::vector<std::string>& varnames = {}) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (const auto& [m, c] : terms_) {
            if (!out.empty()) out += " + ";
            out += to_string(c);
            for (size_t j = 0; j < nvars_; ++j) {
                if (m.e[j] == 0) continue;
                out += "*";
                out += varnames.empty() ? label_ + std::to_string(j + 1) : varnames[j];
                if (m.e[j] > 1) out += "^" + std::to_string(m.e[j]);
            }
        }
        return out;
    }

private:
    void check_compatible(const SparsePoly& other) const {
        if (nvars_ != other.nvars_ || label_ != other.label_)
            throw Error("VariableMismatch", "operands live in different rings (" + label_ + "[" +
                                                std::to_string(nvars_) + "] vs " + other.label_ +
                                                "[" + std::to_string(other.nvars_) + "])");
    }

    size_t nvars_ = 0;
    std::string label_;
    TermMap terms_;
};

/// Substitute variable k of `p` by the linear form sum_j forms[k][j] * t_j in
/// a target ring with `target_nvars` variables. Realizes the theta -> (Bs)
/// and ds -> (xB) substitution homomorphisms.
inline SparsePoly substitute_linear_forms(const SparsePoly& p,
                                          const std::vector<QVec>& forms,
                                          size_t target_nvars,
                                          const std::string& target_label) {
    if (forms.size() != p.nvars())
        throw Error("VariableMismatch", "substitution needs one linear form per variable");
    std::vector<SparsePoly> images;
    images.reserve(forms.size());
    for (const auto& f : forms) {
        SparsePoly g(target_nvars, target_label);
        for (size_t j = 0; j < target_nvars; ++j)
            if (f[j] != 0) g.add_term(Monomial::unit(target_nvars, j), f[j]);
        images.push_back(std::move(g));
    }
    SparsePoly r = SparsePoly::zero(target_nvars, target_label);
    for (const auto& [m, c] : p.terms()) {
        SparsePoly t = SparsePoly::constant(target_nvars, target_label, c);
        for (size_t k = 0; k < p.nvars(); ++k)
            for (int i = 0; i < m.e[k]; ++i) t *= images[k];
        r += t;
    }
    return r;
}

/// Apply the constant-coefficient operator U (a polynomial in the partials of
/// f's variables) to f: del^mu acts on s^nu as [nu]_mu s^(nu-mu).
inline SparsePoly apply_diffop(const SparsePoly& op, const SparsePoly& f) {
    if (op.nvars() != f.nvars())
        throw Error("VariableMismatch", "operator and operand variable counts differ");
    SparsePoly r(f.nvars(), f.label());
    for (const auto& [mu, cu] : op.terms()) {
        for (const auto& [nu, cf] : f.terms()) {
            if (!mu.divides(nu)) continue;
            Rational factor = cu * cf;
            Monomial target = nu / mu;
            for (size_t j = 0; j < nu.nvars(); ++j)
                factor *= falling_factorial(Rational(nu.e[j]), mu.e[j]);
            r.add_term(target, factor);
        }
    }
    return r;
}

/// [q(del) . h]|_0 = sum_nu q_nu * nu! * h_nu.
inline Rational pair_at_zero(const SparsePoly& q, const SparsePoly& h) {
    if (q.nvars() != h.nvars())
        throw Error("VariableMismatch", "pairing needs matching variable counts");
    Rational r = 0;
    for (const auto& [nu, c] : q.terms()) {
        Rational hc = h.coefficient(nu);
        if (hc == 0) continue;
        Integer f = 1;
        for (int e : nu.e) f *= factorial(static_cast<unsigned long>(e));
        r += c * hc * Rational(f);
    }
    return r;
}

}  // namespace gkz
