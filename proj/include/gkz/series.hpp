#pragma once

#include "gkz/poly.hpp"

namespace gkz {

/// Polynomial truncated at a fixed total degree; arithmetic drops anything
/// beyond the cap.
struct TruncatedSeries {
    SparsePoly p;
    int cap = 0;

    TruncatedSeries() = default;
    TruncatedSeries(SparsePoly poly, int degree_cap)
        : p(poly.truncated(degree_cap)), cap(degree_cap) {}

    static TruncatedSeries one(size_t nvars, const std::string& label, int cap) {
        return {SparsePoly::constant(nvars, label, 1), cap};
    }

    TruncatedSeries operator*(const TruncatedSeries& other) const {
        int c = std::min(cap, other.cap);
        return {(p * other.p).truncated(c), c};
    }

    TruncatedSeries operator*(const SparsePoly& poly) const { return {(p * poly).truncated(cap), cap}; }

    TruncatedSeries operator+(const TruncatedSeries& other) const {
        int c = std::min(cap, other.cap);
        return {(p + other.p).truncated(c), c};
    }

    bool operator==(const TruncatedSeries& other) const { return cap == other.cap && p == other.p; }
};

/// Multiplicative inverse up to the cap, by geometric expansion of the
/// nilpotent part. Requires a nonzero constant term.
inline TruncatedSeries series_invert(const TruncatedSeries& f) {
    Rational c = f.p.constant_term();
    if (c == 0) throw MathError("NotAUnit", "series with zero constant term has no inverse");
    // f = c(1 + g) with g of positive order; 1/f = (1/c) sum (-g)^k
    SparsePoly g = f.p.scaled(1 / c);
    g.add_term(Monomial(f.p.nvars()), -1);
    SparsePoly acc = SparsePoly::constant(f.p.nvars(), f.p.label(), 1);
    SparsePoly power = acc;
    for (int k = 1; k <= f.cap; ++k) {
        power = (power * g).truncated(f.cap);
        if (power.is_zero()) break;
        if (k % 2 == 1) acc -= power;
        else acc += power;
    }
    return {acc.scaled(1 / c), f.cap};
}

}  // namespace gkz
