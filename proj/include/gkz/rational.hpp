#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gkz {

using Integer  = mpz_class;
using Rational = mpq_class;

using IntVec = std::vector<long>;
using QVec   = std::vector<Rational>;

/// Error with a stable machine-readable code. Codes ending up on the CLI
/// surface are listed in the README.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Violated mathematical precondition (CLI exit code 2).
class MathError : public Error {
public:
    using Error::Error;
};

/// Bad input or I/O (CLI exit code 1).
class InputError : public Error {
public:
    using Error::Error;
};

inline std::string to_string(const Rational& q) {
    return q.get_str();  // "p/q" in lowest terms, "p" when the denominator is 1
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw InputError("BadRational", "empty rational literal");
    try {
        Rational q(s);
        q.canonicalize();
        return q;
    } catch (const std::invalid_argument&) {
        throw InputError("BadRational", "cannot parse rational '" + s + "'");
    }
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_negative_integer(const Rational& q) { return is_integer(q) && q < 0; }

inline bool is_nonnegative_integer(const Rational& q) { return is_integer(q) && q >= 0; }

inline long to_long(const Rational& q) {
    if (!is_integer(q)) throw Error("NotAnInteger", "expected integer, got " + to_string(q));
    if (!q.get_num().fits_slong_p())
        throw Error("Overflow", "integer out of range: " + to_string(q));
    return q.get_num().get_si();
}

inline Integer factorial(unsigned long k) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), k);
    return r;
}

/// v(v-1)...(v-k+1); the empty product for k = 0.
inline Rational falling_factorial(const Rational& v, long k) {
    Rational r = 1;
    for (long t = 0; t < k; ++t) r *= v - t;
    return r;
}

inline IntVec positive_part(const IntVec& u) {
    IntVec r(u.size(), 0);
    for (size_t j = 0; j < u.size(); ++j) r[j] = u[j] > 0 ? u[j] : 0;
    return r;
}

inline IntVec negative_part(const IntVec& u) {
    IntVec r(u.size(), 0);
    for (size_t j = 0; j < u.size(); ++j) r[j] = u[j] < 0 ? -u[j] : 0;
    return r;
}

inline IntVec vec_add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] + b[j];
    return r;
}

inline IntVec vec_sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t j = 0; j < a.size(); ++j) r[j] = a[j] - b[j];
    return r;
}

inline IntVec vec_neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t j = 0; j < a.size(); ++j) r[j] = -a[j];
    return r;
}

inline long linf_norm(const IntVec& u) {
    long m = 0;
    for (long x : u) m = std::max(m, x < 0 ? -x : x);
    return m;
}

inline Rational dot(const QVec& w, const IntVec& u) {
    Rational r = 0;
    for (size_t j = 0; j < u.size(); ++j) r += w[j] * u[j];
    return r;
}

}  // namespace gkz
