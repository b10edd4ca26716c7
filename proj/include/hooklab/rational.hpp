#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace hooklab {

/// Exact arbitrary-precision rational scalar. Canonical form (reduced,
/// positive denominator) is maintained by GMP for all arithmetic results.
using Rational = mpq_class;

/// Raised when an evaluation hits a vanishing denominator. Callers in the
/// random-point verification modes catch this and resample.
struct pole_error : std::runtime_error {
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational make_rational(long num, long den) {
    if (den == 0) throw pole_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    q.canonicalize();
    return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_pow(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw pole_error("0 raised to a negative power");
        return rat_pow(Rational(1) / base, -exp);
    }
    Rational acc(1), b = base;
    while (exp > 0) {
        if (exp & 1) acc *= b;
        b *= b;
        exp >>= 1;
    }
    return acc;
}

inline Rational factorial(long n) {
    Rational acc(1);
    for (long i = 2; i <= n; ++i) acc *= i;
    return acc;
}

/// h_n = 1 + 1/2 + ... + 1/n
inline Rational harmonic(long n) {
    Rational acc(0);
    for (long i = 1; i <= n; ++i) acc += make_rational(1, i);
    return acc;
}

inline long binomial2(long k) { return k * (k - 1) / 2; }

}  // namespace hooklab
