/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace polyconv {

// Exact arbitrary-precision integers and rationals (GMP-backed).
// Rationals are kept canonical: lowest terms, positive denominator.
using BigInt = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational q(num);
    q /= Rational(den);
    return q;
}

// Parses "p", "-p" or "p/q" (base 10). Rejects empty strings, trailing
// garbage and zero denominators.
inline Rational parse_rational(const std::string& text) {
    mpq_t raw;
    mpq_init(raw);
    if (text.empty() || mpq_set_str(raw, text.c_str(), 10) != 0) {
        mpq_clear(raw);
        throw std::invalid_argument("not a rational: '" + text + "'");
    }
    if (mpz_sgn(mpq_denref(raw)) == 0) {
        mpq_clear(raw);
        throw std::domain_error("rational with zero denominator: '" + text + "'");
    }
    mpq_canonicalize(raw);
    Rational q(raw);
    mpq_clear(raw);
    return q;
}

// "p" when the denominator is 1, "p/q" otherwise.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return mpq_get_d(q.get_mpq_t()); }

// Bridges exact values into a scalar kind (Rational passes through,
// double rounds). The float path of every formula is the same template
// instantiated at T = double.
template <class T>
T scalar_cast(const Rational& q);

template <>
inline Rational scalar_cast<Rational>(const Rational& q) {
    return q;
}

template <>
inline double scalar_cast<double>(const Rational& q) {
    return to_double(q);
}

template <class T>
T pow_scalar(T base, unsigned exp) {
    T acc(1);
    while (exp > 0) {
        if (exp & 1u) acc *= base;
        base *= base;
        exp >>= 1u;
    }
    return acc;
}

} // namespace polyconv
