/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <polyconv/rational.hpp>

#include <stdexcept>

namespace polyconv {

// Generic kernels, instantiated at BigInt/Rational for the exact path and
// at double for the float mirror. The double instantiations overflow to
// inf where 64-bit floats run out (double factorials near n ~ 300); the
// exact path never does.

template <class T>
T factorial_of(int n) {
    if (n < 0) throw std::domain_error("factorial of negative argument");
    T acc(1);
    for (int i = 2; i <= n; ++i) acc *= T(i);
    return acc;
}

// n!! as the descending product; defined for n >= -1 with (-1)!! = 0!! = 1.
template <class T>
T double_factorial_of(int n) {
    if (n < -1) throw std::domain_error("double factorial below -1");
    T acc(1);
    for (int i = n; i >= 2; i -= 2) acc *= T(i);
    return acc;
}

template <class T>
T binom_of(int n, int k) {
    if (k < 0 || k > n) return T(0);
    if (k > n - k) k = n - k;
    T num(1), den(1);
    for (int j = 1; j <= k; ++j) {
        num *= T(n - k + j);
        den *= T(j);
    }
    return num / den;
}

// Generalized binomial C(r + 1/2, k) = (r+1/2)(r-1/2)...(r+1/2-k+1)/k!.
// Total in k >= 0; for k > r+1 the falling factorial crosses zero and the
// value becomes a signed rational.
template <class T>
T binom_half_of(int r, int k) {
    if (k < 0) throw std::domain_error("binom_half with negative k");
    T num(1);
    for (int j = 0; j < k; ++j) num *= T(2 * r + 1 - 2 * j) / T(2);
    return num / factorial_of<T>(k);
}

// Exact API of the scalar layer.

inline BigInt factorial(int n) { return factorial_of<BigInt>(n); }

inline BigInt double_factorial(int n) { return double_factorial_of<BigInt>(n); }

// Closed form of the double factorial through ordinary factorials:
// even n: 2^(n/2) (n/2)!, odd n: n! / (2^((n-1)/2) ((n-1)/2)!).
inline Rational double_factorial_closed_form(int n) {
    if (n < 0) throw std::domain_error("closed form needs n >= 0");
    if (n % 2 == 0) {
        const int h = n / 2;
        BigInt v = factorial(h);
        mpz_mul_2exp(v.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(h));
        return Rational(v);
    }
    const int h = (n - 1) / 2;
    BigInt den = factorial(h);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(h));
    return make_rational(factorial(n), den);
}

inline bool double_factorial_identity_check(int n) {
    if (n < 0) throw std::domain_error("identity check needs n >= 0");
    return Rational(double_factorial(n)) == double_factorial_closed_form(n);
}

inline BigInt binom(int n, int k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
}

inline Rational binom_half(int r, int k) {
    if (r < 0) throw std::domain_error("binom_half with negative r");
    return binom_half_of<Rational>(r, k);
}

} // namespace polyconv
