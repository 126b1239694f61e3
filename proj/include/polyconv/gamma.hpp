/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <polyconv/combinatorics.hpp>
#include <polyconv/exact_scalar.hpp>
#include <polyconv/rational.hpp>

#include <stdexcept>

namespace polyconv {

// Exact gamma value at an integer or half-integer argument:
//   Gamma(k)       = (k-1)!                      (integer k >= 1)
//   Gamma(k + 1/2) = ((2k-1)!!/2^k) * sqrt(pi)   (k >= 0)
// The rational part is stored together with a sqrt(pi) flag; two flagged
// values multiply to a full pi.
struct HalfGamma {
    Rational rational_part;
    bool sqrt_pi = false;

    friend bool operator==(const HalfGamma&, const HalfGamma&) = default;
};

// Product of two gamma values. Both flagged: sqrt(pi)^2 = pi. A single
// flag has no ExactScalar representation and is rejected.
inline ExactScalar operator*(const HalfGamma& a, const HalfGamma& b) {
    if (a.sqrt_pi != b.sqrt_pi)
        throw std::domain_error("product leaves a bare sqrt(pi) factor");
    return ExactScalar(Rational(a.rational_part * b.rational_part), a.sqrt_pi ? 1 : 0);
}

// Gamma(twice_arg / 2) for twice_arg >= 1.
inline HalfGamma gamma_half(int twice_arg) {
    if (twice_arg <= 0) throw std::domain_error("gamma at non-positive argument");
    if (twice_arg % 2 == 0) return {Rational(factorial(twice_arg / 2 - 1)), false};
    // Gamma(n + 1/2) with n = (twice_arg-1)/2: (2n-1)!!/2^n * sqrt(pi)
    const int n = (twice_arg - 1) / 2;
    BigInt den(1);
    mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
    return {make_rational(double_factorial(twice_arg - 2), den), true};
}

// Eulerian integral of the first kind at half-integer arguments:
//   B(x, y) = Gamma(x) Gamma(y) / Gamma(x+y),  x = twice_x/2, y = twice_y/2.
// Grade: pi when both arguments are half-integers, rational otherwise
// (the stray sqrt(pi) of a mixed pair cancels against Gamma(x+y)).
inline ExactScalar beta_integral(int twice_x, int twice_y) {
    if (twice_x <= 0 || twice_y <= 0)
        throw std::domain_error("beta integral needs positive arguments");
    const HalfGamma gx = gamma_half(twice_x);
    const HalfGamma gy = gamma_half(twice_y);
    const HalfGamma gxy = gamma_half(twice_x + twice_y);
    const int half_pi_count = (gx.sqrt_pi ? 1 : 0) + (gy.sqrt_pi ? 1 : 0) - (gxy.sqrt_pi ? 1 : 0);
    // Parity of twice_x + twice_y makes a net half power impossible.
    if (half_pi_count % 2 != 0)
        throw std::logic_error("unreachable: odd sqrt(pi) count in beta integral");
    Rational coeff = gx.rational_part * gy.rational_part;
    coeff /= gxy.rational_part;
    return ExactScalar(std::move(coeff), half_pi_count / 2);
}

} // namespace polyconv
