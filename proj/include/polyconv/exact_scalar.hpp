/* SPDX-License-Identifier: Apache-2.0 */
#pragma once

#include <polyconv/rational.hpp>

#include <stdexcept>
#include <string>

namespace polyconv {

// A rational number times an integer power of pi. pi is a formal grading,
// never evaluated numerically: values of different pi grade cannot be
// added, and every end-to-end matrix entry comes out at grade 0.
//
// An exact zero is compatible with every grade (it absorbs), so sums with
// vanishing terms stay well-defined.
class ExactScalar {
public:
    ExactScalar() : coeff_(0), pi_power_(0) {}
    ExactScalar(Rational coeff, int pi_power = 0) // NOLINT(google-explicit-constructor)
        : coeff_(std::move(coeff)), pi_power_(coeff_ == 0 ? 0 : pi_power) {}
    ExactScalar(long coeff) // NOLINT(google-explicit-constructor)
        : coeff_(coeff), pi_power_(0) {}

    static ExactScalar pi(int power = 1) { return ExactScalar(Rational(1), power); }

    const Rational& coeff() const { return coeff_; }
    int pi_power() const { return pi_power_; }

    bool is_zero() const { return coeff_ == 0; }
    bool is_rational() const { return pi_power_ == 0; }

    // Grade-0 view; throws if a genuine pi power is present.
    const Rational& as_rational() const {
        if (!is_rational())
            throw std::domain_error("exact scalar carries pi^" + std::to_string(pi_power_));
        return coeff_;
    }

    ExactScalar operator-() const { return ExactScalar(Rational(-coeff_), pi_power_); }

    ExactScalar& operator+=(const ExactScalar& rhs) {
        if (rhs.is_zero()) return *this;
        if (is_zero()) {
            *this = rhs;
            return *this;
        }
        if (pi_power_ != rhs.pi_power_)
            throw std::domain_error("adding exact scalars of different pi grade: pi^" +
                                    std::to_string(pi_power_) + " vs pi^" +
                                    std::to_string(rhs.pi_power_));
        coeff_ += rhs.coeff_;
        if (coeff_ == 0) pi_power_ = 0;
        return *this;
    }
    ExactScalar& operator-=(const ExactScalar& rhs) { return *this += -rhs; }

    ExactScalar& operator*=(const ExactScalar& rhs) {
        coeff_ *= rhs.coeff_;
        pi_power_ = (coeff_ == 0) ? 0 : pi_power_ + rhs.pi_power_;
        return *this;
    }

    ExactScalar& operator/=(const ExactScalar& rhs) {
        if (rhs.is_zero()) throw std::domain_error("division by exact zero");
        coeff_ /= rhs.coeff_;
        pi_power_ = (coeff_ == 0) ? 0 : pi_power_ - rhs.pi_power_;
        return *this;
    }

    friend ExactScalar operator+(ExactScalar a, const ExactScalar& b) { return a += b; }
    friend ExactScalar operator-(ExactScalar a, const ExactScalar& b) { return a -= b; }
    friend ExactScalar operator*(ExactScalar a, const ExactScalar& b) { return a *= b; }
    friend ExactScalar operator/(ExactScalar a, const ExactScalar& b) { return a /= b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        if (a.is_zero() && b.is_zero()) return true;
        return a.pi_power_ == b.pi_power_ && a.coeff_ == b.coeff_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    // "p/q", "p/q*pi", or "p/q*pi^k"; "/q" dropped when q == 1.
    std::string str() const {
        std::string out = to_string(coeff_);
        if (pi_power_ == 1)
            out += "*pi";
        else if (pi_power_ != 0)
            out += "*pi^" + std::to_string(pi_power_);
        return out;
    }

    static ExactScalar parse(const std::string& text) {
        const auto star = text.find("*pi");
        if (star == std::string::npos) return ExactScalar(parse_rational(text));
        Rational coeff = parse_rational(text.substr(0, star));
        std::string tail = text.substr(star + 3);
        int power = 1;
        if (!tail.empty()) {
            if (tail[0] != '^' || tail.size() < 2)
                throw std::invalid_argument("bad exact scalar: '" + text + "'");
            power = std::stoi(tail.substr(1));
        }
        return ExactScalar(std::move(coeff), power);
    }

private:
    Rational coeff_; // lowest terms, positive denominator (mpq canonical)
    int pi_power_;   // 0 whenever coeff_ is 0
};

inline ExactScalar abs(const ExactScalar& v) {
    return ExactScalar(abs(v.coeff()), v.pi_power());
}

// Magnitude order within one pi grade (zero compares against anything).
inline bool less_magnitude(const ExactScalar& a, const ExactScalar& b) {
    if (a.is_zero() || b.is_zero()) return abs(a.coeff()) < abs(b.coeff());
    if (a.pi_power() != b.pi_power())
        throw std::domain_error("comparing exact scalars of different pi grade");
    return abs(a.coeff()) < abs(b.coeff());
}

} // namespace polyconv
