#pragma once

/// Rational functions in one variable over Rational, kept in canonical form:
/// gcd(num, den) = 1 and the denominator monic. Equality is structural.

#include <string>

#include "dworkhg/polynomial.hpp"

namespace dworkhg {

class RationalFunction {
public:
    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    RationalFunction(const Polynomial& num) : num_(num), den_(Rational(1)) {}
    RationalFunction(Polynomial num, Polynomial den);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

    // Value of a constant rational function; misuse is a logic error.
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;

    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    bool operator==(const RationalFunction& o) const {
        return num_ == o.num_ && den_ == o.den_;
    }

    RationalFunction derivative() const;

    // Exact evaluation; PoleAtPoint when the denominator vanishes there.
    Rational eval(const Rational& point) const;

    // Multiply by x^k; k may be negative.
    RationalFunction times_power(int k) const;

    // Rewrite as a rational function of x^n (NotPowerCompatible otherwise).
    RationalFunction deflate(int n) const;

    std::string str(const std::string& var) const;

private:
    Polynomial num_, den_;
};

// Limit as the variable goes to infinity; requires deg(num) <= deg(den),
// otherwise DivergentAtInfinity.
Rational limit_at_infinity(const RationalFunction& f);

}  // namespace dworkhg
