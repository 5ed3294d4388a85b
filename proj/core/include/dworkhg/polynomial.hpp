#pragma once

/// Dense univariate polynomials over Rational.
///
/// Coefficients are stored lowest degree first; the leading coefficient is
/// nonzero unless the polynomial is zero (empty coefficient vector). There is
/// a single polynomial variable throughout the library; renaming it lambda, z
/// or x is presentation-level bookkeeping.

#include <string>
#include <vector>

#include "dworkhg/rational.hpp"

namespace dworkhg {

class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    explicit Polynomial(std::vector<Rational> coeffs);

    // c * x^deg
    static Polynomial monomial(int deg, const Rational& c);
    static Polynomial x() { return monomial(1, Rational(1)); }

    // -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const Rational& leading() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& s) const;

    bool operator==(const Polynomial& o) const { return c_ == o.c_; }

    // Quotient and remainder of exact field division; divisor must be nonzero.
    std::pair<Polynomial, Polynomial> divrem(const Polynomial& divisor) const;

    // Division known to be exact; throws DivisionByZero on a zero divisor and
    // reports a ReductionOverflow-class internal error if a remainder is left.
    Polynomial exact_div(const Polynomial& divisor) const;

    Polynomial derivative() const;
    Rational eval(const Rational& point) const;
    Polynomial monic() const;

    // Multiply by x^k, k >= 0.
    Polynomial shifted(int k) const;

    // Rewrite p as a polynomial in x^n (x^n -> new variable); fails with
    // NotPowerCompatible if some exponent is not a multiple of n.
    Polynomial deflate(int n) const;

    std::string str(const std::string& var) const;

private:
    void normalize();

    std::vector<Rational> c_;
};

inline Polynomial operator*(const Rational& s, const Polynomial& p) { return p * s; }

// Monic gcd computed with a primitive pseudo-remainder sequence over the
// integers, which keeps coefficient growth tame.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

}  // namespace dworkhg
