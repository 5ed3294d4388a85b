#pragma once

/// Arbitrary-precision exact rationals on top of GMP.
///
/// Rational keeps the canonical form invariant at every boundary:
/// denominator > 0 and gcd(|num|, den) = 1. Zero is 0/1.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "dworkhg/errors.hpp"

namespace dworkhg {

using Integer = mpz_class;

class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}

    Rational(long num, long den) {
        if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with denominator 0");
        v_ = mpq_class(Integer(num), Integer(den));
        v_.canonicalize();
    }

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw Error(ErrorCode::ZeroDenominator, "rational with denominator 0");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Accepts "p" or "p/q".
    static Rational parse(const std::string& s) {
        mpq_class q;
        if (q.set_str(s, 10) != 0)
            throw Error(ErrorCode::ParseError, "not a rational: '" + s + "'");
        if (q.get_den() == 0)
            throw Error(ErrorCode::ZeroDenominator, "rational with denominator 0: '" + s + "'");
        q.canonicalize();
        return Rational(q, AlreadyCanonical{});
    }

    Integer num() const { return v_.get_num(); }
    Integer den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Integer floor() const {
        Integer q;
        mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
        return q;
    }

    // Fractional part, always in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { return Rational(mpq_class(-v_), AlreadyCanonical{}); }

    Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_), AlreadyCanonical{}); }
    Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_), AlreadyCanonical{}); }
    Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_), AlreadyCanonical{}); }

    Rational operator/(const Rational& o) const {
        if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational division by zero");
        return Rational(mpq_class(v_ / o.v_), AlreadyCanonical{});
    }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    bool operator==(const Rational& o) const { return v_ == o.v_; }
    bool operator!=(const Rational& o) const { return v_ != o.v_; }
    bool operator<(const Rational& o) const { return v_ < o.v_; }
    bool operator<=(const Rational& o) const { return v_ <= o.v_; }
    bool operator>(const Rational& o) const { return v_ > o.v_; }
    bool operator>=(const Rational& o) const { return v_ >= o.v_; }

    // "p/q", denominator omitted when 1.
    std::string str() const { return v_.get_str(); }

    const mpq_class& raw() const { return v_; }

private:
    struct AlreadyCanonical {};
    Rational(const mpq_class& q, AlreadyCanonical) : v_(q) {}

    mpq_class v_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace dworkhg
