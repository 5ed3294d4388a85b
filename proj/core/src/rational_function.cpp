#include "dworkhg/rational_function.hpp"

#include <stdexcept>

namespace dworkhg {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw Error(ErrorCode::ZeroDenominator, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(Rational(1));
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = num_.exact_div(g);
        den_ = den_.exact_div(g);
    }
    if (!den_.leading().is_one()) {
        Rational inv = Rational(1) / den_.leading();
        num_ = num_ * inv;
        den_ = den_ * inv;
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant())
        throw std::logic_error("constant_value on a non-constant rational function");
    return num_.coeff(0);  // canonical form has den == 1 for constants
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r(*this);
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
    if (is_zero() || o.is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
    if (o.is_zero()) throw Error(ErrorCode::DivisionByZero, "rational function division by zero");
    if (is_zero()) return RationalFunction();
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::derivative() const {
    return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFunction::eval(const Rational& point) const {
    Rational d = den_.eval(point);
    if (d.is_zero())
        throw Error(ErrorCode::PoleAtPoint, "evaluation at a pole (point " + point.str() + ")");
    return num_.eval(point) / d;
}

RationalFunction RationalFunction::times_power(int k) const {
    if (k == 0 || is_zero()) return *this;
    if (k > 0) return RationalFunction(num_.shifted(k), den_);
    return RationalFunction(num_, den_.shifted(-k));
}

RationalFunction RationalFunction::deflate(int n) const {
    return RationalFunction(num_.deflate(n), den_.deflate(n));
}

std::string RationalFunction::str(const std::string& var) const {
    auto wrap = [&](const Polynomial& p) {
        std::string s = p.str(var);
        bool multi = s.find(" + ") != std::string::npos || s.find(" - ") != std::string::npos;
        return multi ? "(" + s + ")" : s;
    };
    if (den_ == Polynomial(Rational(1))) return num_.str(var);
    return wrap(num_) + " / " + wrap(den_);
}

Rational limit_at_infinity(const RationalFunction& f) {
    if (f.is_zero()) return Rational(0);
    int dn = f.num().degree(), dd = f.den().degree();
    if (dn > dd)
        throw Error(ErrorCode::DivergentAtInfinity,
                    "numerator degree " + std::to_string(dn) + " exceeds denominator degree " +
                        std::to_string(dd));
    if (dn < dd) return Rational(0);
    return f.num().leading() / f.den().leading();
}

}  // namespace dworkhg
