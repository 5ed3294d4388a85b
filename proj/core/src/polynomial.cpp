#include "dworkhg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace dworkhg {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero()) c_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

Polynomial Polynomial::monomial(int deg, const Rational& c) {
    if (c.is_zero()) return Polynomial();
    std::vector<Rational> v(static_cast<size_t>(deg) + 1, Rational(0));
    v.back() = c;
    Polynomial p;
    p.c_ = std::move(v);
    return p;
}

void Polynomial::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& Polynomial::leading() const {
    static const Rational zero(0);
    return c_.empty() ? zero : c_.back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(i)];
}

Polynomial Polynomial::operator-() const {
    Polynomial r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> v(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return Polynomial();
    std::vector<Rational> v(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(v));
}

Polynomial Polynomial::operator*(const Rational& s) const {
    if (s.is_zero()) return Polynomial();
    Polynomial r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divrem(const Polynomial& divisor) const {
    if (divisor.is_zero())
        throw Error(ErrorCode::DivisionByZero, "polynomial division by zero");
    Polynomial rem(*this);
    if (degree() < divisor.degree()) return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<size_t>(degree() - divisor.degree()) + 1, Rational(0));
    const Rational& lead = divisor.leading();
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        int shift = rem.degree() - divisor.degree();
        Rational factor = rem.leading() / lead;
        q[static_cast<size_t>(shift)] = factor;
        rem = rem - divisor.shifted(shift) * factor;
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::exact_div(const Polynomial& divisor) const {
    auto [q, r] = divrem(divisor);
    if (!r.is_zero())
        throw Error(ErrorCode::ReductionOverflow, "polynomial division expected to be exact");
    return q;
}

Polynomial Polynomial::derivative() const {
    if (c_.size() <= 1) return Polynomial();
    std::vector<Rational> v(c_.size() - 1, Rational(0));
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return Polynomial(std::move(v));
}

Rational Polynomial::eval(const Rational& point) const {
    Rational acc(0);
    for (size_t i = c_.size(); i-- > 0;) acc = acc * point + c_[i];
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero() || leading().is_one()) return *this;
    return *this * (Rational(1) / leading());
}

Polynomial Polynomial::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<Rational> v(static_cast<size_t>(k), Rational(0));
    v.insert(v.end(), c_.begin(), c_.end());
    Polynomial p;
    p.c_ = std::move(v);
    return p;
}

Polynomial Polynomial::deflate(int n) const {
    std::vector<Rational> v;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        if (i % static_cast<size_t>(n) != 0)
            throw Error(ErrorCode::NotPowerCompatible,
                        "exponent " + std::to_string(i) + " is not a multiple of " + std::to_string(n));
        size_t j = i / static_cast<size_t>(n);
        if (v.size() <= j) v.resize(j + 1, Rational(0));
        v[j] = c_[i];
    }
    return Polynomial(std::move(v));
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        Rational c = coeff(i);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sign() < 0) os << "-";
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        Rational a = abs(c);
        if (i == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Integer-polynomial helpers for the primitive PRS gcd.

using ZPoly = std::vector<Integer>;

ZPoly to_integer_poly(const Polynomial& p) {
    Integer l(1);
    for (const auto& c : p.coeffs()) {
        Integer g;
        mpz_lcm(g.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
        l = g;
    }
    ZPoly v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.push_back(c.num() * (l / c.den()));
    return v;
}

void strip(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer content(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        Integer t;
        mpz_gcd(t.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        g = t;
        if (g == 1) break;
    }
    return g;
}

void make_primitive(ZPoly& p) {
    Integer g = content(p);
    if (g == 0 || g == 1) return;
    for (auto& c : p) c /= g;
}

// Pseudo-remainder: lead(b)^(deg a - deg b + 1) * a mod b, all over Z.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const Integer& lb = b.back();
    int k = static_cast<int>(a.size()) - static_cast<int>(b.size()) + 1;
    while (static_cast<int>(a.size()) >= static_cast<int>(b.size()) && !a.empty()) {
        Integer la = a.back();
        size_t shift = a.size() - b.size();
        for (auto& c : a) c *= lb;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= la * b[i];
        strip(a);
        --k;
    }
    // Keep the classical pseudo-remainder scaling so contents stay integral.
    if (k > 0) {
        Integer f;
        mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(k));
        for (auto& c : a) c *= f;
    }
    return a;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = to_integer_poly(a);
    ZPoly y = to_integer_poly(b);
    make_primitive(x);
    make_primitive(y);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        ZPoly r = pseudo_rem(x, y);
        make_primitive(r);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<Rational> coeffs;
    coeffs.reserve(x.size());
    for (const auto& c : x) coeffs.emplace_back(c);
    return Polynomial(std::move(coeffs)).monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    return (a * b).exact_div(gcd(a, b)).monic();
}

}  // namespace dworkhg
