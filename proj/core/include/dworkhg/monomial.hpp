#pragma once

/// Monomials of the Dwork module and linear combinations of them.
///
/// A monomial is an n-tuple of non-negative exponents with exponent sum
/// divisible by n; it is a *basis* monomial when every exponent lies in
/// [1, n-1]. Combinations carry RationalFunction coefficients and are kept
/// merged, zero-free and sorted.

#include <map>
#include <string>
#include <vector>

#include "dworkhg/rational_function.hpp"

namespace dworkhg {

class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);

    // Comma-separated exponents, e.g. "1,1,1,2,2,5"; n is the tuple length.
    static Monomial parse(const std::string& csv);

    int n() const { return static_cast<int>(w_.size()); }
    const std::vector<int>& exponents() const { return w_; }
    int sum() const;

    bool operator==(const Monomial& o) const { return w_ == o.w_; }
    bool operator!=(const Monomial& o) const { return w_ != o.w_; }
    bool operator<(const Monomial& o) const { return w_ < o.w_; }

    std::string str() const;

private:
    std::vector<int> w_;
};

bool is_basis_monomial(const Monomial& w);

struct Term {
    RationalFunction coeff;  // never zero
    Monomial mono;
};

class Combination {
public:
    Combination() = default;
    explicit Combination(const std::map<std::vector<int>, RationalFunction>& by_mono);

    const std::vector<Term>& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    RationalFunction coefficient_of(const Monomial& m) const;

    bool operator==(const Combination& o) const;

    std::string str(const std::string& var) const;

private:
    std::vector<Term> terms_;  // sorted by exponent tuple, unique, nonzero
};

// Termwise scaling, used by the linearity property tests.
Combination operator*(const RationalFunction& c, const Combination& comb);

}  // namespace dworkhg
