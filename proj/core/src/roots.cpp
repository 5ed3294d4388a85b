#include "dworkhg/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace dworkhg {

namespace {

std::vector<Integer> positive_divisors(Integer v) {
    if (v < 0) v = -v;
    std::vector<Integer> divs;
    Integer i(1);
    for (; i * i <= v; ++i) {
        if (v % i == 0) {
            divs.push_back(i);
            Integer j = v / i;
            if (j != i) divs.push_back(j);
        }
    }
    return divs;
}

}  // namespace

std::vector<Rational> rational_roots(const Polynomial& p) {
    if (p.is_zero())
        throw std::invalid_argument("rational_roots of the zero polynomial");

    std::vector<Rational> roots;
    Polynomial f = p;

    // Clear denominators so the candidate set comes from integer divisors.
    Integer scale(1);
    for (const auto& c : f.coeffs()) {
        Integer l;
        mpz_lcm(l.get_mpz_t(), scale.get_mpz_t(), c.den().get_mpz_t());
        scale = l;
    }
    f = f * Rational(scale);

    // Zero roots, to full multiplicity.
    while (!f.is_zero() && f.coeff(0).is_zero() && f.degree() > 0) {
        roots.emplace_back(0);
        std::vector<Rational> shifted(f.coeffs().begin() + 1, f.coeffs().end());
        f = Polynomial(std::move(shifted));
    }

    if (f.degree() > 0) {
        std::vector<Integer> ps = positive_divisors(f.coeff(0).num());
        std::vector<Integer> qs = positive_divisors(f.leading().num());
        std::vector<Rational> candidates;
        for (const auto& a : ps)
            for (const auto& b : qs) {
                Rational r(a, b);
                candidates.push_back(r);
                candidates.push_back(-r);
            }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        for (const auto& r : candidates) {
            while (f.degree() > 0 && f.eval(r).is_zero()) {
                roots.push_back(r);
                f = f.exact_div(Polynomial({-r, Rational(1)}));
            }
            if (f.degree() == 0) break;
        }
    }

    if (f.degree() > 0)
        throw Error(ErrorCode::NonRationalSpectrum,
                    "a degree-" + std::to_string(f.degree()) +
                        " factor has no rational roots");

    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace dworkhg
