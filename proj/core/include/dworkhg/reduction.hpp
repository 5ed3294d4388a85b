#pragma once

/// Rewriting monomials of the Dwork module into the basis of monomials with
/// all exponents in [1, n-1], via the relation
///
///   x^w = ((n - w_i)/n) * x^(w - n*e_i) + lambda * x^(w - n*e_i + 1),
///
/// applied at a pivot index i with w_i >= n, and the connection operator
/// nabla(x^w) = -n * x^(w + 1) expressed in the same basis.

#include "dworkhg/monomial.hpp"

namespace dworkhg {

enum class PivotRule {
    FirstIndex,    // first index with exponent >= n
    LargestEntry,  // first index attaining the maximal exponent
};

// Expresses c * x^w in the basis. Exponents must be non-negative; a zero
// exponent is only ever seen with coefficient zero, anything else signals an
// internal error (ReductionOverflow).
Combination reduce(const RationalFunction& c, const Monomial& w,
                   PivotRule rule = PivotRule::FirstIndex);

// Gauss-Manin derivative of a basis monomial: reduce(-n, w + 1).
Combination nabla(const Monomial& w);

}  // namespace dworkhg
