#pragma once

/// Rational-root extraction for polynomials over Q, based on the rational
/// roots theorem plus repeated deflation so multiplicities come out right.

#include <vector>

#include "dworkhg/polynomial.hpp"

namespace dworkhg {

// All roots with multiplicity, sorted ascending; the result has exactly
// degree(p) entries. NonRationalSpectrum if a factor of positive degree
// remains after all rational roots are deflated. p must be nonzero.
std::vector<Rational> rational_roots(const Polynomial& p);

}  // namespace dworkhg
