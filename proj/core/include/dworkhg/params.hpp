#pragma once

/// Hypergeometric parameters of the differential equation attached to an
/// eigenspace: numerator parameters alpha from the residue spectrum at
/// infinity, denominator parameters beta from the spectrum at zero, plus the
/// multiset-cancellation oracle that predicts both directly from the
/// exponent tuple.

#include "dworkhg/fuchsian.hpp"
#include "dworkhg/roots.hpp"

namespace dworkhg {

struct HGParams {
    std::vector<Rational> alphas;  // sorted ascending, values in [0,1)
    std::vector<Rational> betas;   // sorted ascending, values in (0,1]

    bool operator==(const HGParams& o) const {
        return alphas == o.alphas && betas == o.betas;
    }
};

// Eigenvalue multiset of a constant matrix, sorted ascending.
// NonRationalSpectrum when the characteristic polynomial has a
// positive-degree factor without rational roots.
std::vector<Rational> eigenvalues(const RFMatrix& constant_matrix);

// Runs the full pipeline for the eigenspace of w. alphas are the eigenvalues
// of the residue at infinity reduced mod 1; betas are 1 - e over eigenvalues
// e of the residue at zero, with the single forced value 1 (from e = 0)
// removed. MissingUnitBeta / AmbiguousUnitBeta guard that removal.
HGParams extract_params(const Monomial& w);

// Cancel the entries of w against {0,...,n-1} as multisets; surviving w
// entries give the alphas (w_j / n), surviving nonzero list entries give the
// betas (k / n). The surviving 0 is the dropped denominator parameter 1.
HGParams katz_oracle(const Monomial& w);

}  // namespace dworkhg
