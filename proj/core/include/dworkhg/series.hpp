#pragma once

/// Exact truncated power series support for checking that the hypergeometric
/// series with the extracted parameters is annihilated by the scalar ODE read
/// off the companion system.

#include "dworkhg/params.hpp"

namespace dworkhg {

struct PowerSeries {
    std::vector<Rational> coefficients;  // index = power of the variable
    int truncation_order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// Rising factorial x (x+1) ... (x+k-1); empty product is 1.
Rational pochhammer(const Rational& x, int k);

// Coefficients of the generalized hypergeometric series through order N:
// c_0 = 1, c_{k+1} = c_k * prod(alpha_i + k) / (prod(beta_j + k) * (k+1)).
PowerSeries hg_series(const HGParams& p, int N);

// Builds the order-k scalar ODE from the companion system of w, plugs in the
// series for extract_params(w) composed with lambda^n, clears denominators
// and tests that the residual vanishes through order N minus the cleared
// denominator degree minus k.
bool verify_annihilation(const Monomial& w, int N);

// Same check against explicitly supplied parameters (used to show that
// perturbed parameters fail).
bool verify_annihilation(const Monomial& w, const HGParams& candidate, int N);

}  // namespace dworkhg
