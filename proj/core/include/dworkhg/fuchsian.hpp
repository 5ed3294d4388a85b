#pragma once

/// From a first-order system to a Fuchsian normal form: cyclic-vector change
/// of basis, companion system, regular-singular normalization at the origin,
/// the z = lambda^n change of variable, and the residue matrices at the three
/// singular points 0, 1, infinity.

#include "dworkhg/connection.hpp"

namespace dworkhg {

enum class Var { Lambda, Z };

// dy/dvar = (1/var) * N(var) * y, with every entry of N finite at var = 0.
struct RegularizedSystem {
    RFMatrix N;
    Var var = Var::Lambda;
    int n = 0;  // family degree, needed for the variable change
};

// Change of basis for the cyclic vector e_1: row 1 is (1,0,...,0) and
// row m+1 = d(row m)/dlambda + row m * A. CyclicVectorFailure when singular.
RFMatrix cyclic_change_of_basis(const SystemMatrix& a);

// S A S^-1 + (dS/dlambda) S^-1; the result is in companion form.
RFMatrix companion_system(const SystemMatrix& a, const RFMatrix& s);

// Multiplies entry (i,j) by lambda^(i-j+1) and adds i-1 on the diagonal,
// turning dy/dlambda = A_S y into dy/dlambda = (1/lambda) N(lambda) y.
// StillSingular if an entry keeps a pole at 0.
RegularizedSystem regularize(const RFMatrix& companion, int n);

// Substitutes z = lambda^n and divides by n. NotPowerCompatible when some
// entry is not a rational function of lambda^n.
RegularizedSystem change_variable(const RegularizedSystem& r, int n);

RFMatrix residue_zero(const RegularizedSystem& r);      // N(0)
RFMatrix residue_infinity(const RegularizedSystem& r);  // -lim_{z->inf} N(z)
RFMatrix residue_one(const RegularizedSystem& r);       // lim_{z->1} (z-1)/z * N(z)

}  // namespace dworkhg
