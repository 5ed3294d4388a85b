#pragma once

/// One diagonal block of the Gauss-Manin connection matrix: column j holds
/// the coordinates of nabla(basis[j]) in the orbit basis. The first-order
/// differential system dy/dlambda = A y uses the transpose.

#include "dworkhg/eigenspace.hpp"
#include "dworkhg/matrix.hpp"

namespace dworkhg {

struct ConnectionBlock {
    EigenspaceBasis basis;
    RFMatrix mat;  // entry (i,j) = coefficient of basis[i] in nabla(basis[j])
};

struct SystemMatrix {
    RFMatrix mat;  // dy/dlambda = mat * y
};

ConnectionBlock connection_block(const Monomial& w);
SystemMatrix system_matrix(const ConnectionBlock& block);

}  // namespace dworkhg
