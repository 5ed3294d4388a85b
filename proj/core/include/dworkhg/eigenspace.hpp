#pragma once

/// Eigenspace decomposition of the Dwork module under the symmetry group
/// action: the orbit of a basis monomial under constant shifts mod n, and the
/// dimension of the whole module.

#include <optional>

#include "dworkhg/monomial.hpp"

namespace dworkhg {

struct EigenspaceBasis {
    int n = 0;
    std::vector<Monomial> members;  // ordered by ascending shift, start first

    size_t size() const { return members.size(); }

    std::optional<size_t> index_of(const Monomial& m) const {
        for (size_t i = 0; i < members.size(); ++i)
            if (members[i] == m) return i;
        return std::nullopt;
    }
};

// Members are w + m*(1,...,1) mod n for m = 0..n-1, skipping any shift that
// drives some exponent to 0 mod n. The input is always first.
EigenspaceBasis orbit(const Monomial& w);

// dim W = (n-1)^(n-1) - (n-1)^(n-2) + ... +/- (n-1), signs alternating from
// the top term down.
Integer dimension(int n);

}  // namespace dworkhg
