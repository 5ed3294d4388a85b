#pragma once

/// Integer partition enumeration and the basis-representative generator used
/// for table runs: partitions of n*k into exactly n parts from [1, n-1] that
/// contain a part equal to 1, read as monomials.

#include "dworkhg/monomial.hpp"

namespace dworkhg {

// All partitions of m as weakly decreasing sequences of positive integers.
std::vector<std::vector<int>> partitions(int m);

// Partitions of m into exactly c parts, each part <= c-1.
std::vector<std::vector<int>> restricted_partitions(int m, int c);

// For k = 1..ceil((n-1)/2), every restricted partition of n*k into n parts
// that contains a 1, in descending exponent order. Deliberately
// over-generates relative to strict orbit representatives.
std::vector<Monomial> basis_representatives(int n);

}  // namespace dworkhg
