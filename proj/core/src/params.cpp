#include "dworkhg/params.hpp"

#include <algorithm>

namespace dworkhg {

std::vector<Rational> eigenvalues(const RFMatrix& constant_matrix) {
    return rational_roots(char_poly(constant_matrix));
}

HGParams extract_params(const Monomial& w) {
    int n = w.n();
    ConnectionBlock block = connection_block(w);
    SystemMatrix a = system_matrix(block);
    RFMatrix s = cyclic_change_of_basis(a);
    RFMatrix comp = companion_system(a, s);
    RegularizedSystem in_z = change_variable(regularize(comp, n), n);

    HGParams p;
    for (const auto& e : eigenvalues(residue_infinity(in_z)))
        p.alphas.push_back(e.frac());
    std::sort(p.alphas.begin(), p.alphas.end());

    size_t zeros = 0;
    for (const auto& e : eigenvalues(residue_zero(in_z))) {
        if (e.is_zero()) {
            ++zeros;
            if (zeros == 1) continue;  // the forced denominator parameter 1
        }
        Rational beta = Rational(1) - e;
        // Reduce into (0, 1].
        beta = beta.frac();
        if (beta.is_zero()) beta = Rational(1);
        p.betas.push_back(beta);
    }
    if (zeros == 0)
        throw Error(ErrorCode::MissingUnitBeta,
                    "no zero eigenvalue at z = 0 for " + w.str());
    if (zeros > 1)
        throw Error(ErrorCode::AmbiguousUnitBeta,
                    "zero eigenvalue at z = 0 has multiplicity " + std::to_string(zeros) +
                        " for " + w.str());
    std::sort(p.betas.begin(), p.betas.end());
    return p;
}

HGParams katz_oracle(const Monomial& w) {
    if (!is_basis_monomial(w))
        throw Error(ErrorCode::NotBasisMonomial, "katz_oracle of non-basis monomial " + w.str());
    int n = w.n();
    std::vector<int> count(static_cast<size_t>(n), 0);
    for (int e : w.exponents()) count[static_cast<size_t>(e)] += 1;

    HGParams p;
    for (int v = 0; v < n; ++v) {
        int c = count[static_cast<size_t>(v)];
        // One copy of v cancels against the list {0,...,n-1}.
        for (int rep = 1; rep < c; ++rep) p.alphas.emplace_back(v, n);
        if (c == 0 && v != 0) p.betas.emplace_back(v, n);
    }
    std::sort(p.alphas.begin(), p.alphas.end());
    std::sort(p.betas.begin(), p.betas.end());
    return p;
}

}  // namespace dworkhg
