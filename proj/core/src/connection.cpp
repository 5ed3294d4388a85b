#include "dworkhg/connection.hpp"

#include "dworkhg/reduction.hpp"

namespace dworkhg {

ConnectionBlock connection_block(const Monomial& w) {
    ConnectionBlock block;
    block.basis = orbit(w);
    int k = static_cast<int>(block.basis.size());
    block.mat = RFMatrix(k, k);
    for (int j = 0; j < k; ++j) {
        Combination image = nabla(block.basis.members[static_cast<size_t>(j)]);
        for (const auto& term : image.terms()) {
            // Coefficients are placed by membership lookup; positional
            // shortcuts break on orbits with excluded shifts.
            auto idx = block.basis.index_of(term.mono);
            if (!idx)
                throw Error(ErrorCode::ReductionOverflow,
                            "nabla left the eigenspace at " + term.mono.str());
            block.mat.at(static_cast<int>(*idx), j) = term.coeff;
        }
    }
    return block;
}

SystemMatrix system_matrix(const ConnectionBlock& block) {
    return SystemMatrix{block.mat.transpose()};
}

}  // namespace dworkhg
