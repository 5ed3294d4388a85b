#include "dworkhg/eigenspace.hpp"

#include "dworkhg/errors.hpp"

namespace dworkhg {

EigenspaceBasis orbit(const Monomial& w) {
    if (!is_basis_monomial(w))
        throw Error(ErrorCode::NotBasisMonomial, "orbit of non-basis monomial " + w.str());
    int n = w.n();
    EigenspaceBasis basis;
    basis.n = n;
    for (int m = 0; m < n; ++m) {
        bool excluded = false;
        std::vector<int> shifted(w.exponents());
        for (auto& e : shifted) {
            e = (e + m) % n;
            if (e == 0) { excluded = true; break; }
        }
        if (!excluded) basis.members.emplace_back(std::move(shifted));
    }
    return basis;
}

Integer dimension(int n) {
    if (n < 2) throw std::invalid_argument("dimension requires n >= 2");
    Integer base(n - 1);
    Integer acc(0);
    int sign = 1;
    Integer power;
    mpz_pow_ui(power.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(n - 1));
    for (int k = n - 1; k >= 1; --k) {
        acc += sign > 0 ? power : -power;
        power /= base;
        sign = -sign;
    }
    return acc;
}

}  // namespace dworkhg
