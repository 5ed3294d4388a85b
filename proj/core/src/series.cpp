#include "dworkhg/series.hpp"

#include <stdexcept>

namespace dworkhg {

Rational pochhammer(const Rational& x, int k) {
    if (k < 0) throw std::invalid_argument("pochhammer requires k >= 0");
    Rational acc(1);
    for (int i = 0; i < k; ++i) acc *= x + Rational(i);
    return acc;
}

PowerSeries hg_series(const HGParams& p, int N) {
    if (N < 0) throw std::invalid_argument("hg_series requires N >= 0");
    PowerSeries s;
    s.coefficients.reserve(static_cast<size_t>(N) + 1);
    s.coefficients.emplace_back(1);
    for (int k = 0; k < N; ++k) {
        Rational num(1), den(k + 1);
        for (const auto& a : p.alphas) num *= a + Rational(k);
        for (const auto& b : p.betas) den *= b + Rational(k);
        if (den.is_zero())
            throw Error(ErrorCode::ZeroDenominatorInRecurrence,
                        "denominator parameter hits a non-positive integer at step " +
                            std::to_string(k));
        s.coefficients.push_back(s.coefficients.back() * num / den);
    }
    return s;
}

namespace {

// Coefficients below `valid_to` are exact; everything above is unknown.
struct TruncSeries {
    std::vector<Rational> c;
    int valid_to = 0;

    Rational coeff(int i) const {
        if (i < 0 || static_cast<size_t>(i) >= c.size()) return Rational(0);
        return c[static_cast<size_t>(i)];
    }
};

TruncSeries derivative(const TruncSeries& s) {
    TruncSeries d;
    d.valid_to = s.valid_to - 1;
    if (!s.c.empty()) {
        d.c.resize(s.c.size() - 1);
        for (size_t i = 1; i < s.c.size(); ++i)
            d.c[i - 1] = s.c[i] * Rational(static_cast<long>(i));
    }
    return d;
}

TruncSeries poly_times(const Polynomial& p, const TruncSeries& s) {
    TruncSeries r;
    r.valid_to = s.valid_to;  // truncation error only moves up
    if (p.is_zero() || s.c.empty()) return r;
    r.c.assign(s.c.size() + static_cast<size_t>(p.degree()), Rational(0));
    for (int i = 0; i <= p.degree(); ++i) {
        Rational pc = p.coeff(i);
        if (pc.is_zero()) continue;
        for (size_t j = 0; j < s.c.size(); ++j) r.c[static_cast<size_t>(i) + j] += pc * s.c[j];
    }
    return r;
}

}  // namespace

bool verify_annihilation(const Monomial& w, const HGParams& candidate, int N) {
    int n = w.n();
    ConnectionBlock block = connection_block(w);
    int k = static_cast<int>(block.basis.size());
    if (N < k * n + n)
        throw std::invalid_argument("order too small to expose order-" + std::to_string(k) +
                                    " failures; need at least " + std::to_string(k * n + n));

    SystemMatrix a = system_matrix(block);
    RFMatrix comp = companion_system(a, cyclic_change_of_basis(a));

    // Scalar ODE from the last companion row:
    //   y^(k) = sum_j comp(k, j) y^(j-1).
    // Clear denominators: D y^(k) - sum_j P_j y^(j-1) = 0.
    Polynomial common_den(Rational(1));
    for (int j = 0; j < k; ++j) common_den = lcm(common_den, comp.at(k - 1, j).den());
    std::vector<Polynomial> cleared(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
        const RationalFunction& c = comp.at(k - 1, j);
        cleared[static_cast<size_t>(j)] = c.num() * common_den.exact_div(c.den());
    }

    // y(lambda) = sum_m c_m lambda^(n m), exact through order n*(floor(N/n)+1)-1.
    PowerSeries hg = hg_series(candidate, N / n);
    TruncSeries y;
    y.valid_to = n * (N / n + 1) - 1;
    y.c.assign(static_cast<size_t>(n) * hg.coefficients.size(), Rational(0));
    for (size_t m = 0; m < hg.coefficients.size(); ++m)
        y.c[m * static_cast<size_t>(n)] = hg.coefficients[m];

    std::vector<TruncSeries> derivs;  // y, y', ..., y^(k)
    derivs.push_back(y);
    for (int j = 1; j <= k; ++j) derivs.push_back(derivative(derivs.back()));

    TruncSeries residual = poly_times(common_den, derivs[static_cast<size_t>(k)]);
    int valid = residual.valid_to;
    for (int j = 0; j < k; ++j) {
        TruncSeries t = poly_times(cleared[static_cast<size_t>(j)], derivs[static_cast<size_t>(j)]);
        valid = std::min(valid, t.valid_to);
        size_t need = std::max(residual.c.size(), t.c.size());
        residual.c.resize(need, Rational(0));
        for (size_t i = 0; i < t.c.size(); ++i) residual.c[i] -= t.c[i];
    }

    int check_to = std::min(valid, N - common_den.degree() - k);
    for (int i = 0; i <= check_to; ++i)
        if (!residual.coeff(i).is_zero()) return false;
    return true;
}

bool verify_annihilation(const Monomial& w, int N) {
    return verify_annihilation(w, extract_params(w), N);
}

}  // namespace dworkhg
