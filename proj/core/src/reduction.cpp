#include "dworkhg/reduction.hpp"

#include <algorithm>
#include <map>

namespace dworkhg {

namespace {

int pick_pivot(const std::vector<int>& w, int n, PivotRule rule) {
    if (rule == PivotRule::FirstIndex) {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] >= n) return static_cast<int>(i);
        return -1;
    }
    int best = 0;
    for (size_t i = 1; i < w.size(); ++i)
        if (w[i] > w[static_cast<size_t>(best)]) best = static_cast<int>(i);
    return w[static_cast<size_t>(best)] >= n ? best : -1;
}

bool all_below(const std::vector<int>& w, int n) {
    return std::all_of(w.begin(), w.end(), [n](int e) { return e < n; });
}

bool has_zero(const std::vector<int>& w) {
    return std::any_of(w.begin(), w.end(), [](int e) { return e == 0; });
}

using BasisCoords = std::map<std::vector<int>, RationalFunction>;

struct Reducer {
    int n;
    PivotRule rule;
    RationalFunction lambda = RationalFunction(Polynomial::x());
    std::map<std::vector<int>, BasisCoords> memo;
    long steps = 0;
    long per_monomial_cap = 0;

    // Generous bound: (max exponent + n) * n steps per live monomial.
    void bump() {
        if (++steps > per_monomial_cap * (static_cast<long>(memo.size()) + 2))
            throw Error(ErrorCode::ReductionOverflow,
                        "iteration cap exceeded; this is a bug, not a legal input");
    }

    struct Step {
        Rational v_factor;        // (n - w_i)/n at the pivot
        std::vector<int> v_mono;  // w - n*e_i
        std::vector<int> u_mono;  // w - n*e_i + 1
    };

    Step rewrite_step(const std::vector<int>& w) {
        int i = pick_pivot(w, n, rule);
        Step s;
        s.v_factor = Rational(n - w[static_cast<size_t>(i)], n);
        s.v_mono = w;
        s.v_mono[static_cast<size_t>(i)] -= n;
        s.u_mono = s.v_mono;
        for (auto& e : s.u_mono) e += 1;
        return s;
    }

    // Basis coordinates of x^mono. Follows the shifted branch u = w - n*e_i + 1
    // until it fully reduces or revisits a chain member; a revisit closes a
    // cycle of length L with accumulated factor lambda^L, so every coefficient
    // the cycle produced is divided by (1 - lambda^L). For a chain returning
    // to its own start this is the classical division by (1 - lambda^n). The
    // reduced branches v = w - n*e_i have strictly smaller exponent sum and
    // are expanded recursively.
    const BasisCoords& expand(const std::vector<int>& mono) {
        auto hit = memo.find(mono);
        if (hit != memo.end()) return hit->second;

        if (all_below(mono, n)) {
            BasisCoords unit;
            unit.emplace(mono, RationalFunction(Rational(1)));
            return memo.emplace(mono, std::move(unit)).first->second;
        }

        std::vector<Step> chain;
        std::map<std::vector<int>, size_t> position;
        std::vector<int> cur = mono;
        bool cycled = false;
        size_t cycle_start = 0;
        std::vector<int> terminal;

        for (;;) {
            bump();
            position.emplace(cur, chain.size());
            chain.push_back(rewrite_step(cur));
            const std::vector<int>& u = chain.back().u_mono;
            if (auto m = memo.find(u); m != memo.end() || all_below(u, n)) {
                terminal = u;
                break;
            }
            if (auto p = position.find(u); p != position.end()) {
                cycled = true;
                cycle_start = p->second;
                break;
            }
            cur = u;
        }

        RationalFunction cycle_scale(Rational(1));
        if (cycled) {
            auto len = static_cast<int>(chain.size() - cycle_start);
            RationalFunction lam_pow(Polynomial::monomial(len, Rational(1)));
            cycle_scale = RationalFunction(Rational(1)) / (RationalFunction(Rational(1)) - lam_pow);
        }

        BasisCoords result;
        auto add_scaled = [&](const BasisCoords& src, const RationalFunction& scale) {
            for (const auto& [b, c] : src) {
                if (has_zero(b))
                    throw Error(ErrorCode::ReductionOverflow,
                                "zero-exponent monomial with nonzero coefficient");
                result[b] += scale * c;
            }
        };

        RationalFunction lam_j(Rational(1));  // lambda^j along the chain
        for (size_t j = 0; j < chain.size(); ++j) {
            const Step& s = chain[j];
            if (!s.v_factor.is_zero()) {
                RationalFunction coeff = lam_j * RationalFunction(s.v_factor);
                if (cycled && j >= cycle_start) coeff *= cycle_scale;
                add_scaled(expand(s.v_mono), coeff);
            }
            // A zero factor marks the branch whose pivot exponent hit zero;
            // those terms are provably zero and drop.
            lam_j *= lambda;
        }
        if (!cycled) add_scaled(expand(terminal), lam_j);

        for (auto it = result.begin(); it != result.end();) {
            if (it->second.is_zero()) it = result.erase(it);
            else ++it;
        }
        return memo.emplace(mono, std::move(result)).first->second;
    }
};

}  // namespace

Combination reduce(const RationalFunction& c, const Monomial& w, PivotRule rule) {
    int n = w.n();
    const std::vector<int>& exps = w.exponents();

    if (c.is_zero()) return Combination();
    if (has_zero(exps))
        throw Error(ErrorCode::ReductionOverflow,
                    "zero-exponent monomial with nonzero coefficient");

    Reducer red;
    red.n = n;
    red.rule = rule;
    int max_exp = *std::max_element(exps.begin(), exps.end());
    red.per_monomial_cap = static_cast<long>(max_exp + n) * n;

    BasisCoords scaled;
    for (const auto& [mono, coeff] : red.expand(exps)) {
        RationalFunction v = c * coeff;
        if (!v.is_zero()) scaled.emplace(mono, std::move(v));
    }
    return Combination(scaled);
}

Combination nabla(const Monomial& w) {
    if (!is_basis_monomial(w))
        throw Error(ErrorCode::NotBasisMonomial, "nabla of non-basis monomial " + w.str());
    std::vector<int> up = w.exponents();
    for (auto& e : up) e += 1;
    return reduce(RationalFunction(Rational(-w.n())), Monomial(std::move(up)));
}

}  // namespace dworkhg
