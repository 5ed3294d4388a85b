#pragma once

// Shared helpers for the test suites: small constructors, independent
// oracles (cofactor determinants, adjugate inverses, partition counts,
// shift enumeration), deterministic random generators, and golden-file
// loading. Everything here must stay independent of the implementation
// paths it is used to check.

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dworkhg/eigenspace.hpp"
#include "dworkhg/matrix.hpp"
#include "dworkhg/monomial.hpp"

namespace testsupport {

using namespace dworkhg;

inline Rational rat(const std::string& s) { return Rational::parse(s); }

inline Polynomial poly(const std::vector<std::string>& coeffs_low_first) {
    std::vector<Rational> c;
    c.reserve(coeffs_low_first.size());
    for (const auto& s : coeffs_low_first) c.push_back(rat(s));
    return Polynomial(std::move(c));
}

inline RationalFunction rf(const std::vector<std::string>& num,
                           const std::vector<std::string>& den = {"1"}) {
    return RationalFunction(poly(num), poly(den));
}

// ---- independent oracles ----

// Determinant of a matrix of polynomials by cofactor expansion along the
// first row; used as the oracle for char_poly.
inline Polynomial det_poly_oracle(const std::vector<std::vector<Polynomial>>& m) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    Polynomial acc;
    for (size_t j = 0; j < k; ++j) {
        if (m[0][j].is_zero()) continue;
        std::vector<std::vector<Polynomial>> minor;
        for (size_t i = 1; i < k; ++i) {
            std::vector<Polynomial> row;
            for (size_t l = 0; l < k; ++l)
                if (l != j) row.push_back(m[i][l]);
            minor.push_back(std::move(row));
        }
        Polynomial term = m[0][j] * det_poly_oracle(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

inline Polynomial char_poly_oracle(const RFMatrix& a) {
    int k = a.rows();
    std::vector<std::vector<Polynomial>> xi(static_cast<size_t>(k),
                                            std::vector<Polynomial>(static_cast<size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            Polynomial entry(-a.at(i, j).constant_value());
            if (i == j) entry = entry + Polynomial::x();
            xi[static_cast<size_t>(i)][static_cast<size_t>(j)] = entry;
        }
    return det_poly_oracle(xi);
}

// Determinant over the rational function field, cofactor expansion.
inline RationalFunction det_rf_oracle(const RFMatrix& m) {
    int k = m.rows();
    if (k == 1) return m.at(0, 0);
    RationalFunction acc;
    for (int j = 0; j < k; ++j) {
        if (m.at(0, j).is_zero()) continue;
        RFMatrix minor(k - 1, k - 1);
        for (int i = 1; i < k; ++i) {
            int cc = 0;
            for (int l = 0; l < k; ++l) {
                if (l == j) continue;
                minor.at(i - 1, cc++) = m.at(i, l);
            }
        }
        RationalFunction term = m.at(0, j) * det_rf_oracle(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

// Adjugate-based inverse; independent of Gauss-Jordan elimination.
inline RFMatrix inverse_adjugate_oracle(const RFMatrix& m) {
    int k = m.rows();
    RationalFunction det = det_rf_oracle(m);
    RFMatrix inv(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            RFMatrix minor(k - 1, k - 1);
            int rr = 0;
            for (int r = 0; r < k; ++r) {
                if (r == i) continue;
                int cc = 0;
                for (int c = 0; c < k; ++c) {
                    if (c == j) continue;
                    minor.at(rr, cc++) = m.at(r, c);
                }
                ++rr;
            }
            RationalFunction cof = (k == 1) ? RationalFunction(Rational(1)) : det_rf_oracle(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            inv.at(j, i) = cof / det;
        }
    return inv;
}

// Partition count p(m) by the classical two-dimensional recurrence.
inline long partition_count_oracle(int m) {
    std::vector<std::vector<long>> t(static_cast<size_t>(m) + 1,
                                     std::vector<long>(static_cast<size_t>(m) + 1, 0));
    for (size_t k = 0; k <= static_cast<size_t>(m); ++k) t[0][k] = 1;
    for (size_t s = 1; s <= static_cast<size_t>(m); ++s)
        for (size_t k = 1; k <= static_cast<size_t>(m); ++k) {
            t[s][k] = t[s][k - 1];
            if (s >= k) t[s][k] += t[s - k][k];
        }
    return t[static_cast<size_t>(m)][static_cast<size_t>(m)];
}

// Direct shift enumeration for the eigenspace basis.
inline std::vector<std::vector<int>> orbit_oracle(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::vector<std::vector<int>> members;
    for (int m = 0; m < n; ++m) {
        std::vector<int> shifted;
        bool ok = true;
        for (int e : w) {
            int v = (e + m) % n;
            if (v == 0) { ok = false; break; }
            shifted.push_back(v);
        }
        if (ok) members.push_back(std::move(shifted));
    }
    return members;
}

// Rank of a constant matrix by Gaussian elimination over Q.
inline int rank_oracle(const RFMatrix& m) {
    std::vector<std::vector<Rational>> a(static_cast<size_t>(m.rows()),
                                         std::vector<Rational>(static_cast<size_t>(m.cols())));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            m.at(i, j).constant_value();
    int rank = 0;
    size_t row = 0;
    for (size_t col = 0; col < static_cast<size_t>(m.cols()) && row < a.size(); ++col) {
        size_t pivot = row;
        while (pivot < a.size() && a[pivot][col].is_zero()) ++pivot;
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[row]);
        for (size_t i = row + 1; i < a.size(); ++i) {
            if (a[i][col].is_zero()) continue;
            Rational f = a[i][col] / a[row][col];
            for (size_t j = col; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
        }
        ++row;
        ++rank;
    }
    return rank;
}

// Every distinct eigenspace orbit of basis monomials of degree n, found by
// odometer enumeration plus a visited set.
inline std::vector<Monomial> orbit_representatives_all(int n) {
    std::vector<Monomial> reps;
    std::set<std::vector<int>> seen;
    std::vector<int> w(static_cast<size_t>(n), 1);
    for (;;) {
        int s = 0;
        for (int e : w) s += e;
        if (s % n == 0 && !seen.count(w)) {
            Monomial m(w);
            for (const auto& member : orbit(m).members) seen.insert(member.exponents());
            reps.push_back(std::move(m));
        }
        int i = 0;
        while (i < n && w[static_cast<size_t>(i)] == n - 1) w[static_cast<size_t>(i++)] = 1;
        if (i == n) break;
        w[static_cast<size_t>(i)] += 1;
    }
    return reps;
}

// ---- deterministic generators ----

inline Rational random_rational(std::mt19937& rng, int bound = 9) {
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, bound);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937& rng, int bound = 9) {
    for (;;) {
        Rational r = random_rational(rng, bound);
        if (!r.is_zero()) return r;
    }
}

inline Polynomial random_poly(std::mt19937& rng, int max_deg = 3, int bound = 5) {
    std::uniform_int_distribution<int> deg(0, max_deg);
    int d = deg(rng);
    std::vector<Rational> c;
    for (int i = 0; i <= d; ++i) c.push_back(random_rational(rng, bound));
    return Polynomial(std::move(c));
}

inline RationalFunction random_rf(std::mt19937& rng, int max_deg = 2) {
    Polynomial den;
    while (den.is_zero()) den = random_poly(rng, max_deg);
    return RationalFunction(random_poly(rng, max_deg), den);
}

// Unit lower times unit upper times nonzero diagonal: invertible by
// construction, with small entries.
inline RFMatrix random_invertible_matrix(std::mt19937& rng, int k) {
    RFMatrix lower = RFMatrix::identity(k);
    RFMatrix upper = RFMatrix::identity(k);
    RFMatrix diag(k, k);
    for (int i = 0; i < k; ++i) {
        diag.at(i, i) = RationalFunction(random_nonzero_rational(rng, 4));
        for (int j = 0; j < i; ++j) lower.at(i, j) = RationalFunction(random_poly(rng, 1, 3));
        for (int j = i + 1; j < k; ++j) upper.at(i, j) = RationalFunction(random_poly(rng, 1, 3));
    }
    return lower * diag * upper;
}

inline Monomial random_basis_monomial(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> exp(1, n - 1);
    for (;;) {
        std::vector<int> w;
        int s = 0;
        for (int i = 0; i < n - 1; ++i) {
            w.push_back(exp(rng));
            s += w.back();
        }
        int last = (n - (s % n)) % n;
        if (last == 0) continue;  // needs an exponent of n or 0, both excluded
        w.push_back(last);
        return Monomial(std::move(w));
    }
}

// Random tuple with exponents in [1, 3n] and sum divisible by n.
inline Monomial random_reduce_input(std::mt19937& rng, int n) {
    std::uniform_int_distribution<int> exp(1, 3 * n);
    for (;;) {
        std::vector<int> w;
        int s = 0;
        for (int i = 0; i < n; ++i) {
            w.push_back(exp(rng));
            s += w.back();
        }
        int deficit = (n - (s % n)) % n;
        w.back() += deficit;
        if (w.back() > 3 * n) continue;
        return Monomial(std::move(w));
    }
}

// ---- golden data ----

inline nlohmann::json load_json(const std::string& filename) {
    std::string path = std::string(DWORKHG_TEST_DATA_DIR) + "/" + filename;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open golden file " + path);
    nlohmann::json j;
    in >> j;
    return j;
}

// Matrix entries stored as {"num": [coeffs...], "den": [coeffs...]}, lowest
// degree first, rationals as "p/q" strings; canonicalization happens on load.
inline RFMatrix matrix_from_json(const nlohmann::json& j) {
    const auto& rows = j.at("entries");
    int r = static_cast<int>(rows.size());
    int c = static_cast<int>(rows.at(0).size());
    RFMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int k = 0; k < c; ++k) {
            const auto& cell = rows.at(static_cast<size_t>(i)).at(static_cast<size_t>(k));
            std::vector<std::string> num, den;
            for (const auto& s : cell.at("num")) num.push_back(s.get<std::string>());
            for (const auto& s : cell.at("den")) den.push_back(s.get<std::string>());
            m.at(i, k) = rf(num, den);
        }
    return m;
}

inline std::vector<Rational> rationals_from_json(const nlohmann::json& j) {
    std::vector<Rational> v;
    for (const auto& s : j) v.push_back(rat(s.get<std::string>()));
    return v;
}

}  // namespace testsupport
