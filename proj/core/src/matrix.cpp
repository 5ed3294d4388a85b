#include "dworkhg/matrix.hpp"

#include <utility>

namespace dworkhg {

RFMatrix RFMatrix::identity(int k) {
    RFMatrix m(k, k);
    for (int i = 0; i < k; ++i) m.at(i, i) = RationalFunction(Rational(1));
    return m;
}

RFMatrix RFMatrix::operator*(const RFMatrix& o) const {
    if (cols_ != o.rows_)
        throw Error(ErrorCode::DimensionMismatch,
                    "product of " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                        std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    RFMatrix r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            const RationalFunction& a = at(i, k);
            if (a.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                if (o.at(k, j).is_zero()) continue;
                r.at(i, j) += a * o.at(k, j);
            }
        }
    return r;
}

RFMatrix RFMatrix::operator+(const RFMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw Error(ErrorCode::DimensionMismatch, "sum of differently shaped matrices");
    RFMatrix r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += o.e_[i];
    return r;
}

RFMatrix RFMatrix::transpose() const {
    RFMatrix r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

RFMatrix RFMatrix::derivative() const {
    RFMatrix r(rows_, cols_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r.at(i, j) = at(i, j).derivative();
    return r;
}

namespace {

// Gauss-Jordan elimination on [m | rhs]; returns false when m is singular.
bool eliminate(RFMatrix m, RFMatrix& rhs) {
    int k = m.rows();
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int i = col; i < k; ++i)
            if (!m.at(i, col).is_zero()) { pivot = i; break; }
        if (pivot < 0) return false;
        if (pivot != col)
            for (int j = 0; j < k; ++j) {
                std::swap(m.at(pivot, j), m.at(col, j));
                std::swap(rhs.at(pivot, j), rhs.at(col, j));
            }
        RationalFunction inv = RationalFunction(Rational(1)) / m.at(col, col);
        for (int j = 0; j < k; ++j) {
            m.at(col, j) *= inv;
            rhs.at(col, j) *= inv;
        }
        for (int i = 0; i < k; ++i) {
            if (i == col || m.at(i, col).is_zero()) continue;
            RationalFunction f = m.at(i, col);
            for (int j = 0; j < k; ++j) {
                m.at(i, j) -= f * m.at(col, j);
                rhs.at(i, j) -= f * rhs.at(col, j);
            }
        }
    }
    return true;
}

}  // namespace

RFMatrix RFMatrix::inverse() const {
    if (!is_square())
        throw Error(ErrorCode::DimensionMismatch, "inverse of a non-square matrix");
    RFMatrix rhs = identity(rows_);
    if (!eliminate(*this, rhs))
        throw Error(ErrorCode::SingularMatrix, "matrix is singular over the function field");
    return rhs;
}

bool RFMatrix::is_invertible() const {
    if (!is_square()) return false;
    RFMatrix rhs = identity(rows_);
    return eliminate(*this, rhs);
}

bool RFMatrix::is_constant() const {
    for (const auto& e : e_)
        if (!e.is_constant()) return false;
    return true;
}

Polynomial char_poly(const RFMatrix& m) {
    if (!m.is_square())
        throw Error(ErrorCode::DimensionMismatch, "characteristic polynomial of a non-square matrix");
    int k = m.rows();
    std::vector<std::vector<Rational>> a(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            if (!m.at(i, j).is_constant())
                throw Error(ErrorCode::NonConstantEntries,
                            "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") depends on the variable");
            a[i][j] = m.at(i, j).constant_value();
        }

    // Faddeev-LeVerrier: exact over the rationals, fine at these sizes.
    std::vector<Rational> c(static_cast<size_t>(k) + 1, Rational(0));
    c[static_cast<size_t>(k)] = Rational(1);  // coefficient of x^k
    std::vector<std::vector<Rational>> b(k, std::vector<Rational>(k, Rational(0)));
    for (int i = 0; i < k; ++i) b[i][i] = Rational(1);
    for (int step = 1; step <= k; ++step) {
        // b <- a * b
        std::vector<std::vector<Rational>> ab(k, std::vector<Rational>(k, Rational(0)));
        for (int i = 0; i < k; ++i)
            for (int l = 0; l < k; ++l) {
                if (a[i][l].is_zero()) continue;
                for (int j = 0; j < k; ++j) ab[i][j] += a[i][l] * b[l][j];
            }
        Rational trace(0);
        for (int i = 0; i < k; ++i) trace += ab[i][i];
        Rational coeff = -(trace / Rational(step));
        c[static_cast<size_t>(k - step)] = coeff;
        for (int i = 0; i < k; ++i) ab[i][i] += coeff;
        b = std::move(ab);
    }
    return Polynomial(std::move(c));
}

}  // namespace dworkhg
