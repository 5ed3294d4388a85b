#pragma once

/// Dense matrices with RationalFunction entries, plus the handful of exact
/// operations the connection pipeline needs (product, inverse, entrywise
/// derivative, characteristic polynomial of a constant matrix).

#include <vector>

#include "dworkhg/rational_function.hpp"

namespace dworkhg {

class RFMatrix {
public:
    RFMatrix() : rows_(0), cols_(0) {}
    RFMatrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static RFMatrix identity(int k);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    RationalFunction& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
    const RationalFunction& at(int i, int j) const {
        return e_[static_cast<size_t>(i) * cols_ + j];
    }

    RFMatrix operator*(const RFMatrix& o) const;
    RFMatrix operator+(const RFMatrix& o) const;
    bool operator==(const RFMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    RFMatrix transpose() const;
    RFMatrix derivative() const;

    // Exact inverse by Gauss-Jordan elimination over the function field.
    RFMatrix inverse() const;
    bool is_invertible() const;

    bool is_constant() const;

private:
    int rows_, cols_;
    std::vector<RationalFunction> e_;
};

// Monic characteristic polynomial det(xI - m) of a square matrix whose
// entries are constants; NonConstantEntries otherwise.
Polynomial char_poly(const RFMatrix& m);

}  // namespace dworkhg
