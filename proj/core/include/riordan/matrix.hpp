#pragma once

#include <vector>

#include "riordan/rational.hpp"

namespace riordan {

// Dense matrix of rationals, row-major. Riordan-pair realizations are
// lower triangular; basis grids on the polynomial side are not, so the
// type makes no shape promise.
class Matrix {
public:
    Matrix(int rows, int cols)
        : rows_(rows), cols_(cols),
          e_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}

    static Matrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& at(int r, int c) { return e_[idx(r, c)]; }
    const Rational& at(int r, int c) const { return e_[idx(r, c)]; }

    Matrix transposed() const;
    // Conjugation by the sign involution M = diag(1,-1,1,...): entry (r,c)
    // picks up the factor (-1)^(r+c).
    Matrix sign_conjugate() const;
    // Leading block.
    Matrix block(int rows, int cols) const;
    // Inverse of a lower-triangular matrix with nonzero diagonal.
    Matrix lower_inverse() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Rational& s, const Matrix& a);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t idx(int r, int c) const {
        return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
               static_cast<std::size_t>(c);
    }

    int rows_, cols_;
    std::vector<Rational> e_;
};

}  // namespace riordan
