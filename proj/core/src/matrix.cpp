#include "riordan/matrix.hpp"

#include <stdexcept>

#include "riordan/errors.hpp"

namespace riordan {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

Matrix Matrix::transposed() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::sign_conjugate() const {
    Matrix m(rows_, cols_);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            m.at(r, c) = ((r + c) % 2 == 0) ? at(r, c) : -at(r, c);
    return m;
}

Matrix Matrix::block(int rows, int cols) const {
    if (rows > rows_ || cols > cols_) throw InsufficientOrder("Matrix::block: out of range");
    Matrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(r, c) = at(r, c);
    return m;
}

Matrix Matrix::lower_inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("lower_inverse: square matrix required");
    const int n = rows_;
    for (int i = 0; i < n; ++i)
        if (at(i, i).is_zero()) throw NotProper("lower_inverse: zero diagonal entry");
    // Forward substitution, column by column.
    Matrix inv(n, n);
    for (int c = 0; c < n; ++c) {
        inv.at(c, c) = Rational(1) / at(c, c);
        for (int r = c + 1; r < n; ++r) {
            Rational acc(0);
            for (int k = c; k < r; ++k) acc += at(r, k) * inv.at(k, c);
            inv.at(r, c) = -acc / at(r, r);
        }
    }
    return inv;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("Matrix multiply: shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int k = 0; k < a.cols_; ++k) {
            if (a.at(r, k).is_zero()) continue;
            for (int c = 0; c < b.cols_; ++c) {
                if (b.at(k, c).is_zero()) continue;
                m.at(r, c) += a.at(r, k) * b.at(k, c);
            }
        }
    return m;
}

Matrix operator*(const Rational& s, const Matrix& a) {
    Matrix m(a.rows_, a.cols_);
    for (int r = 0; r < a.rows_; ++r)
        for (int c = 0; c < a.cols_; ++c) m.at(r, c) = s * a.at(r, c);
    return m;
}

bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

}  // namespace riordan
