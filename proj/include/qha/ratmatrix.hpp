#pragma once

#include <stdexcept>
#include <vector>

#include "qha/rational.hpp"

namespace qha {

/// Dense matrix over the exact rationals; just enough linear algebra for the
/// Weyl-element blocks and rank computations (first-nonzero pivoting, no
/// numerics anywhere).
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static RatMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int r, int c) { return a_.at(static_cast<size_t>(r) * cols_ + c); }
    const Rational& at(int r, int c) const { return a_.at(static_cast<size_t>(r) * cols_ + c); }

    friend RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);
    RatMatrix operator-() const;
    bool operator==(const RatMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    bool is_square() const { return rows_ == cols_; }
    int rank() const;
    bool invertible() const { return is_square() && rank() == rows_; }
    /// Gauss-Jordan inverse; throws std::invalid_argument when singular.
    RatMatrix inverse() const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

inline RatMatrix RatMatrix::identity(int n) {
    RatMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

inline RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
    if (x.cols_ != y.rows_)
        throw std::invalid_argument("RatMatrix: shape mismatch in product");
    RatMatrix z(x.rows_, y.cols_);
    for (int i = 0; i < x.rows_; ++i)
        for (int k = 0; k < x.cols_; ++k) {
            const Rational& f = x.at(i, k);
            if (is_zero(f))
                continue;
            for (int j = 0; j < y.cols_; ++j)
                z.at(i, j) += f * y.at(k, j);
        }
    return z;
}

inline RatMatrix RatMatrix::operator-() const {
    RatMatrix m(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t)
        m.a_[t] = -a_[t];
    return m;
}

inline int RatMatrix::rank() const {
    RatMatrix m = *this;
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            continue;
        for (int c = 0; c < cols_; ++c)
            std::swap(m.at(pivot, c), m.at(rank, c));
        Rational p = m.at(rank, col);
        for (int r = rank + 1; r < rows_; ++r) {
            if (is_zero(m.at(r, col)))
                continue;
            Rational f = m.at(r, col) / p;
            for (int c = col; c < cols_; ++c)
                m.at(r, c) -= f * m.at(rank, c);
        }
        ++rank;
    }
    return rank;
}

inline RatMatrix RatMatrix::inverse() const {
    if (!is_square())
        throw std::invalid_argument("RatMatrix::inverse: not square");
    RatMatrix m = *this;
    RatMatrix inv = identity(rows_);
    for (int col = 0; col < cols_; ++col) {
        int pivot = -1;
        for (int r = col; r < rows_; ++r)
            if (!is_zero(m.at(r, col))) {
                pivot = r;
                break;
            }
        if (pivot < 0)
            throw std::invalid_argument("RatMatrix::inverse: singular matrix");
        for (int c = 0; c < cols_; ++c) {
            std::swap(m.at(pivot, c), m.at(col, c));
            std::swap(inv.at(pivot, c), inv.at(col, c));
        }
        Rational p = m.at(col, col);
        for (int c = 0; c < cols_; ++c) {
            m.at(col, c) /= p;
            inv.at(col, c) /= p;
        }
        for (int r = 0; r < rows_; ++r) {
            if (r == col || is_zero(m.at(r, col)))
                continue;
            Rational f = m.at(r, col);
            for (int c = 0; c < cols_; ++c) {
                m.at(r, c) -= f * m.at(col, c);
                inv.at(r, c) -= f * inv.at(col, c);
            }
        }
    }
    return inv;
}

}  // namespace qha
