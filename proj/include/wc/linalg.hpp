#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include <gmpxx.h>

namespace wc {

template <class T>
using Vec = std::vector<T>;

inline bool scalar_is_zero(const mpz_class& x) { return x == 0; }
inline bool scalar_is_zero(const mpq_class& x) { return x == 0; }

/// Small dense row-major matrix. Sizes here are tiny (at most ~12),
/// so everything is written for clarity, not speed.
template <class T>
class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, T fill = T{})
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, fill) {}

    static Mat identity(int n) {
        Mat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    T& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const T& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Vec<T> col(int j) const {
        Vec<T> v;
        v.reserve(rows_);
        for (int i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
        return v;
    }

    Mat transpose() const {
        Mat t(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend Mat operator*(const Mat& a, const Mat& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("Mat: dimension mismatch");
        Mat c(a.rows_, b.cols_);
        for (int i = 0; i < a.rows_; ++i)
            for (int k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }

    friend Vec<T> operator*(const Mat& a, const Vec<T>& x) {
        if (a.cols_ != static_cast<int>(x.size()))
            throw std::invalid_argument("Mat*Vec: dimension mismatch");
        Vec<T> y(a.rows_, T{});
        for (int i = 0; i < a.rows_; ++i)
            for (int j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }

private:
    int rows_, cols_;
    std::vector<T> a_;
};

/// Gaussian elimination over a field type T (needs /, ==, scalar_is_zero).
/// Returns the rank; `m` is reduced in place to row echelon form.
template <class T>
int row_echelon(Mat<T>& m) {
    int rank = 0;
    for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
        int pivot = -1;
        for (int i = rank; i < m.rows(); ++i)
            if (!scalar_is_zero(m(i, col))) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != rank)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
        T inv = T(1) / m(rank, col);
        for (int j = col; j < m.cols(); ++j) m(rank, j) = m(rank, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == rank || scalar_is_zero(m(i, col))) continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(rank, j);
        }
        ++rank;
    }
    return rank;
}

template <class T>
T determinant(Mat<T> m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant: not square");
    const int n = m.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int i = col; i < n; ++i)
            if (!scalar_is_zero(m(i, col))) { pivot = i; break; }
        if (pivot < 0) return T(0);
        if (pivot != col) {
            for (int j = 0; j < n; ++j) std::swap(m(pivot, j), m(col, j));
            det = T(0) - det;
        }
        det = det * m(col, col);
        T inv = T(1) / m(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (scalar_is_zero(m(i, col))) continue;
            T f = m(i, col) * inv;
            for (int j = col; j < n; ++j) m(i, j) = m(i, j) - f * m(col, j);
        }
    }
    return det;
}

/// Solves a*x = b over a field; throws if a is singular.
template <class T>
Vec<T> solve(const Mat<T>& a, const Vec<T>& b) {
    const int n = a.rows();
    if (a.cols() != n || static_cast<int>(b.size()) != n)
        throw std::invalid_argument("solve: dimension mismatch");
    Mat<T> aug(n, n + 1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n) = b[i];
    }
    if (row_echelon(aug) != n) throw std::domain_error("solve: singular matrix");
    Vec<T> x(n, T{});
    for (int i = 0; i < n; ++i) x[i] = aug(i, n);
    return x;
}

template <class T>
Mat<T> inverse(const Mat<T>& a) {
    const int n = a.rows();
    if (a.cols() != n) throw std::invalid_argument("inverse: not square");
    Mat<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
        aug(i, n + i) = T(1);
    }
    if (row_echelon(aug) != n) throw std::domain_error("inverse: singular matrix");
    Mat<T> inv(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

/// Basis of the right kernel of `m` (columns with free variables).
template <class T>
std::vector<Vec<T>> kernel_basis(Mat<T> m) {
    const int nc = m.cols();
    row_echelon(m);
    // locate pivot column of each row
    std::vector<int> pivot_of_col(nc, -1);
    int row = 0;
    for (int col = 0; col < nc && row < m.rows(); ++col) {
        if (!scalar_is_zero(m(row, col))) pivot_of_col[col] = row++;
    }
    std::vector<Vec<T>> basis;
    for (int col = 0; col < nc; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        Vec<T> v(nc, T{});
        v[col] = T(1);
        for (int c = 0; c < nc; ++c)
            if (pivot_of_col[c] >= 0) v[c] = T(0) - m(pivot_of_col[c], col);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace wc
