#pragma once

// Small dense matrices over the exact scalar types.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "hcox/golden.hpp"

namespace hcox {

template <typename T>
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<T>> init) {
        rows_ = init.size();
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw std::invalid_argument("hcox: ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<T> row(std::size_t i) const {
        return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols_ != y.rows_) throw std::invalid_argument("hcox: matrix shape mismatch");
        Matrix r(x.rows_, y.cols_);
        for (std::size_t i = 0; i < x.rows_; ++i)
            for (std::size_t k = 0; k < x.cols_; ++k) {
                const T& xik = x(i, k);
                if (xik == T{}) continue;
                for (std::size_t j = 0; j < y.cols_; ++j) r(i, j) += xik * y(k, j);
            }
        return r;
    }

    friend std::vector<T> operator*(const Matrix& m, const std::vector<T>& v) {
        if (m.cols_ != v.size()) throw std::invalid_argument("hcox: matrix/vector shape mismatch");
        std::vector<T> r(m.rows_);
        for (std::size_t i = 0; i < m.rows_; ++i)
            for (std::size_t j = 0; j < m.cols_; ++j) r[i] += m(i, j) * v[j];
        return r;
    }

    Matrix submatrix(const std::vector<std::size_t>& keep) const {
        Matrix r(keep.size(), keep.size());
        for (std::size_t i = 0; i < keep.size(); ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) r(i, j) = (*this)(keep[i], keep[j]);
        return r;
    }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using GoldenMatrix = Matrix<GoldenInt>;
using RationalMatrix = Matrix<GoldenRational>;

template <typename T>
Matrix<T> power(const Matrix<T>& m, unsigned e) {
    Matrix<T> r = Matrix<T>::identity(m.rows());
    for (unsigned i = 0; i < e; ++i) r = r * m;
    return r;
}

namespace detail {

template <typename T>
T laplace(const Matrix<T>& m, std::vector<std::size_t>& cols, std::size_t row) {
    if (cols.size() == 1) return m(row, cols[0]);
    T det{};
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const std::size_t c = cols[k];
        if (m(row, c) == T{}) continue;
        std::vector<std::size_t> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        const T minor = laplace(m, rest, row + 1);
        if (k % 2 == 0)
            det += m(row, c) * minor;
        else
            det -= m(row, c) * minor;
    }
    return det;
}

}  // namespace detail

/// Exact determinant by cofactor expansion along successive rows.
template <typename T>
T determinant(const Matrix<T>& m) {
    if (!m.square()) throw std::invalid_argument("hcox: determinant of non-square matrix");
    if (m.rows() == 0) return T{1};
    std::vector<std::size_t> cols(m.cols());
    for (std::size_t j = 0; j < cols.size(); ++j) cols[j] = j;
    return detail::laplace(m, cols, 0);
}

/// Gauss-Jordan inverse over Q(tau).
inline RationalMatrix inverse(const RationalMatrix& m) {
    if (!m.square()) throw std::invalid_argument("hcox: inverse of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix a = m;
    RationalMatrix inv = RationalMatrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a(pivot, col).is_zero()) ++pivot;
        if (pivot == n) throw std::domain_error("hcox: singular matrix");
        if (pivot != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(pivot, j), a(col, j));
                std::swap(inv(pivot, j), inv(col, j));
            }
        const GoldenRational p = a(col, col);
        for (std::size_t j = 0; j < n; ++j) {
            a(col, j) = a(col, j) / p;
            inv(col, j) = inv(col, j) / p;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a(i, col).is_zero()) continue;
            const GoldenRational f = a(i, col);
            for (std::size_t j = 0; j < n; ++j) {
                a(i, j) -= f * a(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

inline RationalMatrix to_rational(const GoldenMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = GoldenRational{m(i, j)};
    return r;
}

}  // namespace hcox
