#pragma once

#include "errors.hpp"
#include "quaternion.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace quatgi {

/// Dense row-major matrix over a (possibly noncommutative) star ring T. A value type:
/// every operation returns a new matrix.
template <class T>
class matrix {
public:
    using value_type = T;
    using traits = scalar_traits<T>;

    matrix() = default;
    matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

    matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
        cols_ = rows_ == 0 ? 0 : init.begin()->size();
        data_.reserve(rows_ * cols_);
        for (const auto& row : init) {
            if (row.size() != cols_) throw dimension_mismatch("ragged matrix initializer");
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static matrix identity(std::size_t n) {
        matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    static matrix zero(std::size_t rows, std::size_t cols) { return matrix(rows, cols); }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }
    bool empty() const noexcept { return data_.empty(); }

    T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const T> row_span(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

    std::vector<T> row(std::size_t i) const {
        auto r = row_span(i);
        return {r.begin(), r.end()};
    }

    std::vector<T> column(std::size_t j) const {
        std::vector<T> c;
        c.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
        return c;
    }

    bool is_zero() const {
        for (const auto& x : data_)
            if (!traits::is_zero(x)) return false;
        return true;
    }

    matrix& operator+=(const matrix& o) {
        require_same_shape(o, "matrix addition");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] += o.data_[t];
        return *this;
    }
    matrix& operator-=(const matrix& o) {
        require_same_shape(o, "matrix subtraction");
        for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
        return *this;
    }

    friend matrix operator+(matrix a, const matrix& b) { return a += b; }
    friend matrix operator-(matrix a, const matrix& b) { return a -= b; }

    friend matrix operator-(matrix a) {
        for (auto& x : a.data_) x = -x;
        return a;
    }

    friend matrix operator*(const matrix& a, const matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("matrix product of " + a.shape() + " and " + b.shape());
        matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t t = 0; t < a.cols_; ++t) {
                const T& lhs = a(i, t);
                if (traits::is_zero(lhs)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += lhs * b(t, j);
            }
        return c;
    }

    /// Left scalar multiplication s·M (entrywise s·m_ij).
    friend matrix operator*(const T& s, matrix m) {
        for (auto& x : m.data_) x = s * x;
        return m;
    }
    /// Right scalar multiplication M·s (entrywise m_ij·s).
    friend matrix operator*(matrix m, const T& s) {
        for (auto& x : m.data_) x = x * s;
        return m;
    }

    friend bool operator==(const matrix& a, const matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

private:
    void require_same_shape(const matrix& o, const char* what) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw dimension_mismatch(std::string(what) + " of " + shape() + " and " + o.shape());
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
};

using qmatrix = matrix<quaternion>;
using rmatrix = matrix<rational>;

/// (M*)_ij = conj(M_ji).
template <class T>
matrix<T> conj_transpose(const matrix<T>& m) {
    matrix<T> t(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) t(j, i) = scalar_traits<T>::conj(m(i, j));
    return t;
}

template <class T>
matrix<T> pow(const matrix<T>& m, unsigned p) {
    if (!m.is_square()) throw not_square("power of a " + m.shape() + " matrix");
    matrix<T> result = matrix<T>::identity(m.rows());
    matrix<T> base = m;
    while (p > 0) {
        if (p & 1U) result = result * base;
        p >>= 1U;
        if (p > 0) base = base * base;
    }
    return result;
}

template <class T>
bool is_hermitian(const matrix<T>& m) {
    if (!m.is_square()) return false;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i; j < m.cols(); ++j)
            if (!(m(i, j) == scalar_traits<T>::conj(m(j, i)))) return false;
    return true;
}

/// Submatrix on rows `rows` and columns `cols` (0-based indices).
template <class T>
matrix<T> submatrix(const matrix<T>& m, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
    matrix<T> s(rows.size(), cols.size());
    for (std::size_t a = 0; a < rows.size(); ++a)
        for (std::size_t b = 0; b < cols.size(); ++b) s(a, b) = m(rows[a], cols[b]);
    return s;
}

template <class T>
matrix<T> principal_submatrix(const matrix<T>& m, std::span<const std::size_t> indices) {
    return submatrix(m, indices, indices);
}

/// M with column j replaced by b.
template <class T>
matrix<T> replace_column(matrix<T> m, std::size_t j, std::span<const T> b) {
    if (j >= m.cols()) throw dimension_mismatch("column index out of range");
    if (b.size() != m.rows()) throw dimension_mismatch("replacement column has the wrong length");
    for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = b[i];
    return m;
}

/// M with row i replaced by b.
template <class T>
matrix<T> replace_row(matrix<T> m, std::size_t i, std::span<const T> b) {
    if (i >= m.rows()) throw dimension_mismatch("row index out of range");
    if (b.size() != m.cols()) throw dimension_mismatch("replacement row has the wrong length");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = b[j];
    return m;
}

/// [A | B]
template <class T>
matrix<T> hstack(const matrix<T>& a, const matrix<T>& b) {
    if (a.rows() != b.rows()) throw dimension_mismatch("hstack of " + a.shape() + " and " + b.shape());
    matrix<T> m(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) m(i, a.cols() + j) = b(i, j);
    }
    return m;
}

/// [A over B]
template <class T>
matrix<T> vstack(const matrix<T>& a, const matrix<T>& b) {
    if (a.cols() != b.cols()) throw dimension_mismatch("vstack of " + a.shape() + " and " + b.shape());
    matrix<T> m(a.rows() + b.rows(), a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
        for (std::size_t i = 0; i < a.rows(); ++i) m(i, j) = a(i, j);
        for (std::size_t i = 0; i < b.rows(); ++i) m(a.rows() + i, j) = b(i, j);
    }
    return m;
}

template <class T>
matrix<T> column_matrix(std::span<const T> v) {
    matrix<T> m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

template <class T>
matrix<T> row_matrix(std::span<const T> v) {
    matrix<T> m(1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
}

/// Embeds a real matrix into quaternion matrices (zero i, j, k parts).
inline qmatrix to_quaternion(const rmatrix& m) {
    qmatrix q(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = quaternion(m(i, j));
    return q;
}

}  // namespace quatgi
