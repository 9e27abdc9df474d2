#pragma once

#include "errors.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <vector>

namespace quatgi {

/// Reduced row echelon form by left row operations only: row swaps, left scaling by the
/// pivot inverse and subtracting left multiples of the pivot row. Pivots are the first
/// nonzero entries in column order.
template <class T>
struct echelon_form {
    matrix<T> reduced;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank() const noexcept { return pivot_columns.size(); }
};

template <class T>
echelon_form<T> row_reduce(matrix<T> m) {
    using traits = scalar_traits<T>;
    echelon_form<T> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && traits::is_zero(m(p, c))) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const T inv = traits::inverse(m(r, c));
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = inv * m(r, j);
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || traits::is_zero(m(i, c))) continue;
            const T f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    out.reduced = std::move(m);
    return out;
}

template <class T>
std::size_t rank(const matrix<T>& m) {
    return row_reduce(m).rank();
}

/// Smallest k >= 0 with rank M^{k+1} = rank M^k. Invertible gives 0; the zero matrix
/// gives 1.
template <class T>
unsigned matrix_index(const matrix<T>& m) {
    if (!m.is_square()) throw not_square("index of a " + m.shape() + " matrix");
    std::size_t prev = m.rows();
    matrix<T> power = matrix<T>::identity(m.rows());
    for (unsigned k = 0;; ++k) {
        power = power * m;
        const std::size_t next = rank(power);
        if (next == prev) return k;
        prev = next;
    }
}

/// Right null space {x : Mx = 0}; the returned columns form a basis.
template <class T>
matrix<T> right_null_space(const matrix<T>& m) {
    const auto ef = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : ef.pivot_columns) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < n; ++c)
        if (!is_pivot[c]) free.push_back(c);

    matrix<T> basis(n, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        basis(free[f], f) = T(1);
        for (std::size_t p = 0; p < ef.pivot_columns.size(); ++p)
            basis(ef.pivot_columns[p], f) = -ef.reduced(p, free[f]);
    }
    return basis;
}

/// Left null space {y : yM = 0}; the returned rows form a basis.
template <class T>
matrix<T> left_null_space(const matrix<T>& m) {
    return conj_transpose(right_null_space(conj_transpose(m)));
}

/// Every column of D is M·x for some x.
template <class T>
bool in_right_column_space(const matrix<T>& m, const matrix<T>& d) {
    if (m.rows() != d.rows()) throw dimension_mismatch("column space test of " + m.shape() + " and " + d.shape());
    return rank(hstack(m, d)) == rank(m);
}

/// Every row of D is y·M for some y.
template <class T>
bool in_left_row_space(const matrix<T>& m, const matrix<T>& d) {
    if (m.cols() != d.cols()) throw dimension_mismatch("row space test of " + m.shape() + " and " + d.shape());
    return rank(vstack(m, d)) == rank(m);
}

}  // namespace quatgi
