#pragma once

#include "errors.hpp"
#include "index_subset.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

namespace quatgi {

namespace detail {
inline std::size_t& determinant_cap_storage() {
    static std::size_t cap = 8;
    return cap;
}
}  // namespace detail

/// Largest order the factorial rdet/cdet engine accepts.
inline std::size_t max_determinant_order() { return detail::determinant_cap_storage(); }
inline void set_max_determinant_order(std::size_t cap) { detail::determinant_cap_storage() = cap; }

/// Restores the previous cap on scope exit.
class scoped_determinant_cap {
public:
    explicit scoped_determinant_cap(std::size_t cap) : saved_(max_determinant_order()) {
        set_max_determinant_order(cap);
    }
    ~scoped_determinant_cap() { set_max_determinant_order(saved_); }
    scoped_determinant_cap(const scoped_determinant_cap&) = delete;
    scoped_determinant_cap& operator=(const scoped_determinant_cap&) = delete;

private:
    std::size_t saved_;
};

namespace detail {

inline void check_determinant_order(std::size_t n) {
    if (n > max_determinant_order()) throw size_cap_exceeded(n, max_determinant_order());
}

// Multiplies the cycle of sigma through `start` into prod, starting at `start`.
template <class T>
void multiply_cycle(const matrix<T>& a, const std::vector<std::size_t>& sigma, std::size_t start,
                    std::vector<char>& seen, T& prod) {
    std::size_t y = start;
    do {
        seen[y] = 1;
        prod = prod * a(y, sigma[y]);
        y = sigma[y];
    } while (y != start);
}

template <class T>
bool has_zero_factor(const matrix<T>& a, const std::vector<std::size_t>& sigma) {
    for (std::size_t y = 0; y < sigma.size(); ++y)
        if (scalar_traits<T>::is_zero(a(y, sigma[y]))) return true;
    return false;
}

inline std::size_t count_cycles(const std::vector<std::size_t>& sigma, std::vector<char>& seen) {
    std::fill(seen.begin(), seen.end(), 0);
    std::size_t cycles = 0;
    for (std::size_t s = 0; s < sigma.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t y = s; !seen[y]; y = sigma[y]) seen[y] = 1;
    }
    return cycles;
}

}  // namespace detail

/// i-th row determinant. Every permutation contributes (-1)^{n-r} times the product of
/// a_{y,sigma(y)} along its cycles: first the cycle through i starting at i, then the
/// remaining cycles by ascending minimum, each starting at its minimum. r counts all
/// cycles, fixed points included.
template <class T>
T rdet(std::size_t i, const matrix<T>& a) {
    if (!a.is_square()) throw not_square("rdet of a " + a.shape() + " matrix");
    const std::size_t n = a.rows();
    if (i >= n) throw dimension_mismatch("rdet row index out of range");
    detail::check_determinant_order(n);

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<char> seen(n);
    T total(0);
    do {
        if (detail::has_zero_factor(a, sigma)) continue;
        const std::size_t r = detail::count_cycles(sigma, seen);
        std::fill(seen.begin(), seen.end(), 0);
        T prod(1);
        detail::multiply_cycle(a, sigma, i, seen, prod);
        for (std::size_t s = 0; s < n; ++s)
            if (!seen[s]) detail::multiply_cycle(a, sigma, s, seen, prod);
        if ((n - r) % 2 == 0)
            total += prod;
        else
            total -= prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

/// j-th column determinant. Mirror of rdet: the non-leading cycles come first by
/// descending minimum, and the cycle through j comes last.
template <class T>
T cdet(std::size_t j, const matrix<T>& a) {
    if (!a.is_square()) throw not_square("cdet of a " + a.shape() + " matrix");
    const std::size_t n = a.rows();
    if (j >= n) throw dimension_mismatch("cdet column index out of range");
    detail::check_determinant_order(n);

    std::vector<std::size_t> sigma(n);
    std::iota(sigma.begin(), sigma.end(), std::size_t{0});
    std::vector<char> seen(n);
    std::vector<std::size_t> minima;
    minima.reserve(n);
    T total(0);
    do {
        if (detail::has_zero_factor(a, sigma)) continue;
        std::fill(seen.begin(), seen.end(), 0);
        for (std::size_t y = j; !seen[y]; y = sigma[y]) seen[y] = 1;
        minima.clear();
        for (std::size_t s = 0; s < n; ++s) {
            if (seen[s]) continue;
            minima.push_back(s);
            for (std::size_t y = s; !seen[y]; y = sigma[y]) seen[y] = 1;
        }
        const std::size_t r = minima.size() + 1;

        std::fill(seen.begin(), seen.end(), 0);
        T prod(1);
        for (auto it = minima.rbegin(); it != minima.rend(); ++it) detail::multiply_cycle(a, sigma, *it, seen, prod);
        detail::multiply_cycle(a, sigma, j, seen, prod);
        if ((n - r) % 2 == 0)
            total += prod;
        else
            total -= prod;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return total;
}

/// Determinant of a Hermitian matrix: the common real value of all rdet_i and cdet_j.
template <class T>
typename scalar_traits<T>::real_type det_hermitian(const matrix<T>& a) {
    using traits = scalar_traits<T>;
    if (!is_hermitian(a)) throw not_hermitian("det_hermitian needs a Hermitian matrix, got " + a.shape());
    if (a.rows() == 0) return typename traits::real_type(1);
    const T value = rdet(0, a);
    if (!traits::is_real(value)) throw internal_error("determinant of a Hermitian matrix is not real");
    return traits::real_part(value);
}

/// ddet M = det(M M*); nonzero exactly when M is invertible.
template <class T>
typename scalar_traits<T>::real_type ddet(const matrix<T>& a) {
    if (!a.is_square()) throw not_square("ddet of a " + a.shape() + " matrix");
    return det_hermitian(a * conj_transpose(a));
}

template <class T>
typename scalar_traits<T>::real_type principal_minor(const matrix<T>& a, const index_subset& alpha) {
    return det_hermitian(principal_submatrix(a, std::span<const std::size_t>(alpha)));
}

/// Sum of all principal minors of order r of a Hermitian matrix.
template <class T>
typename scalar_traits<T>::real_type principal_minor_sum(const matrix<T>& a, std::size_t r) {
    if (!is_hermitian(a)) throw not_hermitian("principal minors need a Hermitian matrix, got " + a.shape());
    typename scalar_traits<T>::real_type total(0);
    for_each_subset(r, a.rows(), [&](const index_subset& alpha) { total += principal_minor(a, alpha); });
    return total;
}

/// Sum over beta in J_{r,n}{i} of cdet_i of the beta-principal submatrix of M with column
/// i replaced by b. Right-linear in b.
template <class T>
T column_bordered_sum(const matrix<T>& m, std::size_t i, std::span<const T> b, std::size_t r) {
    const matrix<T> replaced = replace_column(m, i, b);
    T total(0);
    for_each_subset_containing(r, m.rows(), i, [&](const index_subset& beta, std::size_t pos) {
        total += cdet(pos, principal_submatrix(replaced, std::span<const std::size_t>(beta)));
    });
    return total;
}

/// Sum over alpha in I_{r,n}{j} of rdet_j of the alpha-principal submatrix of M with row
/// j replaced by b. Left-linear in b.
template <class T>
T row_bordered_sum(const matrix<T>& m, std::size_t j, std::span<const T> b, std::size_t r) {
    const matrix<T> replaced = replace_row(m, j, b);
    T total(0);
    for_each_subset_containing(r, m.rows(), j, [&](const index_subset& alpha, std::size_t pos) {
        total += rdet(pos, principal_submatrix(replaced, std::span<const std::size_t>(alpha)));
    });
    return total;
}

}  // namespace quatgi
