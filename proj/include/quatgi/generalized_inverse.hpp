#pragma once

#include "determinant.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "matrix.hpp"

#include <cstddef>
#include <string>
#include <string_view>

namespace quatgi {

enum class inverse_route {
    mp_left,                ///< A*A Gram matrix with column determinants
    mp_right,               ///< AA* Gram matrix with row determinants
    inverse,                ///< invertible short cut (index 0)
    drazin_cdet,
    drazin_rdet,
    drazin_hermitian_cdet,
    drazin_hermitian_rdet,
    composition,            ///< A^k (A^{2k+1})^+ A^k
};

inline std::string_view to_string(inverse_route r) {
    switch (r) {
        case inverse_route::mp_left: return "mp-left";
        case inverse_route::mp_right: return "mp-right";
        case inverse_route::inverse: return "inverse";
        case inverse_route::drazin_cdet: return "cdet";
        case inverse_route::drazin_rdet: return "rdet";
        case inverse_route::drazin_hermitian_cdet: return "hermitian-cdet";
        case inverse_route::drazin_hermitian_rdet: return "hermitian-rdet";
        case inverse_route::composition: return "composition";
    }
    return "unknown";
}

enum class mp_route { left, right };

enum class drazin_route { automatic, cdet, rdet, hermitian_cdet, hermitian_rdet, composition };

template <class T>
struct inverse_result {
    using real_type = typename scalar_traits<T>::real_type;

    matrix<T> value;
    inverse_route route;
    /// The minor sum divided by; 0 when the input has rank 0.
    real_type denominator{0};
    std::size_t rank = 0;
    /// Matrix index used (Drazin routes only).
    unsigned index = 0;
};

namespace detail {

template <class T, class Real>
matrix<T> divide_entries(matrix<T> m, const Real& d) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = T(m(i, j) / d);
    return m;
}

template <class Real>
void require_nonzero_denominator(const Real& d, const char* what) {
    if (d == 0) throw internal_error(std::string("vanishing minor sum in ") + what);
}

}  // namespace detail

/// Moore-Penrose inverse. The left form sums column determinants of (A*A) bordered by
/// columns of A*; the right form sums row determinants of (AA*) bordered by rows of A*.
template <class T>
inverse_result<T> mp_inverse(const matrix<T>& a, mp_route route = mp_route::left) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    inverse_result<T> out{matrix<T>(n, m), route == mp_route::left ? inverse_route::mp_left : inverse_route::mp_right};
    out.rank = rank(a);
    const std::size_t r = out.rank;
    if (r == 0) return out;

    const matrix<T> as = conj_transpose(a);
    if (route == mp_route::left) {
        const matrix<T> gram = as * a;
        out.denominator = principal_minor_sum(gram, r);
        detail::require_nonzero_denominator(out.denominator, "the Moore-Penrose left form");
        for (std::size_t j = 0; j < m; ++j) {
            const auto col = as.column(j);
            for (std::size_t i = 0; i < n; ++i)
                out.value(i, j) = column_bordered_sum(gram, i, std::span<const T>(col), r);
        }
    } else {
        const matrix<T> gram = a * as;
        out.denominator = principal_minor_sum(gram, r);
        detail::require_nonzero_denominator(out.denominator, "the Moore-Penrose right form");
        for (std::size_t i = 0; i < n; ++i) {
            const auto row = as.row(i);
            for (std::size_t j = 0; j < m; ++j)
                out.value(i, j) = row_bordered_sum(gram, j, std::span<const T>(row), r);
        }
    }
    out.value = detail::divide_entries(std::move(out.value), out.denominator);
    return out;
}

/// Inverse of a square matrix from the column-determinant adjoint of A*A over ddet A,
/// cross-checked against the row-determinant adjoint of AA*.
template <class T>
matrix<T> inverse(const matrix<T>& a) {
    if (!a.is_square()) throw not_square("inverse of a " + a.shape() + " matrix");
    const std::size_t n = a.rows();
    const auto d = ddet(a);
    if (d == 0) throw singular_matrix("matrix is singular (ddet = 0)");

    const matrix<T> as = conj_transpose(a);
    const matrix<T> left_gram = as * a;
    const matrix<T> right_gram = a * as;
    matrix<T> left(n, n);
    matrix<T> right(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto col = as.column(j);
            const auto row = as.row(i);
            left(i, j) = cdet(i, replace_column(left_gram, i, std::span<const T>(col)));
            right(i, j) = rdet(j, replace_row(right_gram, j, std::span<const T>(row)));
        }
    if (!(left == right)) throw internal_error("left and right adjoint inverses disagree");
    return detail::divide_entries(std::move(left), d);
}

/// Drazin inverse. Automatic selection uses the invertible short cut when the index is 0
/// and the Hermitian forms when A* = A; pinned routes always run their own formula.
template <class T>
inverse_result<T> drazin(const matrix<T>& a, drazin_route route = drazin_route::automatic) {
    if (!a.is_square()) throw not_square("Drazin inverse of a " + a.shape() + " matrix");
    const std::size_t n = a.rows();
    const unsigned k = matrix_index(a);

    if (route == drazin_route::automatic) {
        if (k == 0) {
            inverse_result<T> out{inverse(a), inverse_route::inverse, ddet(a), n, 0};
            return out;
        }
        route = is_hermitian(a) ? drazin_route::hermitian_cdet : drazin_route::cdet;
    }

    const matrix<T> ak = pow(a, k);
    inverse_result<T> out{matrix<T>(n, n), inverse_route::drazin_cdet};
    out.index = k;
    out.rank = rank(ak);
    const std::size_t r = out.rank;

    switch (route) {
        case drazin_route::cdet: out.route = inverse_route::drazin_cdet; break;
        case drazin_route::rdet: out.route = inverse_route::drazin_rdet; break;
        case drazin_route::hermitian_cdet: out.route = inverse_route::drazin_hermitian_cdet; break;
        case drazin_route::hermitian_rdet: out.route = inverse_route::drazin_hermitian_rdet; break;
        case drazin_route::composition: out.route = inverse_route::composition; break;
        case drazin_route::automatic: break;
    }
    if ((route == drazin_route::hermitian_cdet || route == drazin_route::hermitian_rdet) && !is_hermitian(a))
        throw route_inapplicable("Hermitian Drazin route needs a Hermitian matrix");
    if (r == 0) return out;

    if (route == drazin_route::composition) {
        auto mp = mp_inverse(pow(a, 2 * k + 1));
        out.value = ak * mp.value * ak;
        out.denominator = mp.denominator;
        return out;
    }

    if (route == drazin_route::cdet || route == drazin_route::rdet) {
        const matrix<T> big = pow(a, 2 * k + 1);
        const matrix<T> big_s = conj_transpose(big);
        if (route == drazin_route::cdet) {
            const matrix<T> gram = big_s * big;
            const matrix<T> hat = big_s * ak;
            out.denominator = principal_minor_sum(gram, r);
            detail::require_nonzero_denominator(out.denominator, "the Drazin column form");
            matrix<T> inner(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                const auto col = hat.column(j);
                for (std::size_t t = 0; t < n; ++t) inner(t, j) = column_bordered_sum(gram, t, std::span<const T>(col), r);
            }
            out.value = detail::divide_entries(ak * inner, out.denominator);
        } else {
            const matrix<T> gram = big * big_s;
            const matrix<T> check = ak * big_s;
            out.denominator = principal_minor_sum(gram, r);
            detail::require_nonzero_denominator(out.denominator, "the Drazin row form");
            matrix<T> inner(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                const auto row = check.row(i);
                for (std::size_t s = 0; s < n; ++s) inner(i, s) = row_bordered_sum(gram, s, std::span<const T>(row), r);
            }
            out.value = detail::divide_entries(inner * ak, out.denominator);
        }
        return out;
    }

    // Hermitian forms: bordered sums of A^{k+1} with columns (rows) of A^k.
    const matrix<T> h = pow(a, k + 1);
    out.denominator = principal_minor_sum(h, r);
    detail::require_nonzero_denominator(out.denominator, "the Hermitian Drazin form");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (route == drazin_route::hermitian_cdet) {
                const auto col = ak.column(j);
                out.value(i, j) = column_bordered_sum(h, i, std::span<const T>(col), r);
            } else {
                const auto row = ak.row(i);
                out.value(i, j) = row_bordered_sum(h, j, std::span<const T>(row), r);
            }
        }
    out.value = detail::divide_entries(std::move(out.value), out.denominator);
    return out;
}

template <class T>
matrix<T> drazin_via_mp(const matrix<T>& a) {
    return drazin(a, drazin_route::composition).value;
}

}  // namespace quatgi
