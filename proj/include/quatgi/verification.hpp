#pragma once

#include "elimination.hpp"
#include "errors.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <vector>

namespace quatgi {

/// Axioms: Penrose P1-P4 (AXA=A, XAX=X, (AX)*=AX, (XA)*=XA), Drazin D2/D5/D6
/// (XAX=X, AX=XA, A^{k+1}X=A^k) and W-weighted Drazin W7-W9
/// ((AW)^{k+1}XW=(AW)^k, XWAWX=X, AWX=XWA).
enum class axiom_id { P1, P2, P3, P4, D2, D5, D6, W7, W8, W9 };

inline std::string_view to_string(axiom_id id) {
    switch (id) {
        case axiom_id::P1: return "P1";
        case axiom_id::P2: return "P2";
        case axiom_id::P3: return "P3";
        case axiom_id::P4: return "P4";
        case axiom_id::D2: return "D2";
        case axiom_id::D5: return "D5";
        case axiom_id::D6: return "D6";
        case axiom_id::W7: return "W7";
        case axiom_id::W8: return "W8";
        case axiom_id::W9: return "W9";
    }
    return "?";
}

inline std::string_view describe(axiom_id id) {
    switch (id) {
        case axiom_id::P1: return "AXA = A";
        case axiom_id::P2: return "XAX = X";
        case axiom_id::P3: return "(AX)* = AX";
        case axiom_id::P4: return "(XA)* = XA";
        case axiom_id::D2: return "XAX = X";
        case axiom_id::D5: return "AX = XA";
        case axiom_id::D6: return "A^{k+1}X = A^k";
        case axiom_id::W7: return "(AW)^{k+1}XW = (AW)^k";
        case axiom_id::W8: return "XWAWX = X";
        case axiom_id::W9: return "AWX = XWA";
    }
    return "?";
}

template <class T>
struct axiom_report {
    axiom_id id;
    bool holds;
    /// lhs - rhs; zero exactly when the axiom holds.
    matrix<T> residual;
};

template <class T>
bool all_hold(const std::vector<axiom_report<T>>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.holds; });
}

namespace detail {
template <class T>
axiom_report<T> make_report(axiom_id id, const matrix<T>& lhs, const matrix<T>& rhs) {
    matrix<T> res = lhs - rhs;
    const bool holds = res.is_zero();
    return {id, holds, std::move(res)};
}
}  // namespace detail

template <class T>
std::vector<axiom_report<T>> verify_penrose(const matrix<T>& a, const matrix<T>& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw dimension_mismatch("candidate " + x.shape() + " cannot invert a " + a.shape() + " matrix");
    const matrix<T> ax = a * x;
    const matrix<T> xa = x * a;
    return {detail::make_report(axiom_id::P1, ax * a, a), detail::make_report(axiom_id::P2, x * ax, x),
            detail::make_report(axiom_id::P3, conj_transpose(ax), ax),
            detail::make_report(axiom_id::P4, conj_transpose(xa), xa)};
}

template <class T>
std::vector<axiom_report<T>> verify_drazin(const matrix<T>& a, const matrix<T>& x) {
    if (!a.is_square()) throw not_square("Drazin axioms need a square matrix, got " + a.shape());
    if (x.rows() != a.rows() || x.cols() != a.cols())
        throw dimension_mismatch("candidate " + x.shape() + " for a " + a.shape() + " matrix");
    const unsigned k = matrix_index(a);
    const matrix<T> ak = pow(a, k);
    return {detail::make_report(axiom_id::D2, x * a * x, x), detail::make_report(axiom_id::D5, a * x, x * a),
            detail::make_report(axiom_id::D6, ak * a * x, ak)};
}

template <class T>
std::vector<axiom_report<T>> verify_wdrazin(const matrix<T>& a, const matrix<T>& w, const matrix<T>& x) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw dimension_mismatch("weight " + w.shape() + " does not fit a " + a.shape() + " matrix");
    if (x.rows() != a.rows() || x.cols() != a.cols())
        throw dimension_mismatch("candidate " + x.shape() + " for a " + a.shape() + " matrix");
    const matrix<T> aw = a * w;
    const unsigned k = std::max(matrix_index(aw), matrix_index(matrix<T>(w * a)));
    const matrix<T> awk = pow(aw, k);
    return {detail::make_report(axiom_id::W7, awk * aw * x * w, awk),
            detail::make_report(axiom_id::W8, x * w * a * w * x, x),
            detail::make_report(axiom_id::W9, aw * x, x * w * a)};
}

namespace detail {
inline rational laplace(const std::vector<std::vector<rational>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return rational(1);
    if (n == 1) return m[0][0];
    rational total(0);
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == 0) continue;
        std::vector<std::vector<rational>> minor(n - 1);
        for (std::size_t i = 1; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (j != c) minor[i - 1].push_back(m[i][j]);
        const rational term = m[0][c] * laplace(minor);
        if (c % 2 == 0)
            total += term;
        else
            total -= term;
    }
    return total;
}
}  // namespace detail

/// Classical cofactor-expansion determinant of a matrix whose entries are all real.
template <class T>
rational classical_det_oracle(const matrix<T>& m) {
    if (!m.is_square()) throw not_square("determinant of a " + m.shape() + " matrix");
    std::vector<std::vector<rational>> rows(m.rows(), std::vector<rational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (!scalar_traits<T>::is_real(m(i, j))) throw non_real_entry("classical determinant needs real entries");
            rows[i][j] = scalar_traits<T>::real_part(m(i, j));
        }
    return detail::laplace(rows);
}

}  // namespace quatgi
