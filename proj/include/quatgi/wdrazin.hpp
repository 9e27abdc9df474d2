#pragma once

#include "determinant.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "generalized_inverse.hpp"
#include "matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

namespace quatgi {

enum class wdrazin_route {
    automatic,
    u_route,        ///< A (WA)^D (WA)^D with determinantal Drazin factors
    v_route,        ///< (AW)^D (AW)^D A with determinantal Drazin factors
    weighted_rdet,  ///< (AW)^D W^+ as a double row-determinant sum; needs rank W = rows(W)
    weighted_cdet,  ///< W^+ (WA)^D as a double column-determinant sum; needs rank W = cols(W)
    hermitian_aw,   ///< AW Hermitian
    hermitian_wa,   ///< WA Hermitian
    cline,          ///< A((WA)^D)^2, compared against ((AW)^D)^2 A
    mp_oracle,      ///< (AW)^k((AW)^{2k+1})^+(AW)^k W^+ and its W^+ twin
};

inline std::string_view to_string(wdrazin_route r) {
    switch (r) {
        case wdrazin_route::automatic: return "auto";
        case wdrazin_route::u_route: return "u-route";
        case wdrazin_route::v_route: return "v-route";
        case wdrazin_route::weighted_rdet: return "weighted-rdet";
        case wdrazin_route::weighted_cdet: return "weighted-cdet";
        case wdrazin_route::hermitian_aw: return "hermitian-aw";
        case wdrazin_route::hermitian_wa: return "hermitian-wa";
        case wdrazin_route::cline: return "cline";
        case wdrazin_route::mp_oracle: return "mp-oracle";
    }
    return "unknown";
}

/// Routes used for the two Drazin factors of (U^D)^2 or (V^D)^2. Each is cdet or rdet.
struct factor_routes {
    drazin_route first = drazin_route::cdet;
    drazin_route second = drazin_route::cdet;
};

template <class T>
struct wdrazin_result {
    using real_type = typename scalar_traits<T>::real_type;

    matrix<T> value;
    unsigned k = 0;
    wdrazin_route route = wdrazin_route::automatic;
    /// rank (AW)^k, equal to rank (WA)^k once k reaches both indices.
    std::size_t r = 0;
    std::size_t r1 = 0;
    std::vector<real_type> denominators;
};

/// k = max{Ind(AW), Ind(WA)}.
template <class T>
unsigned weighted_index(const matrix<T>& a, const matrix<T>& w) {
    return std::max(matrix_index(a * w), matrix_index(w * a));
}

namespace detail {

template <class T>
void check_weight_shape(const matrix<T>& a, const matrix<T>& w) {
    if (w.rows() != a.cols() || w.cols() != a.rows())
        throw dimension_mismatch("weight must be " + std::to_string(a.cols()) + "x" + std::to_string(a.rows()) +
                                 " for a " + a.shape() + " matrix, got " + w.shape());
}

// (X^D)^2 with the two factors computed by the requested determinantal routes.
template <class T>
matrix<T> drazin_square(const matrix<T>& x, factor_routes f) {
    return drazin(x, f.first).value * drazin(x, f.second).value;
}

}  // namespace detail

/// Whether a pinned route's hypotheses hold for (A, W).
template <class T>
bool route_applicable(const matrix<T>& a, const matrix<T>& w, wdrazin_route route) {
    detail::check_weight_shape(a, w);
    switch (route) {
        case wdrazin_route::weighted_rdet: return rank(w) == w.rows();
        case wdrazin_route::weighted_cdet: return rank(w) == w.cols();
        case wdrazin_route::hermitian_aw: return is_hermitian(a * w);
        case wdrazin_route::hermitian_wa: return is_hermitian(w * a);
        case wdrazin_route::mp_oracle: {
            const std::size_t r1 = rank(w);
            return r1 == w.rows() || r1 == w.cols();
        }
        default: return true;
    }
}

/// Oracle A((WA)^D)^2; throws internal_error if ((AW)^D)^2 A differs.
template <class T>
matrix<T> wdrazin_via_cline(const matrix<T>& a, const matrix<T>& w) {
    detail::check_weight_shape(a, w);
    const matrix<T> ud = drazin(w * a).value;
    const matrix<T> vd = drazin(a * w).value;
    matrix<T> x = a * (ud * ud);
    if (!(x == vd * vd * a)) throw internal_error("A((WA)^D)^2 and ((AW)^D)^2 A disagree");
    return x;
}

/// Oracle through Moore-Penrose inverses: (AW)^D W^+ when W has full row rank and
/// W^+ (WA)^D when W has full column rank, each Drazin factor built as
/// X^k (X^{2k+1})^+ X^k. Both are computed and compared when both apply.
template <class T>
matrix<T> wdrazin_via_mp(const matrix<T>& a, const matrix<T>& w) {
    detail::check_weight_shape(a, w);
    const std::size_t r1 = rank(w);
    const bool row_full = r1 == w.rows();
    const bool col_full = r1 == w.cols();
    if (!row_full && !col_full)
        throw route_inapplicable("the Moore-Penrose weighted forms need W of full row or column rank");
    const unsigned k = weighted_index(a, w);
    auto core = [k](const matrix<T>& x) {
        const matrix<T> xk = pow(x, k);
        return matrix<T>(xk * mp_inverse(pow(x, 2 * k + 1)).value * xk);
    };
    const matrix<T> wp = mp_inverse(w).value;
    if (row_full && col_full) {
        matrix<T> v_form = core(a * w) * wp;
        if (!(v_form == wp * core(w * a))) throw internal_error("the two Moore-Penrose weighted forms disagree");
        return v_form;
    }
    return row_full ? matrix<T>(core(a * w) * wp) : matrix<T>(wp * core(w * a));
}

/// W-weighted Drazin inverse A_{d,W}, A m x n, W n x m.
template <class T>
wdrazin_result<T> wdrazin(const matrix<T>& a, const matrix<T>& w, wdrazin_route route = wdrazin_route::automatic,
                          factor_routes factors = {}) {
    detail::check_weight_shape(a, w);
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const matrix<T> v = a * w;
    const matrix<T> u = w * a;

    if (route == wdrazin_route::automatic) {
        if (is_hermitian(v))
            route = wdrazin_route::hermitian_aw;
        else if (is_hermitian(u))
            route = wdrazin_route::hermitian_wa;
        else
            route = wdrazin_route::v_route;
    }
    if (!route_applicable(a, w, route))
        throw route_inapplicable(std::string("route ") + std::string(to_string(route)) +
                                 " does not apply to this A and W");

    wdrazin_result<T> out;
    out.route = route;
    out.k = weighted_index(a, w);
    const unsigned k = out.k;
    const matrix<T> vk = pow(v, k);
    out.r = rank(vk);
    out.r1 = rank(w);
    out.value = matrix<T>(m, n);
    const std::size_t r = out.r;

    switch (route) {
        case wdrazin_route::u_route: out.value = a * detail::drazin_square(u, factors); return out;
        case wdrazin_route::v_route: out.value = detail::drazin_square(v, factors) * a; return out;
        case wdrazin_route::cline: out.value = wdrazin_via_cline(a, w); return out;
        case wdrazin_route::mp_oracle: out.value = wdrazin_via_mp(a, w); return out;
        default: break;
    }
    if (r == 0) return out;

    const std::size_t r1 = out.r1;
    switch (route) {
        case wdrazin_route::weighted_cdet: {
            const matrix<T> uk = pow(u, k);
            const matrix<T> big_s = conj_transpose(pow(u, 2 * k + 1));
            const matrix<T> gram_u = big_s * pow(u, 2 * k + 1);
            const matrix<T> hat_u = big_s * uk;
            const matrix<T> gram_w = conj_transpose(w) * w;
            const matrix<T> hat_w = conj_transpose(w) * uk;
            const auto den_w = principal_minor_sum(gram_w, r1);
            const auto den_u = principal_minor_sum(gram_u, r);
            detail::require_nonzero_denominator(den_w, "the weighted column form");
            detail::require_nonzero_denominator(den_u, "the weighted column form");
            matrix<T> left(m, n);
            for (std::size_t t = 0; t < n; ++t) {
                const auto col = hat_w.column(t);
                for (std::size_t i = 0; i < m; ++i) left(i, t) = column_bordered_sum(gram_w, i, std::span<const T>(col), r1);
            }
            matrix<T> right(n, n);
            for (std::size_t j = 0; j < n; ++j) {
                const auto col = hat_u.column(j);
                for (std::size_t t = 0; t < n; ++t) right(t, j) = column_bordered_sum(gram_u, t, std::span<const T>(col), r);
            }
            out.denominators = {den_w, den_u};
            out.value = detail::divide_entries(left * right, typename scalar_traits<T>::real_type(den_w * den_u));
            return out;
        }
        case wdrazin_route::weighted_rdet: {
            const matrix<T> big = pow(v, 2 * k + 1);
            const matrix<T> big_s = conj_transpose(big);
            const matrix<T> gram_v = big * big_s;
            const matrix<T> check_v = vk * big_s;
            const matrix<T> gram_w = w * conj_transpose(w);
            const matrix<T> check_w = vk * conj_transpose(w);
            const auto den_v = principal_minor_sum(gram_v, r);
            const auto den_w = principal_minor_sum(gram_w, r1);
            detail::require_nonzero_denominator(den_v, "the weighted row form");
            detail::require_nonzero_denominator(den_w, "the weighted row form");
            matrix<T> left(m, m);
            for (std::size_t i = 0; i < m; ++i) {
                const auto row = check_v.row(i);
                for (std::size_t t = 0; t < m; ++t) left(i, t) = row_bordered_sum(gram_v, t, std::span<const T>(row), r);
            }
            matrix<T> right(m, n);
            for (std::size_t t = 0; t < m; ++t) {
                const auto row = check_w.row(t);
                for (std::size_t j = 0; j < n; ++j) right(t, j) = row_bordered_sum(gram_w, j, std::span<const T>(row), r1);
            }
            out.denominators = {den_v, den_w};
            out.value = detail::divide_entries(left * right, typename scalar_traits<T>::real_type(den_v * den_w));
            return out;
        }
        case wdrazin_route::hermitian_aw: {
            const matrix<T> h = pow(v, k + 2);
            const matrix<T> vbar = vk * a;
            const auto den = principal_minor_sum(h, r);
            detail::require_nonzero_denominator(den, "the Hermitian AW form");
            for (std::size_t j = 0; j < n; ++j) {
                const auto col = vbar.column(j);
                for (std::size_t i = 0; i < m; ++i) out.value(i, j) = column_bordered_sum(h, i, std::span<const T>(col), r);
            }
            out.denominators = {den};
            out.value = detail::divide_entries(std::move(out.value), den);
            return out;
        }
        case wdrazin_route::hermitian_wa: {
            const matrix<T> h = pow(u, k + 2);
            const matrix<T> ubar = a * pow(u, k);
            const auto den = principal_minor_sum(h, r);
            detail::require_nonzero_denominator(den, "the Hermitian WA form");
            for (std::size_t i = 0; i < m; ++i) {
                const auto row = ubar.row(i);
                for (std::size_t j = 0; j < n; ++j) out.value(i, j) = row_bordered_sum(h, j, std::span<const T>(row), r);
            }
            out.denominators = {den};
            out.value = detail::divide_entries(std::move(out.value), den);
            return out;
        }
        default: break;
    }
    throw internal_error("unhandled W-weighted Drazin route");
}

/// (W A W A_{d,W}, A_{d,W} W A W); both idempotent.
template <class T>
std::pair<matrix<T>, matrix<T>> weighted_projectors(const matrix<T>& a, const matrix<T>& w) {
    const matrix<T> x = wdrazin_via_cline(a, w);
    const matrix<T> waw = w * a * w;
    return {waw * x, x * waw};
}

}  // namespace quatgi
