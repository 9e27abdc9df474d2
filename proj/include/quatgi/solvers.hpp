#pragma once

#include "determinant.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "generalized_inverse.hpp"
#include "matrix.hpp"
#include "verification.hpp"
#include "wdrazin.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace quatgi {

/// Routes for WAWX = D and XWAW = D.
///   weighted:  double column (row) determinant sums through W^+; needs W of full
///              column rank for the left equation and full row rank for the right one
///   drazin:    squared Drazin inverse of AW (left) or WA (right) applied to AD (DA)
///   hermitian: single bordered sum over (AW)^{k+2} (left, AW Hermitian) or
///              (WA)^{k+2} (right, WA Hermitian)
///   composition: A_{d,W} from the Cline-type oracle, multiplied out
enum class solve_route { automatic, weighted, drazin, hermitian, composition };

/// Routes for W1 A W1 X W2 B W2 = D.
///   drazin: ((AW1)^D)^2 (ADB) ((W2B)^D)^2
///   hermitian_db / hermitian_da: the two nested bordered-sum forms; AW1 and W2B Hermitian
enum class two_sided_route { automatic, drazin, hermitian_db, hermitian_da, composition };

inline std::string_view to_string(solve_route r) {
    switch (r) {
        case solve_route::automatic: return "auto";
        case solve_route::weighted: return "i";
        case solve_route::drazin: return "ii";
        case solve_route::hermitian: return "iii";
        case solve_route::composition: return "composition";
    }
    return "unknown";
}

inline std::string_view to_string(two_sided_route r) {
    switch (r) {
        case two_sided_route::automatic: return "auto";
        case two_sided_route::drazin: return "i";
        case two_sided_route::hermitian_db: return "ii-dB";
        case two_sided_route::hermitian_da: return "ii-dA";
        case two_sided_route::composition: return "composition";
    }
    return "unknown";
}

template <class T>
struct solve_report {
    matrix<T> x;
    /// The equation holds exactly for x (equivalently, the projector identity reproduces D).
    bool consistent = false;
    bool residual_zero = false;
    /// Equation left-hand side minus D.
    matrix<T> residual;
    std::string route;
    /// x lies in the restricted spaces (right column space of (AW)^k, left row space of
    /// (WA)^k, or both for the two-sided equation).
    bool restrictions_hold = false;
    /// x equals the composition through the Cline-type oracle.
    bool oracle_agrees = false;
    /// Axioms of the W-weighted Drazin inverse(s) used by the oracle.
    std::vector<axiom_report<T>> verification;
};

template <class T>
class inconsistent_equation : public error {
public:
    explicit inconsistent_equation(solve_report<T> report)
        : error("equation is inconsistent: the residual of A_{d,W}-based solution is nonzero"),
          report_(std::move(report)) {}
    const solve_report<T>& report() const noexcept { return report_; }

private:
    solve_report<T> report_;
};

struct solve_options {
    bool verify = true;
    bool throw_on_inconsistent = true;
    factor_routes factors{};
};

namespace detail {

template <class T>
void finish_report(solve_report<T>& rep, const matrix<T>& oracle_x, const solve_options& opt) {
    rep.residual_zero = rep.residual.is_zero();
    rep.consistent = rep.residual_zero;
    rep.oracle_agrees = rep.x == oracle_x;
    if (!rep.oracle_agrees && opt.verify) throw internal_error("Cramer route disagrees with the composition oracle");
    if (!rep.consistent && opt.throw_on_inconsistent) throw inconsistent_equation<T>(rep);
}

}  // namespace detail

/// Solves W A W X = D (A m x n, W n x m, D n x p); X = A_{d,W} D.
template <class T>
solve_report<T> solve_left(const matrix<T>& a, const matrix<T>& w, const matrix<T>& d,
                           solve_route route = solve_route::automatic, const solve_options& opt = {}) {
    detail::check_weight_shape(a, w);
    if (d.rows() != a.cols()) throw dimension_mismatch("D must have " + std::to_string(a.cols()) + " rows, got " + d.shape());
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t p = d.cols();
    const matrix<T> v = a * w;
    const matrix<T> u = w * a;
    const std::size_t r1 = rank(w);

    if (route == solve_route::automatic) {
        if (is_hermitian(v))
            route = solve_route::hermitian;
        else if (r1 == m)
            route = solve_route::weighted;
        else
            route = solve_route::drazin;
    }
    if (route == solve_route::weighted && r1 != m)
        throw route_inapplicable("route i needs W of full column rank");
    if (route == solve_route::hermitian && !is_hermitian(v)) throw route_inapplicable("route iii needs AW Hermitian");

    const unsigned k = weighted_index(a, w);
    const matrix<T> vk = pow(v, k);
    const std::size_t r = rank(vk);

    solve_report<T> rep;
    rep.route = std::string(to_string(route));
    rep.x = matrix<T>(m, p);
    switch (route) {
        case solve_route::weighted:
            if (r > 0) {
                const matrix<T> uk = pow(u, k);
                const matrix<T> big = pow(u, 2 * k + 1);
                const matrix<T> big_s = conj_transpose(big);
                const matrix<T> gram_u = big_s * big;
                const matrix<T> d_hat = big_s * uk * d;
                const matrix<T> ws = conj_transpose(w);
                const matrix<T> gram_w = ws * w;
                const matrix<T> w_hat = ws * uk;
                const auto den_w = principal_minor_sum(gram_w, r1);
                const auto den_u = principal_minor_sum(gram_u, r);
                detail::require_nonzero_denominator(den_w, "route i");
                detail::require_nonzero_denominator(den_u, "route i");
                matrix<T> left(m, n);
                for (std::size_t t = 0; t < n; ++t) {
                    const auto col = w_hat.column(t);
                    for (std::size_t i = 0; i < m; ++i)
                        left(i, t) = column_bordered_sum(gram_w, i, std::span<const T>(col), r1);
                }
                matrix<T> right(n, p);
                for (std::size_t j = 0; j < p; ++j) {
                    const auto col = d_hat.column(j);
                    for (std::size_t t = 0; t < n; ++t)
                        right(t, j) = column_bordered_sum(gram_u, t, std::span<const T>(col), r);
                }
                rep.x = detail::divide_entries(left * right, typename scalar_traits<T>::real_type(den_w * den_u));
            }
            break;
        case solve_route::drazin: rep.x = detail::drazin_square(v, opt.factors) * (a * d); break;
        case solve_route::hermitian:
            if (r > 0) {
                const matrix<T> h = pow(v, k + 2);
                const matrix<T> f = vk * a * d;
                const auto den = principal_minor_sum(h, r);
                detail::require_nonzero_denominator(den, "route iii");
                for (std::size_t j = 0; j < p; ++j) {
                    const auto col = f.column(j);
                    for (std::size_t i = 0; i < m; ++i) rep.x(i, j) = column_bordered_sum(h, i, std::span<const T>(col), r);
                }
                rep.x = detail::divide_entries(std::move(rep.x), den);
            }
            break;
        case solve_route::composition:
        case solve_route::automatic: rep.x = wdrazin_via_cline(a, w) * d; break;
    }

    rep.residual = w * a * w * rep.x - d;
    rep.restrictions_hold = in_right_column_space(vk, rep.x);
    const matrix<T> adw = wdrazin_via_cline(a, w);
    if (opt.verify) rep.verification = verify_wdrazin(a, w, adw);
    detail::finish_report(rep, matrix<T>(adw * d), opt);
    return rep;
}

/// Solves X W A W = D (A m x n, W n x m, D q x m); X = D A_{d,W}.
template <class T>
solve_report<T> solve_right(const matrix<T>& d, const matrix<T>& a, const matrix<T>& w,
                            solve_route route = solve_route::automatic, const solve_options& opt = {}) {
    detail::check_weight_shape(a, w);
    if (d.cols() != a.rows())
        throw dimension_mismatch("D must have " + std::to_string(a.rows()) + " columns, got " + d.shape());
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    const std::size_t q = d.rows();
    const matrix<T> v = a * w;
    const matrix<T> u = w * a;
    const std::size_t r1 = rank(w);

    if (route == solve_route::automatic) {
        if (is_hermitian(u))
            route = solve_route::hermitian;
        else if (r1 == n)
            route = solve_route::weighted;
        else
            route = solve_route::drazin;
    }
    if (route == solve_route::weighted && r1 != n) throw route_inapplicable("route i needs W of full row rank");
    if (route == solve_route::hermitian && !is_hermitian(u)) throw route_inapplicable("route iii needs WA Hermitian");

    const unsigned k = weighted_index(a, w);
    const matrix<T> uk = pow(u, k);
    const std::size_t r = rank(uk);

    solve_report<T> rep;
    rep.route = std::string(to_string(route));
    rep.x = matrix<T>(q, n);
    switch (route) {
        case solve_route::weighted:
            if (r > 0) {
                const matrix<T> vk = pow(v, k);
                const matrix<T> big = pow(v, 2 * k + 1);
                const matrix<T> big_s = conj_transpose(big);
                const matrix<T> gram_v = big * big_s;
                const matrix<T> d_check = d * vk * big_s;
                const matrix<T> ws = conj_transpose(w);
                const matrix<T> gram_w = w * ws;
                const matrix<T> w_check = vk * ws;
                const auto den_v = principal_minor_sum(gram_v, r);
                const auto den_w = principal_minor_sum(gram_w, r1);
                detail::require_nonzero_denominator(den_v, "route i");
                detail::require_nonzero_denominator(den_w, "route i");
                matrix<T> left(q, m);
                for (std::size_t i = 0; i < q; ++i) {
                    const auto row = d_check.row(i);
                    for (std::size_t l = 0; l < m; ++l)
                        left(i, l) = row_bordered_sum(gram_v, l, std::span<const T>(row), r);
                }
                matrix<T> right(m, n);
                for (std::size_t l = 0; l < m; ++l) {
                    const auto row = w_check.row(l);
                    for (std::size_t j = 0; j < n; ++j)
                        right(l, j) = row_bordered_sum(gram_w, j, std::span<const T>(row), r1);
                }
                rep.x = detail::divide_entries(left * right, typename scalar_traits<T>::real_type(den_v * den_w));
            }
            break;
        case solve_route::drazin: rep.x = (d * a) * detail::drazin_square(u, opt.factors); break;
        case solve_route::hermitian:
            if (r > 0) {
                const matrix<T> h = pow(u, k + 2);
                const matrix<T> g = d * a * uk;
                const auto den = principal_minor_sum(h, r);
                detail::require_nonzero_denominator(den, "route iii");
                for (std::size_t i = 0; i < q; ++i) {
                    const auto row = g.row(i);
                    for (std::size_t j = 0; j < n; ++j) rep.x(i, j) = row_bordered_sum(h, j, std::span<const T>(row), r);
                }
                rep.x = detail::divide_entries(std::move(rep.x), den);
            }
            break;
        case solve_route::composition:
        case solve_route::automatic: rep.x = d * wdrazin_via_cline(a, w); break;
    }

    rep.residual = rep.x * w * a * w - d;
    rep.restrictions_hold = in_left_row_space(uk, rep.x);
    const matrix<T> adw = wdrazin_via_cline(a, w);
    if (opt.verify) rep.verification = verify_wdrazin(a, w, adw);
    detail::finish_report(rep, matrix<T>(d * adw), opt);
    return rep;
}

/// Intermediates of the two-sided Hermitian routes.
template <class T>
struct d_vectors {
    using real_type = typename scalar_traits<T>::real_type;

    /// A D B
    matrix<T> d_tilde;
    /// (AW1)^{k1} A D B (W2B)^{k2}
    matrix<T> d_bar;
    /// Column j is d^B_{.j}: row-determinant sums of (W2B)^{k2+2} bordered by rows of d_bar.
    matrix<T> d_b;
    /// Row i is d^A_{i.}: column-determinant sums of (AW1)^{k1+2} bordered by columns of d_bar.
    matrix<T> d_a;
    unsigned k1 = 0, k2 = 0;
    std::size_t s1 = 0, s2 = 0;
    /// Minor sums of (AW1)^{k1+2} (order s1) and (W2B)^{k2+2} (order s2); only
    /// defined when the corresponding power is Hermitian, 0 otherwise.
    real_type den1{0}, den2{0};
};

namespace detail {
template <class T>
void check_two_sided_shapes(const matrix<T>& a, const matrix<T>& w1, const matrix<T>& d, const matrix<T>& b,
                            const matrix<T>& w2) {
    check_weight_shape(a, w1);
    check_weight_shape(b, w2);
    if (d.rows() != a.cols() || d.cols() != b.rows())
        throw dimension_mismatch("D must be " + std::to_string(a.cols()) + "x" + std::to_string(b.rows()) + ", got " +
                                 d.shape());
}
}  // namespace detail

template <class T>
d_vectors<T> build_d_vectors(const matrix<T>& a, const matrix<T>& w1, const matrix<T>& b, const matrix<T>& w2,
                             const matrix<T>& d) {
    detail::check_two_sided_shapes(a, w1, d, b, w2);
    d_vectors<T> out;
    const matrix<T> v = a * w1;
    const matrix<T> u = w2 * b;
    out.k1 = weighted_index(a, w1);
    out.k2 = weighted_index(b, w2);
    const matrix<T> vk = pow(v, out.k1);
    const matrix<T> uk = pow(u, out.k2);
    out.s1 = rank(vk);
    out.s2 = rank(uk);
    out.d_tilde = a * d * b;
    out.d_bar = vk * a * d * b * uk;

    const std::size_t m = a.rows();
    const std::size_t q = b.cols();
    const matrix<T> h1 = pow(v, out.k1 + 2);
    const matrix<T> h2 = pow(u, out.k2 + 2);
    out.d_b = matrix<T>(m, q);
    out.d_a = matrix<T>(m, q);
    if (out.s2 > 0)
        for (std::size_t t = 0; t < m; ++t) {
            const auto row = out.d_bar.row(t);
            for (std::size_t j = 0; j < q; ++j) out.d_b(t, j) = row_bordered_sum(h2, j, std::span<const T>(row), out.s2);
        }
    if (out.s1 > 0)
        for (std::size_t l = 0; l < q; ++l) {
            const auto col = out.d_bar.column(l);
            for (std::size_t i = 0; i < m; ++i) out.d_a(i, l) = column_bordered_sum(h1, i, std::span<const T>(col), out.s1);
        }
    if (is_hermitian(h1)) out.den1 = principal_minor_sum(h1, out.s1);
    if (is_hermitian(h2)) out.den2 = principal_minor_sum(h2, out.s2);
    return out;
}

/// Solves W1 A W1 X W2 B W2 = D (A m x n, W1 n x m, D n x p, B p x q, W2 q x p);
/// X = A_{d,W1} D B_{d,W2}.
template <class T>
solve_report<T> solve_two_sided(const matrix<T>& a, const matrix<T>& w1, const matrix<T>& d, const matrix<T>& b,
                                const matrix<T>& w2, two_sided_route route = two_sided_route::automatic,
                                const solve_options& opt = {}) {
    detail::check_two_sided_shapes(a, w1, d, b, w2);
    const matrix<T> v = a * w1;
    const matrix<T> u = w2 * b;
    const bool hermitian = is_hermitian(v) && is_hermitian(u);
    if (route == two_sided_route::automatic) route = hermitian ? two_sided_route::hermitian_db : two_sided_route::drazin;
    if ((route == two_sided_route::hermitian_db || route == two_sided_route::hermitian_da) && !hermitian)
        throw route_inapplicable("route ii needs AW1 and W2B Hermitian");

    solve_report<T> rep;
    rep.route = std::string(to_string(route));
    rep.x = matrix<T>(a.rows(), b.cols());
    switch (route) {
        case two_sided_route::drazin:
            rep.x = detail::drazin_square(v, opt.factors) * (a * d * b) * detail::drazin_square(u, opt.factors);
            break;
        case two_sided_route::hermitian_db:
        case two_sided_route::hermitian_da: {
            const d_vectors<T> dv = build_d_vectors(a, w1, b, w2, d);
            if (dv.s1 == 0 || dv.s2 == 0) break;
            detail::require_nonzero_denominator(dv.den1, "route ii");
            detail::require_nonzero_denominator(dv.den2, "route ii");
            const matrix<T> h1 = pow(v, dv.k1 + 2);
            const matrix<T> h2 = pow(u, dv.k2 + 2);
            for (std::size_t i = 0; i < rep.x.rows(); ++i)
                for (std::size_t j = 0; j < rep.x.cols(); ++j) {
                    if (route == two_sided_route::hermitian_db) {
                        const auto col = dv.d_b.column(j);
                        rep.x(i, j) = column_bordered_sum(h1, i, std::span<const T>(col), dv.s1);
                    } else {
                        const auto row = dv.d_a.row(i);
                        rep.x(i, j) = row_bordered_sum(h2, j, std::span<const T>(row), dv.s2);
                    }
                }
            rep.x = detail::divide_entries(std::move(rep.x), typename scalar_traits<T>::real_type(dv.den1 * dv.den2));
            break;
        }
        case two_sided_route::composition:
        case two_sided_route::automatic:
            rep.x = wdrazin_via_cline(a, w1) * d * wdrazin_via_cline(b, w2);
            break;
    }

    rep.residual = w1 * a * w1 * rep.x * w2 * b * w2 - d;
    const unsigned k1 = weighted_index(a, w1);
    const unsigned k2 = weighted_index(b, w2);
    rep.restrictions_hold = in_right_column_space(pow(v, k1), rep.x) && in_left_row_space(pow(u, k2), rep.x);
    const matrix<T> adw = wdrazin_via_cline(a, w1);
    const matrix<T> bdw = wdrazin_via_cline(b, w2);
    if (opt.verify) {
        rep.verification = verify_wdrazin(a, w1, adw);
        auto more = verify_wdrazin(b, w2, bdw);
        rep.verification.insert(rep.verification.end(), more.begin(), more.end());
    }
    detail::finish_report(rep, matrix<T>(adw * d * bdw), opt);
    return rep;
}

/// True iff the projector identity reproduces D for the chosen equation shape.
enum class equation_side { left, right };

template <class T>
bool check_consistency(const matrix<T>& a, const matrix<T>& w, const matrix<T>& d, equation_side side) {
    const auto [p_left, p_right] = weighted_projectors(a, w);
    if (side == equation_side::left) {
        if (d.rows() != p_left.cols()) throw dimension_mismatch("D does not fit the left equation");
        return p_left * d == d;
    }
    if (d.cols() != p_right.rows()) throw dimension_mismatch("D does not fit the right equation");
    return d * p_right == d;
}

template <class T>
bool check_consistency_two_sided(const matrix<T>& a, const matrix<T>& w1, const matrix<T>& d, const matrix<T>& b,
                                 const matrix<T>& w2) {
    detail::check_two_sided_shapes(a, w1, d, b, w2);
    const auto pa = weighted_projectors(a, w1);
    const auto pb = weighted_projectors(b, w2);
    return pa.first * d * pb.second == d;
}

}  // namespace quatgi
