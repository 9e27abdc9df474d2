#pragma once

#include "errors.hpp"
#include "rational.hpp"

#include <utility>

namespace quatgi {

/// q = a0 + a1 i + a2 j + a3 k over an exact real field, with the Hamilton convention
/// ij = k, jk = i, ki = j (so ijk = -1).
template <class Real>
class basic_quaternion {
public:
    using real_type = Real;

    basic_quaternion() : a0_(0), a1_(0), a2_(0), a3_(0) {}
    basic_quaternion(Real a0) : a0_(std::move(a0)), a1_(0), a2_(0), a3_(0) {}
    basic_quaternion(int a0) : a0_(a0), a1_(0), a2_(0), a3_(0) {}
    basic_quaternion(Real a0, Real a1, Real a2, Real a3)
        : a0_(std::move(a0)), a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)) {}

    static basic_quaternion i() { return {Real(0), Real(1), Real(0), Real(0)}; }
    static basic_quaternion j() { return {Real(0), Real(0), Real(1), Real(0)}; }
    static basic_quaternion k() { return {Real(0), Real(0), Real(0), Real(1)}; }

    const Real& real() const noexcept { return a0_; }
    const Real& i_part() const noexcept { return a1_; }
    const Real& j_part() const noexcept { return a2_; }
    const Real& k_part() const noexcept { return a3_; }

    bool is_zero() const { return a0_ == 0 && a1_ == 0 && a2_ == 0 && a3_ == 0; }
    bool is_real() const { return a1_ == 0 && a2_ == 0 && a3_ == 0; }

    basic_quaternion conj() const { return {a0_, -a1_, -a2_, -a3_}; }

    Real norm_sq() const { return a0_ * a0_ + a1_ * a1_ + a2_ * a2_ + a3_ * a3_; }

    basic_quaternion inverse() const {
        const Real n = norm_sq();
        if (n == 0) throw zero_divisor();
        return {a0_ / n, -a1_ / n, -a2_ / n, -a3_ / n};
    }

    basic_quaternion operator-() const { return {-a0_, -a1_, -a2_, -a3_}; }

    basic_quaternion& operator+=(const basic_quaternion& o) {
        a0_ += o.a0_;
        a1_ += o.a1_;
        a2_ += o.a2_;
        a3_ += o.a3_;
        return *this;
    }
    basic_quaternion& operator-=(const basic_quaternion& o) {
        a0_ -= o.a0_;
        a1_ -= o.a1_;
        a2_ -= o.a2_;
        a3_ -= o.a3_;
        return *this;
    }
    basic_quaternion& operator*=(const basic_quaternion& o) { return *this = *this * o; }

    friend basic_quaternion operator+(basic_quaternion a, const basic_quaternion& b) { return a += b; }
    friend basic_quaternion operator-(basic_quaternion a, const basic_quaternion& b) { return a -= b; }

    // Hamilton product; the left operand's components multiply from the left.
    friend basic_quaternion operator*(const basic_quaternion& p, const basic_quaternion& q) {
        return {p.a0_ * q.a0_ - p.a1_ * q.a1_ - p.a2_ * q.a2_ - p.a3_ * q.a3_,
                p.a0_ * q.a1_ + p.a1_ * q.a0_ + p.a2_ * q.a3_ - p.a3_ * q.a2_,
                p.a0_ * q.a2_ - p.a1_ * q.a3_ + p.a2_ * q.a0_ + p.a3_ * q.a1_,
                p.a0_ * q.a3_ + p.a1_ * q.a2_ - p.a2_ * q.a1_ + p.a3_ * q.a0_};
    }

    // Real scalars are central, so the side does not matter.
    friend basic_quaternion operator*(const Real& s, const basic_quaternion& q) {
        return {s * q.a0_, s * q.a1_, s * q.a2_, s * q.a3_};
    }
    friend basic_quaternion operator*(const basic_quaternion& q, const Real& s) { return s * q; }
    friend basic_quaternion operator/(const basic_quaternion& q, const Real& s) {
        if (s == 0) throw zero_divisor();
        return {q.a0_ / s, q.a1_ / s, q.a2_ / s, q.a3_ / s};
    }

    friend bool operator==(const basic_quaternion& a, const basic_quaternion& b) {
        return a.a0_ == b.a0_ && a.a1_ == b.a1_ && a.a2_ == b.a2_ && a.a3_ == b.a3_;
    }

private:
    Real a0_, a1_, a2_, a3_;
};

using quaternion = basic_quaternion<rational>;

/// Uniform access to the star-ring structure the matrix algorithms need. Specialized for
/// exact reals (conj is the identity) and for quaternions over them.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<rational> {
    using real_type = rational;
    static rational conj(const rational& x) { return x; }
    static bool is_zero(const rational& x) { return x == 0; }
    static rational inverse(const rational& x) {
        if (x == 0) throw zero_divisor();
        return rational(1) / x;
    }
    static bool is_real(const rational&) { return true; }
    static const rational& real_part(const rational& x) { return x; }
    static rational from_real(const rational& x) { return x; }
};

template <class Real>
struct scalar_traits<basic_quaternion<Real>> {
    using real_type = Real;
    using value_type = basic_quaternion<Real>;
    static value_type conj(const value_type& x) { return x.conj(); }
    static bool is_zero(const value_type& x) { return x.is_zero(); }
    static value_type inverse(const value_type& x) { return x.inverse(); }
    static bool is_real(const value_type& x) { return x.is_real(); }
    static const Real& real_part(const value_type& x) { return x.real(); }
    static value_type from_real(const Real& x) { return value_type(x); }
};

template <class Real>
basic_quaternion<Real> conj(const basic_quaternion<Real>& q) {
    return q.conj();
}

template <class Real>
Real norm_sq(const basic_quaternion<Real>& q) {
    return q.norm_sq();
}

template <class Real>
basic_quaternion<Real> inverse(const basic_quaternion<Real>& q) {
    return q.inverse();
}

}  // namespace quatgi
