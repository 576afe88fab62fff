#pragma once

#include <array>
#include <cmath>
#include <complex>

#include <Eigen/Core>

namespace s3modes {

using cdouble = std::complex<double>;

/// Quaternion q = c0 j0 + c1 j1 + c2 j2 + c3 j3 with j1 j2 = j3 (cyclic),
/// j_i^2 = -1. The coefficient type is double for points of R^4 and
/// std::complex<double> for complex quaternions, where the imaginary unit i
/// commutes with every j_mu.
template <typename T>
struct BasicQuaternion {
    std::array<T, 4> c{};

    constexpr BasicQuaternion() = default;
    constexpr BasicQuaternion(T c0, T c1, T c2, T c3) : c{c0, c1, c2, c3} {}

    static constexpr BasicQuaternion unit(int mu) {
        BasicQuaternion q;
        q.c[static_cast<std::size_t>(mu)] = T(1);
        return q;
    }
    static constexpr BasicQuaternion one() { return unit(0); }

    constexpr T& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }
    constexpr const T& operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }

    /// Quaternionic conjugate (bar): negates the j1, j2, j3 parts.
    constexpr BasicQuaternion bar() const { return {c[0], -c[1], -c[2], -c[3]}; }

    constexpr BasicQuaternion operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    constexpr BasicQuaternion& operator+=(const BasicQuaternion& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] += o.c[i];
        return *this;
    }
    constexpr BasicQuaternion& operator-=(const BasicQuaternion& o) {
        for (std::size_t i = 0; i < 4; ++i) c[i] -= o.c[i];
        return *this;
    }
    constexpr BasicQuaternion& operator*=(const T& s) {
        for (auto& x : c) x *= s;
        return *this;
    }
};

template <typename T>
constexpr BasicQuaternion<T> operator+(BasicQuaternion<T> a, const BasicQuaternion<T>& b) {
    return a += b;
}
template <typename T>
constexpr BasicQuaternion<T> operator-(BasicQuaternion<T> a, const BasicQuaternion<T>& b) {
    return a -= b;
}
template <typename T>
constexpr BasicQuaternion<T> operator*(BasicQuaternion<T> a, const T& s) {
    return a *= s;
}
template <typename T>
constexpr BasicQuaternion<T> operator*(const T& s, BasicQuaternion<T> a) {
    return a *= s;
}

/// Hamilton product.
template <typename T>
constexpr BasicQuaternion<T> operator*(const BasicQuaternion<T>& a, const BasicQuaternion<T>& b) {
    return {a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
            a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
            a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
            a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]};
}

using Quaternion = BasicQuaternion<double>;
using ComplexQuaternion = BasicQuaternion<cdouble>;

inline Quaternion quat_mul(const Quaternion& a, const Quaternion& b) { return a * b; }
inline ComplexQuaternion quat_mul(const ComplexQuaternion& a, const ComplexQuaternion& b) {
    return a * b;
}

inline ComplexQuaternion to_complex(const Quaternion& q) {
    return {q.c[0], q.c[1], q.c[2], q.c[3]};
}

/// Complex conjugation of every coefficient (star). Distinct from bar().
inline ComplexQuaternion star(const ComplexQuaternion& q) {
    return {std::conj(q.c[0]), std::conj(q.c[1]), std::conj(q.c[2]), std::conj(q.c[3])};
}

/// Symmetric bilinear scalar product <a . b>: the scalar part of
/// (a b̄ + b ā)/2, which equals sum_mu a_mu b_mu. Not Hermitian.
template <typename T>
constexpr T scalar_product(const BasicQuaternion<T>& a, const BasicQuaternion<T>& b) {
    return a.c[0] * b.c[0] + a.c[1] * b.c[1] + a.c[2] * b.c[2] + a.c[3] * b.c[3];
}

/// Same value as scalar_product, computed through quaternion products.
cdouble scalar_product_via_products(const ComplexQuaternion& a,
                                    const ComplexQuaternion& b);

/// |q|^2 = scalar part of q q̄ = sum of squared coefficients.
inline double norm2(const Quaternion& q) { return scalar_product(q, q); }

inline double max_abs_diff(const Quaternion& a, const Quaternion& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}
inline double max_abs_diff(const ComplexQuaternion& a, const ComplexQuaternion& b) {
    double m = 0.0;
    for (int i = 0; i < 4; ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

inline Eigen::Vector4d to_vector(const Quaternion& q) { return {q.c[0], q.c[1], q.c[2], q.c[3]}; }
inline Quaternion from_vector(const Eigen::Vector4d& v) { return {v[0], v[1], v[2], v[3]}; }

/// Null vector N(a, b) = (cos a, i sin b, i cos b, sin a); in quaternion form
/// (cos a + j3 sin a) + i j2 (cos b + j3 sin b).
ComplexQuaternion null_vector(double a, double b);

/// The auxiliary null quaternions alpha = 1 + i j3, beta = j1 - i j2,
/// delta = -j1 - i j2.
ComplexQuaternion aux_alpha();
ComplexQuaternion aux_beta();
ComplexQuaternion aux_delta();

}  // namespace s3modes
