#pragma once

#include <array>
#include <cmath>

namespace bcurve {

struct Vec3 {
    double x = 0, y = 0, z = 0;

    Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double c) const { return {c * x, c * y, c * z}; }
    Vec3 operator/(double c) const { return {x / c, y / c, z / c}; }
    Vec3& operator+=(const Vec3& o) { x += o.x; y += o.y; z += o.z; return *this; }

    double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    Vec3 normalized() const { return *this / norm(); }
};

inline Vec3 operator*(double c, const Vec3& v) { return v * c; }

/// 3x3 matrix, row-major.
struct Mat3 {
    std::array<double, 9> a{};

    static Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    double operator()(int i, int j) const { return a[3 * i + j]; }
    double& operator()(int i, int j) { return a[3 * i + j]; }

    Vec3 col(int j) const { return {a[j], a[3 + j], a[6 + j]}; }
    void set_col(int j, const Vec3& v) { a[j] = v.x; a[3 + j] = v.y; a[6 + j] = v.z; }

    Mat3 operator*(const Mat3& o) const {
        Mat3 r;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                double s = 0;
                for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
                r(i, j) = s;
            }
        return r;
    }
    Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }
    Mat3 transposed() const {
        return {{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
    }
    double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
};

/// max |(F^T F - I)_{ij}|
inline double orthogonality_residual(const Mat3& f) {
    Mat3 g = f.transposed() * f;
    double r = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            r = std::max(r, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return r;
}

/// Project to the nearest rotation by Newton iteration on the polar factor.
inline Mat3 polar_orthonormalize(Mat3 f) {
    for (int it = 0; it < 4; ++it) {
        if (orthogonality_residual(f) < 1e-15) break;
        // X <- (X + X^{-T})/2; for near-orthogonal X, X^{-T} ~ X(2I - X^T X)
        Mat3 g = f.transposed() * f;
        Mat3 h;
        for (int i = 0; i < 9; ++i) h.a[i] = -g.a[i];
        h(0, 0) += 3; h(1, 1) += 3; h(2, 2) += 3;
        Mat3 fh = f * h;
        for (int i = 0; i < 9; ++i) f.a[i] = 0.5 * fh.a[i];
    }
    return f;
}

/// Rotation about the x-axis by angle phi.
inline Mat3 rotation_x(double phi) {
    double c = std::cos(phi), s = std::sin(phi);
    return {{1, 0, 0, 0, c, -s, 0, s, c}};
}

inline double max_abs_diff(const Mat3& a, const Mat3& b) {
    double r = 0;
    for (int i = 0; i < 9; ++i) r = std::max(r, std::abs(a.a[i] - b.a[i]));
    return r;
}

} // namespace bcurve
