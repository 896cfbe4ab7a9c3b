#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "bcurve/rootfind.hpp"

// Legendre elliptic integrals (complete and incomplete, first/second/third
// kind) and the Jacobi amplitude/sn, evaluated through Carlson's symmetric
// integrals with the duplication theorem. The Carlson kernels are templated
// so the same code runs on real and complex-conjugate-root inputs.
//
// Conventions: parameter form throughout, K(delta) = int_0^{pi/2}
// dtheta / sqrt(1 - delta sin^2 theta); characteristic zeta with
// Pi(zeta, delta) = int_0^{pi/2} dtheta / ((1 - zeta sin^2 theta)
// sqrt(1 - delta sin^2 theta)).

namespace bcurve {

namespace carlson {

template <class T> inline double amp(const T& v) { return std::abs(v); }

/// R_F(x, y, z); at most one argument zero, none on the negative real axis.
template <class T>
T rf(T x, T y, T z) {
    T a0 = (x + y + z) / 3.0;
    double q = std::pow(3.0 * std::numeric_limits<double>::epsilon(), -1.0 / 6.0) *
               std::max({amp(a0 - x), amp(a0 - y), amp(a0 - z)});
    T xn = x, yn = y, zn = z, an = a0;
    double f = 1.0;
    for (int n = 0; n < 64 && q / f > amp(an); ++n) {
        T sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn);
        T lam = sx * sy + sy * sz + sz * sx;
        xn = (xn + lam) * 0.25;
        yn = (yn + lam) * 0.25;
        zn = (zn + lam) * 0.25;
        an = (an + lam) * 0.25;
        f *= 4.0;
    }
    T X = (a0 - x) / (f * an), Y = (a0 - y) / (f * an), Z = -X - Y;
    T e2 = X * Y - Z * Z, e3 = X * Y * Z;
    return (1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0) /
           std::sqrt(an);
}

/// R_C(x, y) = R_F(x, y, y).
template <class T>
T rc(T x, T y) {
    return rf(x, y, y);
}

/// R_J(x, y, z, p). Valid for arguments with nonnegative real part (at most
/// one of x, y, z zero), which covers every use in this library.
template <class T>
T rj(T x, T y, T z, T p) {
    T a0 = (x + y + z + 2.0 * p) / 5.0;
    T delta = (p - x) * (p - y) * (p - z);
    double q = std::pow(0.2 * std::numeric_limits<double>::epsilon(), -1.0 / 8.0) *
               std::max({amp(a0 - x), amp(a0 - y), amp(a0 - z), amp(a0 - p)});
    T xn = x, yn = y, zn = z, pn = p, an = a0;
    double f = 1.0, f3 = 1.0;
    T sum{};
    int n = 0;
    for (; n < 80 && q / f > amp(an); ++n) {
        T sx = std::sqrt(xn), sy = std::sqrt(yn), sz = std::sqrt(zn), sp = std::sqrt(pn);
        T lam = sx * sy + sy * sz + sz * sx;
        T dn = (sp + sx) * (sp + sy) * (sp + sz);
        T en = delta / (f3 * dn * dn);
        sum += rc<T>(T(1.0), 1.0 + en) / (f * dn);
        xn = (xn + lam) * 0.25;
        yn = (yn + lam) * 0.25;
        zn = (zn + lam) * 0.25;
        pn = (pn + lam) * 0.25;
        an = (an + lam) * 0.25;
        f *= 4.0;
        f3 *= 64.0;
    }
    T X = (a0 - x) / (f * an), Y = (a0 - y) / (f * an), Z = (a0 - z) / (f * an);
    T P = (-X - Y - Z) / 2.0;
    T e2 = X * Y + X * Z + Y * Z - 3.0 * P * P;
    T e3 = X * Y * Z + 2.0 * e2 * P + 4.0 * P * P * P;
    T e4 = (2.0 * X * Y * Z + e2 * P + 3.0 * P * P * P) * P;
    T e5 = X * Y * Z * P * P;
    T series = 1.0 - 3.0 * e2 / 14.0 + e3 / 6.0 + 9.0 * e2 * e2 / 88.0 -
               3.0 * e4 / 22.0 - 9.0 * e2 * e3 / 52.0 + 3.0 * e5 / 26.0;
    return series / (f * an * std::sqrt(an)) + 6.0 * sum;
}

template <class T>
T rd(T x, T y, T z) {
    return rj(x, y, z, z);
}

} // namespace carlson

/// K(delta), complete first kind. Requires delta < 1; stays finite up to
/// delta = 1 - 1e-12 and beyond.
inline double complete_K(double delta) {
    if (delta >= 1.0) throw std::domain_error("complete_K: delta >= 1");
    return carlson::rf(0.0, 1.0 - delta, 1.0);
}

/// E(delta), complete second kind. Requires delta <= 1.
inline double complete_E(double delta) {
    if (delta > 1.0) throw std::domain_error("complete_E: delta > 1");
    if (delta == 1.0) return 1.0;
    return carlson::rf(0.0, 1.0 - delta, 1.0) -
           delta / 3.0 * carlson::rd(0.0, 1.0 - delta, 1.0);
}

/// Pi(zeta, delta), complete third kind. zeta < 1 (negative characteristics
/// occur in the jump decomposition and are supported), delta < 1.
inline double complete_Pi(double zeta, double delta) {
    if (zeta >= 1.0) throw std::domain_error("complete_Pi: zeta >= 1");
    if (delta >= 1.0) throw std::domain_error("complete_Pi: delta >= 1");
    double k = carlson::rf(0.0, 1.0 - delta, 1.0);
    if (zeta == 0.0) return k;
    return k + zeta / 3.0 * carlson::rj(0.0, 1.0 - delta, 1.0, 1.0 - zeta);
}

/// K(phi, delta), incomplete first kind, 0 <= phi <= pi/2, delta sin^2 phi < 1.
inline double incomplete_K(double phi, double delta) {
    if (phi < 0 || phi > std::numbers::pi / 2 + 1e-15)
        throw std::domain_error("incomplete_K: phi outside [0, pi/2]");
    double s = std::sin(phi), c = std::cos(phi);
    if (delta * s * s >= 1.0) throw std::domain_error("incomplete_K: delta sin^2 phi >= 1");
    return s * carlson::rf(c * c, 1.0 - delta * s * s, 1.0);
}

/// Pi(zeta, phi, delta), incomplete third kind.
inline double incomplete_Pi(double zeta, double phi, double delta) {
    if (phi < 0 || phi > std::numbers::pi / 2 + 1e-15)
        throw std::domain_error("incomplete_Pi: phi outside [0, pi/2]");
    double s = std::sin(phi), c = std::cos(phi);
    if (delta * s * s >= 1.0 || zeta * s * s >= 1.0)
        throw std::domain_error("incomplete_Pi: argument outside domain");
    double f = s * carlson::rf(c * c, 1.0 - delta * s * s, 1.0);
    if (zeta == 0.0) return f;
    return f + zeta / 3.0 * s * s * s *
                   carlson::rj(c * c, 1.0 - delta * s * s, 1.0, 1.0 - zeta * s * s);
}

/// Jacobi amplitude, the inverse of phi -> K(phi, delta). delta < 1.
inline double jacobi_am(double u, double delta) {
    if (delta >= 1.0) throw std::domain_error("jacobi_am: delta >= 1");
    if (u == 0.0) return 0.0;
    if (delta == 0.0) return u;
    double k = complete_K(delta);
    // am(u + 2K) = am(u) + pi, am(-u) = -am(u)
    double cyc = std::round(u / (2 * k));
    double v = u - 2 * k * cyc;
    double sign = 1.0;
    if (v < 0) { v = -v; sign = -1.0; }
    double phi = std::numbers::pi / 2 * v / k; // monotone initial guess
    for (int it = 0; it < 60; ++it) {
        double g = incomplete_K(std::min(phi, std::numbers::pi / 2), delta) - v;
        double dphi = g * std::sqrt(std::max(1.0 - delta * std::sin(phi) * std::sin(phi), 0.0));
        phi -= dphi;
        if (phi < 0) phi = 0;
        if (phi > std::numbers::pi / 2) phi = std::numbers::pi / 2;
        if (std::fabs(dphi) < 1e-16 * std::max(1.0, phi)) break;
    }
    return sign * phi + std::numbers::pi * cyc;
}

inline double jacobi_sn(double u, double delta) { return std::sin(jacobi_am(u, delta)); }

} // namespace bcurve
