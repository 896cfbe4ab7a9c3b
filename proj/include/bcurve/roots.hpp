#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>

#include "bcurve/errors.hpp"
#include "bcurve/rootfind.hpp"

// Scalar algebraic layer: the critical-circle quartic, the exceptional-locus
// cubic, the momentum relation xi(lambda, e1) and the conservation-law quartic
//   Q(t) = t^4 + 4 lambda t^3 + 4 (lambda^2 - xi^2) t^2 + 1,
// whose two positive roots e1 > e2 bound the mu-invariant.

namespace bcurve {

enum class Region { negative_type, exceptional, positive_type };

inline const char* to_string(Region r) {
    switch (r) {
        case Region::negative_type: return "negative";
        case Region::exceptional: return "exceptional";
        default: return "positive";
    }
}

/// The unique positive root eta_lambda of mu^4 + 2 lambda mu^3 - 1 = 0
/// (the mu-invariant of the critical circle).
inline double eta(double lambda) {
    auto f = [lambda](double x) { return ((x + 2 * lambda) * x * x) * x - 1.0; };
    double hi = std::max(2.0, 1.0 - 2.0 * lambda);
    while (f(hi) < 0) hi *= 2;
    double x = brent(f, 1e-12, hi, 1e-15);
    return newton_polish(f, [lambda](double t) { return 4 * t * t * t + 6 * lambda * t * t; }, x);
}

/// xi as a function of the fundamental parameters, from Q(e1) = 0.
inline double xi_of(double lambda, double e1) {
    if (e1 <= 0) throw std::domain_error("xi_of: e1 <= 0");
    double p = e1 * (e1 + 2 * lambda);
    return std::sqrt(1.0 + p * p) / (2.0 * e1);
}

/// Infimum of admissible momentum lengths, xi at the critical circle.
inline double eta_hat(double lambda) { return xi_of(lambda, eta(lambda)); }

/// Positive root u_lambda of 4 L^2 e^3 + 8 L^3 e^2 - e + 2 L for lambda < 0;
/// empty optional encodes u_lambda = +infinity for lambda >= 0.
inline std::optional<double> u_star(double lambda) {
    if (lambda >= 0) return std::nullopt;
    double l2 = lambda * lambda;
    auto f = [=](double e) { return 4 * l2 * e * e * e + 8 * l2 * lambda * e * e - e + 2 * lambda; };
    double hi = 1.0 / (2.0 * -lambda) + 1.0;
    while (f(hi) < 0) hi *= 2;
    double x = brent(f, 1e-12, hi, 1e-15);
    return newton_polish(f, [=](double e) { return 12 * l2 * e * e + 16 * l2 * lambda * e - 1; }, x);
}

struct QuarticRoots {
    double e2;
    std::complex<double> e3, e4; // e3 >= e4 when real, else conjugates, Im(e3) > 0
    bool real_pair;
};

/// Deflate Q by the known root e1 and solve the residual cubic
///   t^3 + (e1 + 4 lambda) t^2 - t/e1^2 - 1/e1,
/// whose coefficients follow from the constant term Q(0) = 1.
inline QuarticRoots quartic_roots(double lambda, double e1) {
    if (e1 <= eta(lambda))
        throw AdmissibilityError("quartic_roots: e1 <= eta_lambda");
    const double b = e1 + 4 * lambda, c = -1.0 / (e1 * e1), d = -1.0 / e1;
    auto cubic = [&](std::complex<double> t) { return ((t + b) * t + c) * t + d; };
    auto dcubic = [&](std::complex<double> t) { return (3.0 * t + 2.0 * b) * t + c; };

    // depressed form y^3 + p y + q, t = y - b/3
    double p = c - b * b / 3.0;
    double q = d - b * c / 3.0 + 2.0 * b * b * b / 27.0;
    double disc = -4 * p * p * p - 27 * q * q;
    std::complex<double> r1, r2, r3;
    if (disc > 0) {
        // three real roots, trigonometric branch
        double m = 2 * std::sqrt(-p / 3.0);
        double phi = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
        r1 = m * std::cos(phi) - b / 3.0;
        r2 = m * std::cos(phi - 2 * std::numbers::pi / 3) - b / 3.0;
        r3 = m * std::cos(phi - 4 * std::numbers::pi / 3) - b / 3.0;
    } else {
        // Cardano, one real root; extract the cube root without cancellation
        double big = std::sqrt(std::max(q * q / 4.0 + p * p * p / 27.0, 0.0));
        double u, v;
        if (q <= 0) {
            u = std::cbrt(-q / 2.0 + big);
            v = (u == 0.0) ? 0.0 : -p / (3.0 * u);
        } else {
            v = std::cbrt(-q / 2.0 - big);
            u = (v == 0.0) ? 0.0 : -p / (3.0 * v);
        }
        double y1 = u + v;
        r1 = y1 - b / 3.0;
        double im = std::sqrt(3.0) / 2.0 * std::abs(u - v);
        r2 = std::complex<double>(-y1 / 2.0 - b / 3.0, im);
        r3 = std::conj(r2);
    }
    // one Newton polish per root
    for (auto* r : {&r1, &r2, &r3}) {
        for (int it = 0; it < 2; ++it) *r -= cubic(*r) / dcubic(*r);
    }

    QuarticRoots out{};
    std::complex<double> others[2];
    int n_other = 0;
    bool have_e2 = false;
    for (auto& r : {r1, r2, r3}) {
        if (!have_e2 && std::abs(r.imag()) < 1e-12 * std::max(1.0, std::abs(r.real())) &&
            r.real() > 0) {
            out.e2 = r.real();
            have_e2 = true;
        } else if (n_other < 2) {
            others[n_other++] = r;
        }
    }
    if (!have_e2 || n_other != 2)
        throw NumericalError("quartic_roots: cubic root pattern unexpected");
    // final polish of e2 on the real cubic
    out.e2 = newton_polish([&](double t) { return ((t + b) * t + c) * t + d; },
                           [&](double t) { return (3 * t + 2 * b) * t + c; }, out.e2);
    out.real_pair = std::abs(others[0].imag()) < 1e-10 * std::max(1.0, std::abs(others[0].real()));
    if (out.real_pair) {
        double a = others[0].real(), bb = others[1].real();
        out.e3 = std::max(a, bb);
        out.e4 = std::min(a, bb);
    } else {
        out.e3 = others[0].imag() > 0 ? others[0] : others[1];
        out.e4 = std::conj(out.e3);
    }
    return out;
}

/// Region of (lambda, e1) relative to the exceptional locus, with a relative
/// tolerance on |e1 - u_lambda|.
inline Region classify(double lambda, double e1, double tol = 1e-9) {
    auto u = u_star(lambda);
    if (!u) return Region::negative_type;
    double gap = e1 - *u;
    if (std::abs(gap) <= tol * std::max(1.0, std::abs(*u))) return Region::exceptional;
    return gap < 0 ? Region::negative_type : Region::positive_type;
}

/// A point of the admissible domain P = {e1 > eta_lambda} with all derived
/// quantities of the conservation-law quartic.
struct Parameters {
    double lambda = 0;
    double e1 = 0;
    double xi = 0;
    double e2 = 0;
    std::complex<double> e3, e4;
    bool real_pair = true;
    Region region = Region::negative_type;

    bool exceptional() const { return region == Region::exceptional; }

    /// Q evaluated through the factored form (exact roots, no coefficient
    /// rounding); real part is exact for real t by conjugate symmetry.
    double q_factored(double t) const {
        return ((t - e1) * (t - e2) * ((t - e3) * (t - e4))).real();
    }

    /// 4 xi^2 t^2 - 1 >= 0 on [e2, e1]; computed via the identity
    /// 4 xi^2 t^2 - 1 = (t^2 + 2 lambda t)^2 - Q(t).
    double radial_sq(double t) const {
        double u = t * (t + 2 * lambda);
        return u * u - q_factored(t);
    }
};

inline Parameters make_parameters(double lambda, double e1, double region_tol = 1e-9) {
    Parameters p;
    p.lambda = lambda;
    p.e1 = e1;
    double et = eta(lambda);
    if (!(e1 > et))
        throw AdmissibilityError("make_parameters: e1 <= eta_lambda (not admissible)");
    p.xi = xi_of(lambda, e1);
    auto qr = quartic_roots(lambda, e1);
    p.e2 = qr.e2;
    p.e3 = qr.e3;
    p.e4 = qr.e4;
    p.real_pair = qr.real_pair;
    p.region = classify(lambda, e1, region_tol);
    return p;
}

} // namespace bcurve
