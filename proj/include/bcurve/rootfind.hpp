#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

namespace bcurve {

/// Brent's method on a bracketing interval [a, b] with f(a) f(b) <= 0.
/// Returns the root to |interval| <= 2 eps |b| + tol.
template <class F>
double brent(F&& f, double a, double b, double tol = 1e-14, int max_iter = 200) {
    double fa = f(a), fb = f(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if ((fa > 0) == (fb > 0))
        throw std::invalid_argument("brent: endpoints do not bracket a root");
    double c = a, fc = fa, d = b - a, e = d;
    const double eps = std::numeric_limits<double>::epsilon();
    for (int it = 0; it < max_iter; ++it) {
        if ((fb > 0) == (fc > 0)) { c = a; fc = fa; d = b - a; e = d; }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        double xm = 0.5 * (c - b);
        double tol1 = 2 * eps * std::fabs(b) + 0.5 * tol;
        if (std::fabs(xm) <= tol1 || fb == 0) return b;
        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            double s = fb / fa, p, q;
            if (a == c) {
                p = 2 * xm * s;
                q = 1 - s;
            } else {
                double r = fb / fc;
                q = fa / fc;
                p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1));
                q = (q - 1) * (r - 1) * (s - 1);
            }
            if (p > 0) q = -q;
            p = std::fabs(p);
            if (2 * p < std::min(3 * xm * q - std::fabs(tol1 * q), std::fabs(e * q))) {
                e = d; d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        b += (std::fabs(d) > tol1) ? d : (xm > 0 ? tol1 : -tol1);
        fb = f(b);
    }
    return b;
}

/// Expand [lo, hi] upward until f changes sign; f(lo) must be nonzero.
template <class F>
std::pair<double, double> bracket_upward(F&& f, double lo, double hi, int max_doublings = 200) {
    double flo = f(lo);
    for (int i = 0; i < max_doublings; ++i) {
        if ((f(hi) > 0) != (flo > 0)) return {lo, hi};
        lo = hi;
        flo = f(lo);
        hi *= 2;
    }
    throw std::runtime_error("bracket_upward: no sign change found");
}

/// A few Newton steps to polish a root already known to ~sqrt(eps).
template <class F, class DF>
double newton_polish(F&& f, DF&& df, double x, int steps = 3) {
    for (int i = 0; i < steps; ++i) {
        double d = df(x);
        if (d == 0) break;
        double dx = f(x) / d;
        x -= dx;
        if (std::fabs(dx) <= std::numeric_limits<double>::epsilon() * std::fabs(x)) break;
    }
    return x;
}

} // namespace bcurve
