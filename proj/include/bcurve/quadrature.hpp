#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <vector>

namespace bcurve {

struct QuadResult {
    double value = 0;
    double error = 0; // last level increment, crude a posteriori estimate
    int levels = 0;
};

namespace detail {

// One tanh-sinh node: t -> (u, w, dist) with u = tanh((pi/2) sinh t) in (-1,1),
// w the transformed weight and dist = 1 - |u| computed without cancellation.
struct TSNode {
    double u, w, dist;
};

inline TSNode ts_node(double t) {
    const double half_pi = 1.5707963267948966;
    double s = half_pi * std::sinh(t);
    double ch = std::cosh(s);
    double w = half_pi * std::cosh(t) / (ch * ch);
    double u = std::tanh(s);
    // 1 - tanh(s) = 2 exp(-2s) / (1 + exp(-2s)) for s > 0
    double e = std::exp(-2.0 * std::fabs(s));
    double dist = 2.0 * e / (1.0 + e);
    return {u, w, dist};
}

} // namespace detail

/// Tanh-sinh (double exponential) quadrature of f over (a, b).
///
/// The integrand is called as f(x, xa, bx) where xa = x - a and bx = b - x are
/// supplied without cancellation, so inverse square-root endpoint
/// singularities can be evaluated stably arbitrarily close to the endpoints.
template <class F>
QuadResult tanh_sinh(F&& f, double a, double b, double tol = 1e-12, int max_level = 12) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    const double t_max = 6.11; // 1 - tanh((pi/2) sinh t) underflows past this
    const double tiny = std::numeric_limits<double>::min();

    auto eval = [&](double t) -> double {
        auto n = detail::ts_node(t);
        double dist = h * n.dist;
        if (dist < tiny) return 0.0;
        double x, xa, bx;
        if (n.u >= 0) {
            bx = dist;
            x = b - bx;
            xa = (x - c) + h; // = x - a, but anchored at the midpoint
        } else {
            xa = dist;
            x = a + xa;
            bx = (c - x) + h;
        }
        double v = f(x, xa, bx) * n.w;
        return std::isfinite(v) ? v : 0.0;
    };

    double step = 1.0;
    double sum = eval(0.0);
    for (double t = step; t <= t_max; t += step) sum += eval(t) + eval(-t);
    double integral = sum * step * h;

    QuadResult r{integral, std::fabs(integral), 0};
    for (int level = 1; level <= max_level; ++level) {
        step *= 0.5;
        double add = 0;
        for (double t = step; t <= t_max; t += 2 * step) add += eval(t) + eval(-t);
        double next = 0.5 * r.value + add * step * h;
        r.error = std::fabs(next - r.value);
        r.value = next;
        r.levels = level;
        if (level >= 3 && r.error <= tol * std::max(1.0, std::fabs(r.value))) break;
    }
    return r;
}

/// Convenience overload for integrands that do not need endpoint distances.
template <class F>
QuadResult tanh_sinh_plain(F&& f, double a, double b, double tol = 1e-12, int max_level = 12) {
    return tanh_sinh([&f](double x, double, double) { return f(x); }, a, b, tol, max_level);
}

} // namespace bcurve
