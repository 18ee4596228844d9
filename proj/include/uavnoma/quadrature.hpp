#pragma once

// Thin adaptive-quadrature layer over Boost.Math (Gauss-Kronrod, tanh-sinh).
// Every analytic routine in the library goes through these entry points so
// the tolerance policy and the failure reporting live in one place.

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <string>

#include "uavnoma/errors.hpp"

namespace uavnoma::quad {

struct Tolerance {
    double abs = 1e-12;
    double rel = 1e-10;
    unsigned max_depth = 15;
};

// Adaptive G30/K61 on a finite interval. Throws NumericalError when the error
// estimate misses both the absolute and the relative target.
template <class F>
double integrate(F&& f, double a, double b, Tolerance tol = {}, const char* what = "quadrature") {
    if (a == b) {
        return 0.0;
    }
    // Integrated on [0, 1]: Boost's error estimate misbehaves on short intervals.
    const double w = b - a;
    auto g = [&](double y) { return f(a + w * y); };
    double err = 0.0;
    double l1 = 0.0;
    const double value = w * boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        g, 0.0, 1.0, tol.max_depth, tol.rel, &err, &l1);
    err *= std::abs(w);
    l1 *= std::abs(w);
    if (!std::isfinite(value)) {
        throw NumericalError(std::string(what) + ": non-finite integral", err);
    }
    if (err > tol.abs && err > tol.rel * l1) {
        throw NumericalError(std::string(what) + ": tolerance not reached", err);
    }
    return value;
}

// Double-exponential rule for integrands with algebraic endpoint
// singularities, where Gauss-Kronrod bisection converges slowly.
template <class F>
double integrate_endpoint_singular(F&& f, double a, double b, double rel = 1e-13,
                                   const char* what = "tanh-sinh quadrature") {
    if (a == b) {
        return 0.0;
    }
    static thread_local boost::math::quadrature::tanh_sinh<double> rule;
    double err = 0.0;
    double l1 = 0.0;
    const double value = rule.integrate(f, a, b, rel, &err, &l1);
    if (!std::isfinite(value)) {
        throw NumericalError(std::string(what) + ": non-finite integral", err);
    }
    if (err > 10.0 * rel * l1) {
        throw NumericalError(std::string(what) + ": tolerance not reached", err);
    }
    return value;
}

// Integral of f(u) * exp(-u) over [lo, hi] with hi allowed to be +inf. The
// exponential weight lets the tail be cut where it drops below 1e-17 of the
// head, and panels keep the integrand's curvature resolved.
template <class F>
double integrate_exp_weighted(F&& f, double lo, double hi, Tolerance tol = {},
                              const char* what = "exp-weighted quadrature") {
    constexpr double kCut = 42.0;
    constexpr double kBreaks[] = {0.0, 0.25, 1.0, 3.0, 8.0, 18.0, kCut};
    const double top = std::min(hi, kCut);
    if (!(top > lo)) {
        return 0.0;
    }
    auto weighted = [&f](double u) { return f(u) * std::exp(-u); };
    double sum = 0.0;
    double a = lo;
    for (double brk : kBreaks) {
        if (brk <= a) {
            continue;
        }
        const double b = std::min(brk, top);
        sum += integrate(weighted, a, b, tol, what);
        a = b;
        if (a >= top) {
            break;
        }
    }
    return sum;
}

}  // namespace uavnoma::quad
