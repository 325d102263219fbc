#pragma once

// Test-side oracles, deliberately independent of the library's quadrature
// path: Romberg (trapezoid + Richardson) integration, a three-point circle
// fit, and brute-force helpers.

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "isoperim/vec2.hpp"

namespace oracle {

// Romberg integration on [a,b]; `levels` trapezoid halvings.
template <class F>
double romberg(const F& f, double a, double b, int levels = 16) {
    std::vector<std::vector<double>> t(levels + 1);
    double h = b - a;
    t[0].push_back(0.5 * h * (f(a) + f(b)));
    for (int i = 1; i <= levels; ++i) {
        h *= 0.5;
        double s = 0.0;
        const long n = 1L << (i - 1);
        for (long k = 0; k < n; ++k) s += f(a + (2 * k + 1) * h);
        t[i].push_back(0.5 * t[i - 1][0] + h * s);
        double factor = 1.0;
        for (int j = 1; j <= i; ++j) {
            factor *= 4.0;
            t[i].push_back(t[i][j - 1] + (t[i][j - 1] - t[i - 1][j - 1]) / (factor - 1.0));
        }
    }
    return t[levels].back();
}

// Periodic trapezoid rule over [0, 2pi) (spectrally accurate for smooth
// periodic integrands).
template <class F>
double periodic_trapezoid(const F& f, int n = 4096) {
    const double two_pi = 6.28318530717958647692;
    double s = 0.0;
    for (int j = 0; j < n; ++j) s += f(two_pi * j / n);
    return s * two_pi / n;
}

struct Circle {
    isoperim::Vec2 center;
    double radius = 0.0;
};

// Circumcircle through three points.
inline Circle fit_circle(const isoperim::Vec2& p1, const isoperim::Vec2& p2,
                         const isoperim::Vec2& p3) {
    const double ax = p1.x, ay = p1.y, bx = p2.x, by = p2.y, cx = p3.x, cy = p3.y;
    const double d = 2.0 * (ax * (by - cy) + bx * (cy - ay) + cx * (ay - by));
    const double ux = ((ax * ax + ay * ay) * (by - cy) + (bx * bx + by * by) * (cy - ay) +
                       (cx * cx + cy * cy) * (ay - by)) /
                      d;
    const double uy = ((ax * ax + ay * ay) * (cx - bx) + (bx * bx + by * by) * (ax - cx) +
                       (cx * cx + cy * cy) * (bx - ax)) /
                      d;
    Circle c;
    c.center = isoperim::Vec2{ux, uy};
    c.radius = std::hypot(ax - ux, ay - uy);
    return c;
}

} // namespace oracle
