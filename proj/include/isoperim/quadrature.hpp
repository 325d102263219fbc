#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim {

// Gauss-Legendre rule on [-1,1], nodes/weights by Newton iteration on P_n.
struct GaussLegendre {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendre(int n) {
        nodes.resize(n);
        weights.resize(n);
        const double pi = 3.14159265358979323846;
        for (int i = 0; i < (n + 1) / 2; ++i) {
            // Chebyshev-like initial guess.
            double x = std::cos(pi * (i + 0.75) / (n + 0.5));
            double pp = 0.0;
            for (int iter = 0; iter < 100; ++iter) {
                // Legendre recurrence up to degree n.
                double p0 = 1.0, p1 = x;
                for (int k = 2; k <= n; ++k) {
                    const double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                pp = n * (x * p1 - p0) / (x * x - 1.0);
                const double dx = p1 / pp;
                x -= dx;
                if (std::abs(dx) < 1e-16) break;
            }
            const double w = 2.0 / ((1.0 - x * x) * pp * pp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
    }
};

inline const GaussLegendre& gauss_legendre_10() {
    static const GaussLegendre rule(10);
    return rule;
}

template <class F>
double gl10(const F& f, double a, double b) {
    const GaussLegendre& r = gauss_legendre_10();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double s = 0.0;
    for (std::size_t i = 0; i < r.nodes.size(); ++i)
        s += r.weights[i] * f(mid + half * r.nodes[i]);
    return s * half;
}

struct AdaptiveOptions {
    double rel_tol = 1e-9;
    // Dyadic refinement stops here; unconverged panels raise an error.
    int max_depth = 40;
    double abs_floor = 1e-300;
};

namespace detail {

template <class F>
double adapt_panel(const F& f, double a, double b, double whole, double scale,
                   const AdaptiveOptions& opt, int depth) {
    const double m = 0.5 * (a + b);
    const double left = gl10(f, a, m);
    const double right = gl10(f, m, b);
    const double sum = left + right;
    const double err = std::abs(sum - whole);
    if (err <= opt.rel_tol * std::fmax(std::abs(sum), scale) || err <= opt.abs_floor)
        return sum;
    if (depth >= opt.max_depth)
        throw ConvergenceError("adaptive quadrature: panel did not stabilize after " +
                                   std::to_string(opt.max_depth) + " dyadic refinements",
                               err);
    return adapt_panel(f, a, m, left, scale, opt, depth + 1) +
           adapt_panel(f, m, b, right, scale, opt, depth + 1);
}

} // namespace detail

// Adaptive integral of f over [a,b]; panels are bisected until the two-level
// Gauss estimate stabilizes relative to `scale` (a magnitude hint, typically
// the running total of the full integral).
template <class F>
double integrate_adaptive(const F& f, double a, double b, double scale,
                          const AdaptiveOptions& opt = {}) {
    if (a == b) return 0.0;
    const double whole = gl10(f, a, b);
    return detail::adapt_panel(f, a, b, whole, std::fmax(scale, std::abs(whole)), opt, 0);
}

// Richardson extrapolation of samples f(1 - 2^-k), k = k0..k1, to the limit
// at step 0. Assumes an asymptotic expansion in powers of 2^-k.
inline double richardson_to_limit(const std::vector<double>& samples) {
    std::vector<double> t = samples;
    const std::size_t n = t.size();
    if (n == 0) throw RangeError("richardson_to_limit: empty sample list");
    double factor = 1.0;
    for (std::size_t j = 1; j < n; ++j) {
        factor *= 2.0;
        for (std::size_t i = n - 1; i >= j; --i) {
            t[i] = (factor * t[i] - t[i - 1]) / (factor - 1.0);
            if (i == j) break;
        }
    }
    return t[n - 1];
}

} // namespace isoperim
