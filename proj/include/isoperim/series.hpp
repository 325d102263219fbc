#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim {

// Power-series algebra on truncated Taylor coefficients (index = power).
namespace series {

using Coeffs = std::vector<std::complex<double>>;

// exp of a series, E' = c' E recurrence.
inline Coeffs exp(const Coeffs& c) {
    const std::size_t n = c.size();
    Coeffs e(n);
    e[0] = std::exp(c[0]);
    for (std::size_t k = 1; k < n; ++k) {
        std::complex<double> s(0.0, 0.0);
        for (std::size_t j = 1; j <= k; ++j)
            s += static_cast<double>(j) * c[j] * e[k - j];
        e[k] = s / static_cast<double>(k);
    }
    return e;
}

// 1/g by the convolution recurrence; g[0] must be nonzero.
inline Coeffs reciprocal(const Coeffs& g) {
    const std::size_t n = g.size();
    if (n == 0 || std::abs(g[0]) == 0.0)
        throw DegeneracyError("series reciprocal: constant term vanishes");
    Coeffs q(n);
    q[0] = 1.0 / g[0];
    for (std::size_t k = 1; k < n; ++k) {
        std::complex<double> s(0.0, 0.0);
        for (std::size_t j = 1; j <= k; ++j) s += g[j] * q[k - j];
        q[k] = -s / g[0];
    }
    return q;
}

// a/b, b[0] nonzero.
inline Coeffs divide(const Coeffs& a, const Coeffs& b) {
    const std::size_t n = std::min(a.size(), b.size());
    if (n == 0 || std::abs(b[0]) == 0.0)
        throw DegeneracyError("series divide: denominator constant term vanishes");
    Coeffs q(n);
    for (std::size_t k = 0; k < n; ++k) {
        std::complex<double> s = a[k];
        for (std::size_t j = 1; j <= k; ++j) s -= b[j] * q[k - j];
        q[k] = s / b[0];
    }
    return q;
}

inline Coeffs derivative(const Coeffs& a) {
    if (a.size() <= 1) return Coeffs{std::complex<double>(0.0, 0.0)};
    Coeffs d(a.size() - 1);
    for (std::size_t k = 1; k < a.size(); ++k) d[k - 1] = static_cast<double>(k) * a[k];
    return d;
}

// Horner evaluation at one point.
inline std::complex<double> eval(const Coeffs& a, std::complex<double> z) {
    std::complex<double> s(0.0, 0.0);
    for (std::size_t k = a.size(); k-- > 0;) s = s * z + a[k];
    return s;
}

} // namespace series
} // namespace isoperim
