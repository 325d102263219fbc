#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "isoperim/errors.hpp"

namespace isoperim {

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

// In-place radix-2 FFT, X_k = sum_j x_j e^{-2*pi*i*jk/n}. n must be a power of two.
inline void fft_inplace(std::vector<std::complex<double>>& a, bool inverse = false) {
    const std::size_t n = a.size();
    if (!is_power_of_two(n)) throw RangeError("fft: length must be a power of two");
    // Bit reversal permutation.
    for (std::size_t i = 1, j = 0; i < n; ++i) {
        std::size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    const double pi = 3.14159265358979323846;
    for (std::size_t len = 2; len <= n; len <<= 1) {
        const double ang = 2.0 * pi / static_cast<double>(len) * (inverse ? 1.0 : -1.0);
        const std::complex<double> wlen(std::cos(ang), std::sin(ang));
        for (std::size_t i = 0; i < n; i += len) {
            std::complex<double> w(1.0, 0.0);
            for (std::size_t k = 0; k < len / 2; ++k) {
                const std::complex<double> u = a[i + k];
                const std::complex<double> v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
    if (inverse)
        for (auto& z : a) z /= static_cast<double>(n);
}

inline std::vector<std::complex<double>> fft(std::vector<std::complex<double>> a) {
    fft_inplace(a, false);
    return a;
}

inline std::vector<std::complex<double>> ifft(std::vector<std::complex<double>> a) {
    fft_inplace(a, true);
    return a;
}

// Circle Hilbert transform (harmonic conjugate with zero mean) of real samples
// on a uniform periodic grid: multiplies spectrum by -i*sign(k) and kills the
// mean and Nyquist bins.
inline std::vector<double> hilbert_conjugate(const std::vector<double>& u) {
    const std::size_t n = u.size();
    std::vector<std::complex<double>> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = u[j];
    fft_inplace(a, false);
    a[0] = 0.0;
    for (std::size_t k = 1; k < n / 2; ++k) {
        a[k] *= std::complex<double>(0.0, -1.0);
        a[n - k] *= std::complex<double>(0.0, 1.0);
    }
    a[n / 2] = 0.0;
    fft_inplace(a, true);
    std::vector<double> v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = a[j].real();
    return v;
}

// Analytic completion: real boundary samples u(t_j) on the uniform grid ->
// Taylor coefficients c_0..c_N of the holomorphic c(z) with Re c = u on |z|=1
// and Im c(0) = 0.  c_0 = mean(u), c_k = 2*\hat u_k for 1 <= k <= N.
inline std::vector<std::complex<double>> analytic_completion(const std::vector<double>& u,
                                                             std::size_t order) {
    const std::size_t n = u.size();
    if (order >= n / 2) throw RangeError("analytic_completion: order must be < n/2");
    std::vector<std::complex<double>> a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = u[j];
    fft_inplace(a, false);
    std::vector<std::complex<double>> c(order + 1);
    c[0] = a[0].real() / static_cast<double>(n);
    for (std::size_t k = 1; k <= order; ++k) c[k] = 2.0 * a[k] / static_cast<double>(n);
    return c;
}

// Values of the polynomial sum c_n z^n at the m points z = r e^{2*pi*i*j/m}.
inline std::vector<std::complex<double>> eval_series_on_circle(
    const std::vector<std::complex<double>>& coeffs, double r, std::size_t m) {
    if (!is_power_of_two(m)) throw RangeError("eval_series_on_circle: m must be a power of two");
    if (coeffs.size() > m) throw RangeError("eval_series_on_circle: m too small for series order");
    std::vector<std::complex<double>> a(m, std::complex<double>(0.0, 0.0));
    double rn = 1.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) {
        a[n] = coeffs[n] * rn;
        rn *= r;
    }
    // f_j = sum_n a_n e^{+2 pi i jn/m} is an unscaled inverse transform.
    fft_inplace(a, true);
    for (auto& z : a) z *= static_cast<double>(m);
    return a;
}

} // namespace isoperim
