#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "isoperim/fft.hpp"
#include "isoperim/geometry.hpp"
#include "isoperim/measures.hpp"
#include "isoperim/series.hpp"

namespace isoperim {

// Radius function of a domain star-shaped about the origin (fourier_star
// centered there, or any disk with the origin strictly inside).
class RadialBoundary {
public:
    explicit RadialBoundary(const Domain& d) {
        if (d.is_fourier_star()) {
            const FourierStar& g = d.as_fourier_star();
            if (g.center.norm() != 0.0)
                throw PreconditionError("RadialBoundary: fourier_star must be centered at the origin");
            star_ = g;
            is_star_ = true;
            min_radius_ = g.min_radius();
            return;
        }
        if (d.is_disk()) {
            const Disk& g = d.as_disk();
            offset_ = g.center.norm();
            phase_ = g.center.angle();
            radius_ = g.radius;
            if (offset_ >= radius_)
                throw PreconditionError("RadialBoundary: origin must lie strictly inside the disk");
            min_radius_ = radius_ - offset_;
            return;
        }
        throw PreconditionError("RadialBoundary: domain must be a disk or fourier_star about 0");
    }

    double radius(double theta) const {
        if (is_star_) return star_.radius(theta);
        if (offset_ == 0.0) return radius_;
        const double d = theta - phase_;
        const double s = offset_ * std::sin(d);
        return offset_ * std::cos(d) + std::sqrt(radius_ * radius_ - s * s);
    }

    double radius_deriv(double theta) const {
        if (is_star_) return star_.radius_deriv(theta);
        if (offset_ == 0.0) return 0.0;
        const double d = theta - phase_;
        const double s = offset_ * std::sin(d);
        const double root = std::sqrt(radius_ * radius_ - s * s);
        return -offset_ * std::sin(d) * (1.0 + offset_ * std::cos(d) / root);
    }

    double min_radius() const { return min_radius_; }

private:
    bool is_star_ = false;
    FourierStar star_;
    double offset_ = 0.0, phase_ = 0.0, radius_ = 1.0;
    double min_radius_ = 0.0;
};

// Truncated series data of the map h: B_1 -> D, h(0) = 0, h'(0) > 0, and of
// the derived quantities G = h/z, Q = 1/G, lambda = Q(0), Laurent tail a_n.
struct ConformalData {
    std::size_t order = 0;            // truncation order N
    series::Coeffs h;                 // h_0..h_N (h_0 = 0)
    series::Coeffs big_g;             // G_0..G_N
    series::Coeffs q;                 // Q_0..Q_N
    Complex lambda;                   // Q(0) = 1/h'(0)
    std::vector<Complex> a;           // a_n = Q_{n+1}, n = 0..N-1
    double theodorsen_residual = 0.0; // final sup-norm update of the correspondence
    double boundary_fit_residual = 0.0; // sup | |h(e^it)| - rho_D(arg h(e^it)) |

    // Sum_{n>=1} n |a_n|^2, the coefficient energy that vanishes exactly for disks.
    double tail_energy() const {
        double s = 0.0;
        for (std::size_t n = 1; n < a.size(); ++n) s += static_cast<double>(n) * std::norm(a[n]);
        return s;
    }
};

// Theodorsen boundary-correspondence iteration: solves
// theta(t) = t + H[log rho(theta(.))](t) with the FFT circle Hilbert
// transform at 4N points, then recovers h = z exp(c) by analytic completion.
inline ConformalData riemann_map(const Domain& d, std::size_t n_order, double tol = 1e-12) {
    if (n_order < 64 || !is_power_of_two(n_order))
        throw PreconditionError("riemann_map: N must be a power of two >= 64");
    const RadialBoundary rho(d);
    if (!(rho.min_radius() > 0.0))
        throw PreconditionError("riemann_map: radius function must be positive");

    const std::size_t m = 4 * n_order;
    std::vector<double> theta(m), u(m);
    for (std::size_t j = 0; j < m; ++j)
        theta[j] = kTwoPi * static_cast<double>(j) / static_cast<double>(m);

    double residual = std::numeric_limits<double>::infinity();
    double relax = 1.0;
    bool converged = false;
    for (int iter = 0; iter < 200; ++iter) {
        for (std::size_t j = 0; j < m; ++j) u[j] = std::log(rho.radius(theta[j]));
        const std::vector<double> v = hilbert_conjugate(u);
        double step = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            const double target = kTwoPi * static_cast<double>(j) / static_cast<double>(m) + v[j];
            step = std::fmax(step, std::abs(target - theta[j]));
            theta[j] += relax * (target - theta[j]);
        }
        if (step > residual) relax = std::fmax(0.125, 0.5 * relax);
        residual = step;
        if (residual < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw ConvergenceError("riemann_map: Theodorsen iteration did not converge", residual);

    for (std::size_t j = 0; j < m; ++j) u[j] = std::log(rho.radius(theta[j]));
    const series::Coeffs c = analytic_completion(u, n_order);

    ConformalData cd;
    cd.order = n_order;
    cd.theodorsen_residual = residual;
    cd.big_g = series::exp(c); // G = exp(c), G(0) = h'(0) > 0
    cd.h.assign(n_order + 1, Complex(0.0, 0.0));
    for (std::size_t k = 1; k <= n_order; ++k) cd.h[k] = cd.big_g[k - 1];
    cd.q = series::reciprocal(cd.big_g);
    cd.lambda = cd.q[0];
    cd.a.assign(n_order, Complex(0.0, 0.0));
    for (std::size_t n = 0; n + 1 <= n_order; ++n) cd.a[n] = cd.q[n + 1];

    // Degeneracy and boundary-fit diagnostics on the unit circle.
    const auto gv = eval_series_on_circle(cd.big_g, 1.0, m);
    double min_g = std::numeric_limits<double>::infinity();
    for (const Complex& z : gv) min_g = std::fmin(min_g, std::abs(z));
    if (min_g < 1e-8)
        throw DegeneracyError("riemann_map: G vanishes (to tolerance) on the closed disk");
    const auto hv = eval_series_on_circle(cd.h, 1.0, m);
    double fit = 0.0;
    for (const Complex& z : hv)
        fit = std::fmax(fit, std::abs(std::abs(z) - rho.radius(std::arg(z))));
    cd.boundary_fit_residual = fit;
    return cd;
}

// A_r = pi (|lambda|^2 / r^2 - sum_{n>=1} n |a_n|^2 r^{2n}), the shoelace area
// of the curve g(r e^{-it}).
inline double area_series(const ConformalData& cd, double r) {
    if (!(r > 0.0 && r < 1.0)) throw RangeError("area_series: r must be in (0,1)");
    double tail = 0.0;
    const double r2 = r * r;
    double rpow = 1.0;
    for (std::size_t n = 1; n < cd.a.size(); ++n) {
        rpow *= r2;
        tail += static_cast<double>(n) * std::norm(cd.a[n]) * rpow;
    }
    return kPi * (std::norm(cd.lambda) / r2 - tail);
}

namespace detail {

// Values of g = lambda/z + P and g' on |z| = r at m equispaced points.
struct GOnCircle {
    std::vector<Complex> g;
    std::vector<Complex> gprime;
};

inline GOnCircle eval_g_on_circle(const ConformalData& cd, double r, std::size_t m) {
    series::Coeffs p_coef(cd.a.begin(), cd.a.end());
    series::Coeffs dp_coef = series::derivative(p_coef);
    const auto pv = eval_series_on_circle(p_coef, r, m);
    const auto dpv = eval_series_on_circle(dp_coef, r, m);
    GOnCircle out;
    out.g.resize(m);
    out.gprime.resize(m);
    for (std::size_t j = 0; j < m; ++j) {
        const double t = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
        const Complex z = std::polar(r, t);
        out.g[j] = cd.lambda / z + pv[j];
        out.gprime[j] = -cd.lambda / (z * z) + dpv[j];
    }
    return out;
}

} // namespace detail

// S_r = r \int_0^{2pi} |g'(re^{it})| |g(re^{it})|^p dt by the trapezoid rule.
inline double weighted_perimeter_series(const ConformalData& cd, double p, double r) {
    if (!(r > 0.0 && r < 1.0)) throw RangeError("weighted_perimeter_series: r must be in (0,1)");
    const std::size_t m = 4 * cd.order;
    const auto vals = detail::eval_g_on_circle(cd, r, m);
    double s = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        s += std::abs(vals.gprime[j]) * std::pow(std::abs(vals.g[j]), p);
    return r * s * kTwoPi / static_cast<double>(m);
}

struct CauchyBound {
    double lambda_power = 0.0;   // |lambda|^{p+1}
    double circle_average = 0.0; // (r^{p+1}/2pi) S_r
    double cauchy_residual = 0.0; // | |mean tau| - |lambda|^{p+1} |
};

// Cauchy mean-value check: tau = z^2 g' exp(p phi) with Q = exp(phi); the
// circle mean of tau has modulus |lambda|^{p+1}, bounded by the integral mean
// of |tau|.
inline CauchyBound cauchy_lambda_bound(const ConformalData& cd, double p, double r) {
    if (!(r > 0.0 && r < 1.0)) throw RangeError("cauchy_lambda_bound: r must be in (0,1)");
    const std::size_t m = 4 * cd.order;
    // Q must not vanish on |z| <= r: sample modulus and winding.
    const auto qv = eval_series_on_circle(cd.q, r, m);
    double min_q = std::numeric_limits<double>::infinity(), max_q = 0.0;
    for (const Complex& z : qv) {
        min_q = std::fmin(min_q, std::abs(z));
        max_q = std::fmax(max_q, std::abs(z));
    }
    if (min_q < 1e-12 * max_q)
        throw DegeneracyError("cauchy_lambda_bound: Q vanishes (to tolerance) on |z| = r");
    double winding = 0.0;
    for (std::size_t j = 0; j < m; ++j)
        winding += std::arg(qv[(j + 1) % m] / qv[j]);
    if (std::lround(winding / kTwoPi) != 0)
        throw DegeneracyError(
            "cauchy_lambda_bound: Q winds around zero, no holomorphic logarithm");

    // phi = log Q via termwise antiderivative of Q'/Q; phi(0) = principal log lambda.
    const series::Coeffs w = series::divide(series::derivative(cd.q), cd.q);
    series::Coeffs phi(cd.order + 1, Complex(0.0, 0.0));
    phi[0] = std::log(cd.lambda);
    for (std::size_t n = 1; n <= cd.order && n - 1 < w.size(); ++n)
        phi[n] = w[n - 1] / static_cast<double>(n);

    // u = z^2 g' = z Q' - Q.
    series::Coeffs u(cd.order + 1);
    for (std::size_t n = 0; n <= cd.order; ++n)
        u[n] = (static_cast<double>(n) - 1.0) * cd.q[n];

    const auto uv = eval_series_on_circle(u, r, m);
    const auto phiv = eval_series_on_circle(phi, r, m);
    Complex mean(0.0, 0.0);
    double mean_abs = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
        const Complex tau = uv[j] * std::exp(p * phiv[j]);
        mean += tau;
        mean_abs += std::abs(tau);
    }
    mean /= static_cast<double>(m);
    mean_abs /= static_cast<double>(m);

    CauchyBound out;
    out.lambda_power = std::pow(std::abs(cd.lambda), p + 1.0);
    // |u(re^{it})| |Q(re^{it})|^p = r^{p+2} |g'| |g|^p, so this mean already
    // carries the r^{p+1}/2pi normalization of S_r.
    out.circle_average = mean_abs;
    out.cauchy_residual = std::abs(std::abs(mean) - out.lambda_power);
    return out;
}

struct ProofReplayReport {
    double p = 0.0;
    std::vector<double> r_values;
    std::vector<double> a_r;
    std::vector<double> s_r;
    Complex lambda;
    double area_limit = 0.0;      // Richardson-extrapolated lim A_r
    double perimeter_limit = 0.0; // Richardson-extrapolated lim S_r
    double chain[3] = {0.0, 0.0, 0.0}; // (|Omega|/pi)^{(p+1)/2}, |lambda|^{p+1}, perimeter/2pi
    double tail_energy = 0.0;
    double theodorsen_residual = 0.0;
    double refit_residual = 0.0;
};

// Full numerical replay of the conformal proof for a star domain containing
// the origin: inversion of the complement, Riemann map of the image, area and
// weighted-perimeter limits along r = 1 - 2^-k, and the middle term
// |lambda|^{p+1}.
inline ProofReplayReport replay_proof(const Domain& omega, double p, std::size_t n_order,
                                      double tol = 1e-12) {
    if (contains_origin(omega) != OriginLocation::inside)
        throw PreconditionError("replay_proof: the origin must lie inside the domain");
    const InvertedDomain inverted = invert_complement(omega);
    const ConformalData cd = riemann_map(inverted.domain, n_order, tol);

    ProofReplayReport rep;
    rep.p = p;
    rep.lambda = cd.lambda;
    rep.tail_energy = cd.tail_energy();
    rep.theodorsen_residual = cd.theodorsen_residual;
    rep.refit_residual = inverted.refit_residual;
    for (int k = 4; k <= 12; ++k) {
        const double r = 1.0 - std::ldexp(1.0, -k);
        rep.r_values.push_back(r);
        rep.a_r.push_back(area_series(cd, r));
        rep.s_r.push_back(weighted_perimeter_series(cd, p, r));
    }
    rep.area_limit = richardson_to_limit(rep.a_r);
    rep.perimeter_limit = richardson_to_limit(rep.s_r);
    rep.chain[0] = std::pow(rep.area_limit / kPi, 0.5 * (p + 1.0));
    rep.chain[1] = std::pow(std::abs(cd.lambda), p + 1.0);
    rep.chain[2] = rep.perimeter_limit / kTwoPi;
    return rep;
}

} // namespace isoperim
