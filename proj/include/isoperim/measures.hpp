#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "isoperim/geometry.hpp"

namespace isoperim {

// Exponent bundle: p weights the perimeter density |x|^p, q the volume
// density |x|^q, beta the Green's-function estimate.
struct WeightParams {
    double p = 0.0;  // perimeter exponent, p > -1 near the origin (p = -1 allowed away from it)
    double q = 0.0;  // volume exponent, q > -2
    double beta = 0.0; // Green exponent, beta <= 2
};

enum class Verdict { holds, fails, out_of_hypothesis };

inline const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::holds: return "holds";
        case Verdict::fails: return "fails";
        case Verdict::out_of_hypothesis: return "out_of_hypothesis";
    }
    return "?";
}

inline const char* to_string(OriginLocation loc) {
    switch (loc) {
        case OriginLocation::inside: return "inside";
        case OriginLocation::on_boundary: return "on_boundary";
        case OriginLocation::outside: return "outside";
    }
    return "?";
}

struct HypothesisFlags {
    bool connected = true;
    OriginLocation origin = OriginLocation::inside;
    bool p_in_range = true; // p >= -1
};

// Both sides of (|Omega|/pi)^{(p+1)/2} <= (1/2pi) \int_{dOmega} |x|^p dsigma.
struct DeficitReport {
    double lhs = 0.0;
    double rhs = 0.0;
    double deficit = 0.0; // rhs - lhs
    double p = 0.0;
    HypothesisFlags hypothesis;
    Verdict verdict = Verdict::holds;
    int quad_order = 0;
};

namespace detail {

inline std::vector<int> piece_panel_counts(const std::vector<BoundaryPiece>& pieces, int order) {
    std::vector<int> counts(pieces.size(), order);
    std::vector<int> per_component;
    for (const BoundaryPiece& p : pieces) {
        if (static_cast<std::size_t>(p.component) >= per_component.size())
            per_component.resize(p.component + 1, 0);
        per_component[p.component]++;
    }
    for (std::size_t i = 0; i < pieces.size(); ++i)
        if (per_component[pieces[i].component] > 1)
            counts[i] = std::max(1, order / per_component[pieces[i].component]);
    return counts;
}

// Adaptive composite integral of f over all boundary pieces.
template <class F>
double integrate_boundary(const std::vector<BoundaryPiece>& pieces, int order, const F& f,
                          double rel_tol = 1e-10) {
    const auto counts = piece_panel_counts(pieces, order);
    // First pass: crude magnitude for the relative-stabilization scale.
    double crude = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const BoundaryPiece& p = pieces[i];
        const double h = (p.t1 - p.t0) / counts[i];
        for (int k = 0; k < counts[i]; ++k)
            crude += std::abs(gl10([&](double t) { return f(p, t); }, p.t0 + k * h, p.t0 + (k + 1) * h));
    }
    AdaptiveOptions opt;
    opt.rel_tol = rel_tol;
    double total = 0.0;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const BoundaryPiece& p = pieces[i];
        const double h = (p.t1 - p.t0) / counts[i];
        for (int k = 0; k < counts[i]; ++k)
            total += integrate_adaptive([&](double t) { return f(p, t); }, p.t0 + k * h,
                                        p.t0 + (k + 1) * h, crude, opt);
    }
    return total;
}

} // namespace detail

// \int_{dOmega} |x|^p dsigma. Panels near the origin are bisected dyadically
// until the estimate stabilizes (hard cap, then a convergence error).
inline double weighted_perimeter(const Domain& d, double p, int order = 64) {
    if (order < 16) throw PreconditionError("weighted_perimeter: order must be >= 16");
    if (p < 0.0) {
        const OriginLocation loc = contains_origin(d);
        if (loc == OriginLocation::on_boundary && p <= -1.0)
            throw DivergenceError(
                "weighted_perimeter: p <= -1 with the origin on the boundary diverges");
    }
    const auto pieces = boundary_pieces(d);
    return detail::integrate_boundary(pieces, order, [p](const BoundaryPiece& piece, double t) {
        const Vec2 z = piece.point(t);
        const double speed = piece.tangent(t).norm();
        if (p == 0.0) return speed;
        return std::pow(z.norm(), p) * speed;
    });
}

// \int_Omega |x|^q dx via the boundary flux of |x|^q x/(q+2); reduces to the
// polar radial closed form for star domains about the origin and to the
// triangulated polar decomposition for polygons.
inline double weighted_volume(const Domain& d, double q, int order = 64) {
    if (q <= -2.0) throw DivergenceError("weighted_volume: q <= -2 diverges");
    if (order < 16) throw PreconditionError("weighted_volume: order must be >= 16");
    const auto pieces = boundary_pieces(d);
    const double flux = detail::integrate_boundary(
        pieces, order, [q](const BoundaryPiece& piece, double t) {
            const Vec2 z = piece.point(t);
            const double c = cross(z, piece.tangent(t));
            if (c == 0.0) return 0.0;
            if (q == 0.0) return c;
            return std::pow(z.norm(), q) * c;
        });
    return flux / (q + 2.0);
}

// DeficitReport for the main inequality. `tol` is the slack below zero that
// still counts as "holds" (quadrature noise allowance).
inline DeficitReport deficit(const Domain& d, double p, double tol = 1e-9, int order = 64) {
    DeficitReport rep;
    rep.p = p;
    rep.quad_order = order;
    rep.hypothesis.connected = d.connected();
    rep.hypothesis.origin = contains_origin(d);
    rep.hypothesis.p_in_range = (p >= -1.0);
    rep.lhs = std::pow(area(d) / kPi, 0.5 * (p + 1.0));
    rep.rhs = weighted_perimeter(d, p, order) / kTwoPi;
    rep.deficit = rep.rhs - rep.lhs;
    const bool needs_origin = p < 0.0;
    const bool in_hypothesis =
        rep.hypothesis.p_in_range &&
        (!needs_origin ||
         (rep.hypothesis.connected && rep.hypothesis.origin == OriginLocation::inside));
    if (!in_hypothesis)
        rep.verdict = Verdict::out_of_hypothesis;
    else
        rep.verdict = rep.deficit >= -tol ? Verdict::holds : Verdict::fails;
    return rep;
}

// The three middle quantities of the Jensen-convexity route for star domains,
// t1 = 2 pi R^{p+1} <= t2 = \int rho^{p+1} <= t3 = \int rho^p sqrt(rho'^2+rho^2).
struct JensenChain {
    double t1 = 0.0;
    double t2 = 0.0;
    double t3 = 0.0;
};

inline JensenChain jensen_chain(const Domain& d, double p, int order = 64) {
    if (p < 1.0) throw PreconditionError("jensen_chain: requires p >= 1");
    const FourierStar* star = nullptr;
    FourierStar disk_as_star;
    if (d.is_fourier_star()) {
        star = &d.as_fourier_star();
        if (star->center.norm() != 0.0)
            throw PreconditionError("jensen_chain: star must be centered at the origin");
    } else if (d.is_disk() && d.as_disk().center.norm() == 0.0) {
        disk_as_star = FourierStar{Vec2{0, 0}, d.as_disk().radius, {}, {}};
        star = &disk_as_star;
    } else {
        throw PreconditionError("jensen_chain: domain must be star-shaped about the origin");
    }
    JensenChain chain;
    chain.t1 = kTwoPi * std::pow(equivalent_radius(d), p + 1.0);
    AdaptiveOptions opt;
    const double h = kTwoPi / order;
    double t2 = 0.0, t3 = 0.0;
    for (int k = 0; k < order; ++k) {
        const double lo = k * h, hi = (k + 1) * h;
        t2 += integrate_adaptive(
            [&](double th) { return std::pow(star->radius(th), p + 1.0); }, lo, hi, chain.t1, opt);
        t3 += integrate_adaptive(
            [&](double th) {
                const double r = star->radius(th);
                const double dr = star->radius_deriv(th);
                return std::pow(r, p) * std::sqrt(dr * dr + r * r);
            },
            lo, hi, chain.t1, opt);
    }
    chain.t2 = t2;
    chain.t3 = t3;
    return chain;
}

struct CurveComparison {
    double curve_integral = 0.0;
    double segment_integral = 0.0;
};

// Compares \int |x|^p dsigma over a sampled curve from a to b against the
// straight segment [a,b]; the origin must lie on the line through a and b.
inline CurveComparison segment_minimality(const Vec2& a, const Vec2& b,
                                          std::span<const Vec2> curve, double p) {
    if (p < 0.0) throw PreconditionError("segment_minimality: requires p >= 0");
    if (curve.size() < 64)
        throw PreconditionError("segment_minimality: curve needs at least 64 samples");
    const Vec2 dir = b - a;
    const double len = dir.norm();
    if (len == 0.0) throw PreconditionError("segment_minimality: a and b coincide");
    const double line_dist = std::abs(cross(a, dir)) / len;
    if (line_dist > 1e-9 * std::fmax(1.0, std::fmax(a.norm(), b.norm())))
        throw PreconditionError("segment_minimality: origin is not on the line through a and b");

    AdaptiveOptions opt;
    const auto seg_piece = [p, &opt](const Vec2& s0, const Vec2& s1) {
        const Vec2 d = s1 - s0;
        const double l = d.norm();
        if (l == 0.0) return 0.0;
        const auto f = [&](double u) { return std::pow((s0 + d * u).norm(), p) * l; };
        // Split at the closest point to the origin (kink of |x|^p there).
        double ustar = 0.0;
        if (d.norm2() > 0.0) ustar = std::fmin(1.0, std::fmax(0.0, -dot(s0, d) / d.norm2()));
        double total = 0.0;
        if (ustar > 0.0) total += integrate_adaptive(f, 0.0, ustar, 1.0, opt);
        if (ustar < 1.0) total += integrate_adaptive(f, ustar, 1.0, 1.0, opt);
        return total;
    };

    CurveComparison out;
    for (std::size_t i = 0; i + 1 < curve.size(); ++i)
        out.curve_integral += seg_piece(curve[i], curve[i + 1]);
    out.segment_integral = seg_piece(a, b);
    return out;
}

} // namespace isoperim
