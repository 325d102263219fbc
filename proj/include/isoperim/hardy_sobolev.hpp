#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "isoperim/geometry.hpp"
#include "isoperim/measures.hpp"
#include "isoperim/quadrature.hpp"

namespace isoperim {

// Caffarelli-Kohn-Nirenberg exponent triple for
// ||u |x|^gamma||_{L^r} <= C || Du |x|^alpha ||_{L^1}.
struct ExponentTriple {
    double alpha = 0.0;
    double gamma = 0.0;
    double r = 0.0;
};

// The three compatibility conditions: r > 0, 0 <= alpha - gamma <= 1, and
// 1/r + gamma/2 = (alpha+1)/2. The equality is checked to rounding tolerance.
inline bool ckn_admissible(const ExponentTriple& e) {
    const double tol = 1e-12;
    if (!(e.r > 0.0)) return false;
    const double diff = e.alpha - e.gamma;
    if (diff < -tol || diff > 1.0 + tol) return false;
    const double balance = 1.0 / e.r + 0.5 * e.gamma - 0.5 * (e.alpha + 1.0);
    return std::abs(balance) <= tol * std::fmax(1.0, std::abs(e.alpha) + std::abs(e.gamma));
}

// (p, q) -> (alpha, gamma, r) = (p, q/r, (q+2)/(p+1)).
inline ExponentTriple exponent_map(double p, double q) {
    if (!(p > -1.0)) throw RangeError("exponent_map: requires p > -1");
    if (!(q > -2.0)) throw RangeError("exponent_map: requires q > -2");
    const double r = (q + 2.0) / (p + 1.0);
    if (r < 1.0) throw RangeError("exponent_map: r = (q+2)/(p+1) must be >= 1");
    return ExponentTriple{p, q / r, r};
}

// Compactly supported u(x) = eta(sigma(x)) built from a nonincreasing
// piecewise-linear profile over the gauge of a star-shaped base; every
// superlevel set {u > t} is an exactly scaled copy of the base.
class TestFunction {
public:
    struct Breakpoint {
        double s = 0.0;
        double value = 0.0;
    };

    TestFunction(Domain base, std::vector<Breakpoint> profile)
        : base_(std::move(base)), profile_(std::move(profile)) {
        validate_base(base_);
        if (profile_.size() < 2)
            throw PreconditionError("TestFunction: profile needs at least two breakpoints");
        if (profile_.front().s != 0.0)
            throw PreconditionError("TestFunction: profile must start at s = 0");
        for (std::size_t i = 0; i < profile_.size(); ++i) {
            if (!std::isfinite(profile_[i].s) || !std::isfinite(profile_[i].value))
                throw PreconditionError("TestFunction: non-finite breakpoint");
            if (i > 0 && !(profile_[i].s > profile_[i - 1].s))
                throw PreconditionError("TestFunction: breakpoint abscissae must increase");
            if (i > 0 && profile_[i].value > profile_[i - 1].value)
                throw PreconditionError("TestFunction: profile must be nonincreasing");
        }
        if (!(profile_.front().value > 0.0))
            throw PreconditionError("TestFunction: eta(0) must be positive");
        if (profile_.back().value != 0.0)
            throw PreconditionError("TestFunction: profile must end at value 0");
    }

    const Domain& base() const { return base_; }
    const std::vector<Breakpoint>& profile() const { return profile_; }
    double max_value() const { return profile_.front().value; }
    double support_radius() const { return profile_.back().s; }

    // \int_0^inf eta(s)^r s ds, exact per linear segment.
    double profile_lr_moment(double r) const {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < profile_.size(); ++i) {
            const double s0 = profile_[i].s, s1 = profile_[i + 1].s;
            const double v0 = profile_[i].value, v1 = profile_[i + 1].value;
            const double beta = (v1 - v0) / (s1 - s0);
            if (beta == 0.0) {
                total += std::pow(v0, r) * 0.5 * (s1 * s1 - s0 * s0);
                continue;
            }
            const double alpha = v0 - beta * s0;
            // substitute w = alpha + beta s: integral of w^r (w - alpha)/beta^2 dw
            const auto anti = [&](double w) {
                return (std::pow(w, r + 2.0) / (r + 2.0) - alpha * std::pow(w, r + 1.0) / (r + 1.0)) /
                       (beta * beta);
            };
            total += anti(v1) - anti(v0);
        }
        return total;
    }

    // \int_0^inf |eta'(s)| s^{p+1} ds, exact per linear segment.
    double profile_gradient_moment(double p) const {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < profile_.size(); ++i) {
            const double s0 = profile_[i].s, s1 = profile_[i + 1].s;
            const double v0 = profile_[i].value, v1 = profile_[i + 1].value;
            const double slope = (v1 - v0) / (s1 - s0);
            if (slope == 0.0) continue;
            total += std::abs(slope) * (std::pow(s1, p + 2.0) - std::pow(s0, p + 2.0)) / (p + 2.0);
        }
        return total;
    }

    // \int_0^M c(t)^e dt where c(t) = eta^{-1}(t); composite Gauss per
    // profile panel with `panels` subpanels each.
    double level_scale_moment(double e, int panels) const {
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < profile_.size(); ++i) {
            const double s0 = profile_[i].s, s1 = profile_[i + 1].s;
            const double v0 = profile_[i].value, v1 = profile_[i + 1].value;
            if (v1 == v0) continue; // flat segments occupy a single level
            const double slope = (v1 - v0) / (s1 - s0); // < 0
            const auto c_of_t = [&](double t) { return s0 + (t - v0) / slope; };
            const double h = (v0 - v1) / panels;
            for (int k = 0; k < panels; ++k) {
                const double lo = v1 + k * h, hi = v1 + (k + 1) * h;
                total += gl10([&](double t) { return std::pow(c_of_t(t), e); }, lo, hi);
            }
        }
        return total;
    }

private:
    static void validate_base(const Domain& d) {
        if (d.is_fourier_star()) {
            if (d.as_fourier_star().center.norm() != 0.0)
                throw PreconditionError("TestFunction: star base must be centered at the origin");
            return;
        }
        if (d.is_disk()) {
            const Disk& g = d.as_disk();
            if (g.center.norm() >= g.radius)
                throw PreconditionError("TestFunction: disk base must contain the origin");
            return;
        }
        if (d.is_polygon()) {
            const auto& v = d.as_polygon().vertices;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (cross(v[i], v[(i + 1) % v.size()]) <= 0.0)
                    throw PreconditionError(
                        "TestFunction: polygon base must be star-shaped about the origin");
            return;
        }
        throw PreconditionError("TestFunction: base must be a star-shaped domain about the origin");
    }

    Domain base_;
    std::vector<Breakpoint> profile_;
};

struct HsRatio {
    double lhs = 0.0;   // ||u||_{L^r}
    double rhs = 0.0;   // (pi^{1/r}/2pi) \int |grad u| |x|^p dx
    double ratio = 0.0; // lhs / rhs
};

// The Hardy-Sobolev ratio for the candidate best constant pi^{1/r}/2pi with
// r = 2/(p+1). Both integrals reduce to closed radial moments against the
// base area and the base weighted perimeter.
inline HsRatio hs_ratio(const TestFunction& u, double p, int quad_order = 64) {
    if (!(p > -1.0 && p <= 1.0)) throw RangeError("hs_ratio: requires p in (-1, 1]");
    const double r = 2.0 / (p + 1.0);
    const double base_area = area(u.base());
    const double base_perimeter = weighted_perimeter(u.base(), p, quad_order);
    HsRatio out;
    out.lhs = std::pow(2.0 * base_area * u.profile_lr_moment(r), 1.0 / r);
    out.rhs = std::pow(kPi, 1.0 / r) / kTwoPi * base_perimeter * u.profile_gradient_moment(p);
    out.ratio = out.lhs / out.rhs;
    return out;
}

struct LayerCakeChain {
    double lhs = 0.0;             // ||u||_{L^r}
    double minkowski_bound = 0.0; // \int_0^M |Omega(t)|^{1/r} dt
    double perimeter_bound = 0.0; // (pi^{1/r}/2pi) \int_0^M P_p(dOmega(t)) dt
};

// Layer-cake chain of the equivalence proof in the q = 0 configuration.
inline LayerCakeChain layer_cake_check(const TestFunction& u, double p, int levels = 64,
                                       int quad_order = 64) {
    if (!(p > -1.0 && p <= 1.0)) throw RangeError("layer_cake_check: requires p in (-1, 1]");
    if (levels < 64) throw PreconditionError("layer_cake_check: levels must be >= 64");
    const double r = 2.0 / (p + 1.0);
    const double base_area = area(u.base());
    const double base_perimeter = weighted_perimeter(u.base(), p, quad_order);
    LayerCakeChain out;
    out.lhs = std::pow(2.0 * base_area * u.profile_lr_moment(r), 1.0 / r);
    out.minkowski_bound = std::pow(base_area, 1.0 / r) * u.level_scale_moment(2.0 / r, levels);
    out.perimeter_bound =
        std::pow(kPi, 1.0 / r) / kTwoPi * base_perimeter * u.level_scale_moment(p + 1.0, levels);
    return out;
}

// Coarea identity: the t-route \int_0^M P_p({u = t}) dt against the s-route
// \int |grad u| |x|^p dx.
inline std::pair<double, double> coarea_check(const TestFunction& u, double p, int levels = 64,
                                              int quad_order = 64) {
    if (levels < 64) throw PreconditionError("coarea_check: levels must be >= 64");
    const double base_perimeter = weighted_perimeter(u.base(), p, quad_order);
    const double lhs = base_perimeter * u.level_scale_moment(p + 1.0, levels);
    const double rhs = base_perimeter * u.profile_gradient_moment(p);
    return {lhs, rhs};
}

struct ExtremalStep {
    double eps = 0.0;
    double lhs = 0.0;
    double rhs = 0.0;
    double ratio = 0.0;
};

// Annular-ramp approximations of the ball characteristic function: the ratio
// ladder climbs toward 1 (the constant is optimal) without reaching it (it is
// not attained).
inline std::vector<ExtremalStep> extremal_sequence(double p, double ball_radius,
                                                   const std::vector<double>& eps_list) {
    std::vector<ExtremalStep> out;
    out.reserve(eps_list.size());
    for (double eps : eps_list) {
        if (!(eps > 0.0 && eps < 1.0))
            throw RangeError("extremal_sequence: eps must be in (0,1)");
        TestFunction u(Domain::disk(Vec2{0, 0}, ball_radius),
                       {{0.0, 1.0}, {1.0 - eps, 1.0}, {1.0, 0.0}});
        const HsRatio hr = hs_ratio(u, p);
        out.push_back(ExtremalStep{eps, hr.lhs, hr.rhs, hr.ratio});
    }
    return out;
}

} // namespace isoperim
