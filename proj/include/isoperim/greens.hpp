#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <memory>
#include <utility>
#include <vector>

#include "isoperim/conformal.hpp"
#include "isoperim/geometry.hpp"
#include "isoperim/series.hpp"

namespace isoperim {

// Green's function of the Laplacian with Dirichlet data, normalized so the
// boundary flux of |grad G| is 1. Disk representation: closed form (image
// point) on B_R(0) with arbitrary singularity. Conformal representation:
// G = -(1/2pi) log |h^{-1}(y)| on a star domain with singularity at the
// origin = h(0).
class GreenFunction {
public:
    enum class Representation { disk, conformal };

    static GreenFunction disk_rep(double radius, Vec2 x, Domain domain) {
        GreenFunction g(std::move(domain));
        g.rep_ = Representation::disk;
        g.radius_ = radius;
        g.x_ = x;
        return g;
    }

    static GreenFunction conformal_rep(std::shared_ptr<const ConformalData> cd, Domain domain) {
        GreenFunction g(std::move(domain));
        g.rep_ = Representation::conformal;
        g.cd_ = std::move(cd);
        return g;
    }

    Representation representation() const { return rep_; }
    const Domain& domain() const { return domain_; }
    Vec2 singularity() const { return x_; }
    double disk_radius() const { return radius_; }
    const ConformalData& conformal() const { return *cd_; }

    // Preimage map: unit disk -> Omega carrying 0 to the singularity.
    Complex map(const Complex& w) const {
        if (rep_ == Representation::conformal) return series::eval(cd_->h, w);
        const Complex x = x_.as_complex();
        // Moebius from B_1 onto B_R(0) with m(0) = x.
        return radius_ * (radius_ * w + x) / (radius_ + std::conj(x) * w);
    }

    Complex map_deriv(const Complex& w) const {
        if (rep_ == Representation::conformal)
            return series::eval(series::derivative(cd_->h), w);
        const Complex x = x_.as_complex();
        const Complex denom = radius_ + std::conj(x) * w;
        return radius_ * (radius_ * radius_ - std::norm(x)) / (denom * denom);
    }

    // |grad G| at the physical point y = map(w), evaluated from the
    // representation: closed form via the image point for the disk, the
    // conformal transport 1/(2 pi |w| |h'(w)|) otherwise.
    double gradient_norm(const Complex& w) const {
        if (rep_ == Representation::disk) {
            const Complex y = map(w);
            return gradient_norm_physical(Vec2(y));
        }
        return 1.0 / (kTwoPi * std::abs(w) * std::abs(map_deriv(w)));
    }

    // Closed-form |grad G(y)| for the disk representation (valid anywhere in
    // B_R(0) away from the singularity).
    double gradient_norm_physical(const Vec2& yv) const {
        const Complex y = yv.as_complex();
        const Complex x = x_.as_complex();
        if (std::abs(x) == 0.0) return 1.0 / (kTwoPi * std::abs(y));
        const Complex xstar = (radius_ * radius_) / std::conj(x);
        const Complex grad = (y - xstar) / std::norm(y - xstar) - (y - x) / std::norm(y - x);
        return std::abs(grad) / kTwoPi;
    }

    // G(y). Disk: closed form. Conformal: Newton inversion of h seeded from a
    // dense sample of the map.
    double value(const Vec2& yv) const {
        if (rep_ == Representation::disk) {
            const Complex y = yv.as_complex();
            const Complex x = x_.as_complex();
            const double num = std::abs(radius_ * radius_ - std::conj(y) * x);
            const double den = radius_ * std::abs(y - x);
            return std::log(num / den) / kTwoPi;
        }
        return -std::log(std::abs(preimage(yv))) / kTwoPi;
    }

    // h^{-1}(y) by Newton iteration.
    Complex preimage(const Vec2& yv) const {
        const Complex y = yv.as_complex();
        const std::size_t m = 256;
        Complex best(0.0, 0.0);
        double best_dist = std::abs(y - map(best));
        for (std::size_t ring = 1; ring <= 4; ++ring) {
            const double s = static_cast<double>(ring) / 4.0;
            for (std::size_t j = 0; j < m; ++j) {
                const Complex w = std::polar(s * 0.999, kTwoPi * static_cast<double>(j) / m);
                const double dist = std::abs(y - map(w));
                if (dist < best_dist) {
                    best_dist = dist;
                    best = w;
                }
            }
        }
        Complex w = best;
        for (int it = 0; it < 100; ++it) {
            const Complex f = map(w) - y;
            if (std::abs(f) < 1e-14) break;
            const Complex dw = f / map_deriv(w);
            w -= dw;
            if (std::abs(w) > 1.2) w /= std::abs(w) * 1.2; // keep iterates near the disk
            if (std::abs(dw) < 1e-15) break;
        }
        return w;
    }

private:
    explicit GreenFunction(Domain domain) : domain_(std::move(domain)) {}

    Representation rep_ = Representation::disk;
    Domain domain_;
    Vec2 x_{0.0, 0.0};
    double radius_ = 1.0;
    std::shared_ptr<const ConformalData> cd_;
};

inline GreenFunction disk_green(double radius, const Vec2& x) {
    if (!(radius > 0.0)) throw PreconditionError("disk_green: radius must be positive");
    if (!(x.norm() < radius))
        throw PreconditionError("disk_green: singularity must lie inside the disk");
    return GreenFunction::disk_rep(radius, x, Domain::disk(Vec2{0, 0}, radius));
}

// Green's function of a star domain about the origin with singularity at the
// origin; the Theodorsen engine runs on Omega itself. Origin-centered disks
// short-circuit to the closed form.
inline GreenFunction star_green(const Domain& omega, std::size_t n_order, double tol = 1e-12) {
    if (omega.is_disk() && omega.as_disk().center.norm() == 0.0)
        return disk_green(omega.as_disk().radius, Vec2{0, 0});
    auto cd = std::make_shared<const ConformalData>(riemann_map(omega, n_order, tol));
    return GreenFunction::conformal_rep(std::move(cd), omega);
}

struct LevelIdentity {
    double t = 0.0;
    double dirichlet_energy = 0.0; // \int_{G < t} |grad G|^2 dy, equals t
    double flux = 0.0;             // \int_{G = t} |grad G| dsigma, equals 1
};

// The two level-set identities, computed in the conformal preimage: the level
// curve {G = t} is the image of |w| = e^{-2 pi t}; the energy integral runs
// over the annulus between that circle and the unit circle on a tensor
// Gauss grid in (log|w|, arg w).
inline std::vector<LevelIdentity> level_identities(const GreenFunction& g,
                                                   const std::vector<double>& t_list,
                                                   std::size_t angular = 256,
                                                   std::size_t radial = 64) {
    std::vector<LevelIdentity> out;
    out.reserve(t_list.size());
    const GaussLegendre radial_rule(static_cast<int>(radial));
    for (double t : t_list) {
        if (t < 0.0) throw RangeError("level_identities: t must be >= 0");
        LevelIdentity id;
        id.t = t;
        const double s = std::exp(-kTwoPi * t);

        // Flux on the preimage circle |w| = s.
        double flux = 0.0;
        for (std::size_t j = 0; j < angular; ++j) {
            const Complex w = std::polar(s, kTwoPi * static_cast<double>(j) / angular);
            flux += g.gradient_norm(w) * std::abs(g.map_deriv(w)) * s;
        }
        id.flux = flux * kTwoPi / static_cast<double>(angular);

        // Energy over the annulus s < |w| < 1 in (u, theta), u = log|w|.
        if (t > 0.0) {
            const double u_lo = std::log(s); // = -2 pi t
            double energy = 0.0;
            for (std::size_t i = 0; i < radial; ++i) {
                const double u = 0.5 * (u_lo + 0.0) + 0.5 * (0.0 - u_lo) * radial_rule.nodes[i];
                const double wu = 0.5 * (0.0 - u_lo) * radial_rule.weights[i];
                const double sigma = std::exp(u);
                for (std::size_t j = 0; j < angular; ++j) {
                    const Complex w = std::polar(sigma, kTwoPi * static_cast<double>(j) / angular);
                    const double gn = g.gradient_norm(w);
                    const double jac = std::abs(g.map_deriv(w));
                    energy += wu * gn * gn * jac * jac * sigma * sigma;
                }
            }
            id.dirichlet_energy = energy * kTwoPi / static_cast<double>(angular);
        }
        out.push_back(id);
    }
    return out;
}

struct FlucherBound {
    double lhs = 0.0; // |Omega|^{1 - beta/2}
    double rhs = 0.0; // (1/(4 pi^{1+beta/2})) \int 1/(|y|^beta |grad G|) dsigma
};

// Weighted boundary estimate of the area by the Green's function.
inline FlucherBound flucher_bound(const GreenFunction& g, double beta,
                                  std::size_t angular = 2048) {
    if (beta > 2.0) throw RangeError("flucher_bound: requires beta <= 2");
    if (beta > 0.0) {
        if (!g.domain().connected() ||
            contains_origin(g.domain()) != OriginLocation::inside)
            throw HypothesisError(
                "flucher_bound: beta > 0 requires a connected domain containing the origin");
    }
    FlucherBound out;
    out.lhs = std::pow(area(g.domain()), 1.0 - 0.5 * beta);
    double integral = 0.0;
    if (g.representation() == GreenFunction::Representation::disk) {
        const double radius = g.disk_radius();
        for (std::size_t j = 0; j < angular; ++j) {
            const double th = kTwoPi * static_cast<double>(j) / angular;
            const Vec2 y{radius * std::cos(th), radius * std::sin(th)};
            integral +=
                radius / (std::pow(y.norm(), beta) * g.gradient_norm_physical(y));
        }
        integral *= kTwoPi / static_cast<double>(angular);
    } else {
        // Boundary integrand 2 pi |h'(e^{it})|^2 / |h(e^{it})|^beta.
        const ConformalData& cd = g.conformal();
        const std::size_t m = 4 * cd.order;
        const auto hv = eval_series_on_circle(cd.h, 1.0, m);
        const auto dv = eval_series_on_circle(series::derivative(cd.h), 1.0, m);
        for (std::size_t j = 0; j < m; ++j)
            integral += kTwoPi * std::norm(dv[j]) / std::pow(std::abs(hv[j]), beta);
        integral *= kTwoPi / static_cast<double>(m);
    }
    out.rhs = integral / (4.0 * std::pow(kPi, 1.0 + 0.5 * beta));
    return out;
}

} // namespace isoperim
