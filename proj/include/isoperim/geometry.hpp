#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "isoperim/errors.hpp"
#include "isoperim/fft.hpp"
#include "isoperim/quadrature.hpp"
#include "isoperim/vec2.hpp"

namespace isoperim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

struct Disk {
    Vec2 center;
    double radius = 1.0;
};

// Star-shaped region about `center` with radius function
// rho(theta) = a0 + sum_k (cos_coef[k-1] cos k theta + sin_coef[k-1] sin k theta).
struct FourierStar {
    Vec2 center;
    double a0 = 1.0;
    std::vector<double> cos_coef;
    std::vector<double> sin_coef;

    std::size_t order() const { return cos_coef.size(); }

    double radius(double theta) const {
        double r = a0;
        for (std::size_t k = 1; k <= cos_coef.size(); ++k) {
            const double kt = static_cast<double>(k) * theta;
            r += cos_coef[k - 1] * std::cos(kt) + sin_coef[k - 1] * std::sin(kt);
        }
        return r;
    }

    double radius_deriv(double theta) const {
        double r = 0.0;
        for (std::size_t k = 1; k <= cos_coef.size(); ++k) {
            const double kd = static_cast<double>(k);
            const double kt = kd * theta;
            r += kd * (-cos_coef[k - 1] * std::sin(kt) + sin_coef[k - 1] * std::cos(kt));
        }
        return r;
    }

    double min_radius(std::size_t samples = 0) const {
        if (samples == 0) samples = std::max<std::size_t>(2048, 64 * order());
        double m = radius(0.0);
        for (std::size_t j = 1; j < samples; ++j)
            m = std::fmin(m, radius(kTwoPi * static_cast<double>(j) / static_cast<double>(samples)));
        return m;
    }
};

struct Polygon {
    std::vector<Vec2> vertices; // counterclockwise, simple
};

class Domain;

struct DisjointUnion {
    std::vector<Domain> parts;
};

enum class DomainKind { disk, fourier_star, polygon, union_of };

enum class OriginLocation { inside, on_boundary, outside };

// One smooth boundary chart z(t), t in [t0, t1], with tangent dz/dt.
struct BoundaryPiece {
    double t0 = 0.0;
    double t1 = 0.0;
    std::function<Vec2(double)> point;
    std::function<Vec2(double)> tangent;
    int component = 0; // index of the union component this piece belongs to
    int index = 0;     // piece index within the whole boundary
};

struct BoundaryNode {
    Vec2 point;
    double weight = 0.0; // arc-length weight, > 0
    int piece = 0;
};

struct BoundaryQuadrature {
    std::vector<BoundaryNode> nodes;
    double total_arc_length = 0.0;
};

class Domain {
public:
    static Domain disk(Vec2 center, double radius);
    static Domain fourier_star(Vec2 center, double a0, std::vector<double> cos_coef,
                               std::vector<double> sin_coef);
    static Domain polygon(std::vector<Vec2> vertices);
    static Domain union_of(std::vector<Domain> parts);

    DomainKind kind() const { return static_cast<DomainKind>(repr_.index()); }

    bool is_disk() const { return kind() == DomainKind::disk; }
    bool is_fourier_star() const { return kind() == DomainKind::fourier_star; }
    bool is_polygon() const { return kind() == DomainKind::polygon; }
    bool is_union() const { return kind() == DomainKind::union_of; }

    const Disk& as_disk() const { return std::get<Disk>(repr_); }
    const FourierStar& as_fourier_star() const { return std::get<FourierStar>(repr_); }
    const Polygon& as_polygon() const { return std::get<Polygon>(repr_); }
    const DisjointUnion& as_union() const { return std::get<DisjointUnion>(repr_); }

    // Structural connectedness: a union with more than one part is disconnected.
    bool connected() const {
        return !is_union() || as_union().parts.size() <= 1;
    }

    template <class Visitor>
    decltype(auto) visit(Visitor&& v) const {
        return std::visit(std::forward<Visitor>(v), repr_);
    }

private:
    using Repr = std::variant<Disk, FourierStar, Polygon, DisjointUnion>;
    explicit Domain(Repr r) : repr_(std::move(r)) {}
    Repr repr_;
};

double area(const Domain& d);

namespace detail {

inline bool segments_properly_intersect(const Vec2& a, const Vec2& b, const Vec2& c,
                                        const Vec2& d) {
    const auto orient = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        return cross(q - p, r - p);
    };
    const double o1 = orient(a, b, c);
    const double o2 = orient(a, b, d);
    const double o3 = orient(c, d, a);
    const double o4 = orient(c, d, b);
    return ((o1 > 0) != (o2 > 0)) && ((o3 > 0) != (o4 > 0)) && o1 != 0 && o2 != 0 && o3 != 0 &&
           o4 != 0;
}

inline double polygon_signed_area(const std::vector<Vec2>& v) {
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) s += cross(v[i], v[(i + 1) % v.size()]);
    return 0.5 * s;
}

inline void require_finite(double x, const char* what) {
    if (!std::isfinite(x)) throw InvalidDomainError(std::string(what) + ": non-finite value");
}

} // namespace detail

std::vector<BoundaryPiece> boundary_pieces(const Domain& d);
bool contains(const Domain& d, const Vec2& p);
double origin_boundary_distance(const Domain& d);

inline Domain Domain::disk(Vec2 center, double radius) {
    detail::require_finite(center.x, "disk center");
    detail::require_finite(center.y, "disk center");
    detail::require_finite(radius, "disk radius");
    if (radius <= 0.0) throw InvalidDomainError("disk: radius must be positive");
    return Domain(Repr(Disk{center, radius}));
}

inline Domain Domain::fourier_star(Vec2 center, double a0, std::vector<double> cos_coef,
                                   std::vector<double> sin_coef) {
    detail::require_finite(center.x, "fourier_star center");
    detail::require_finite(center.y, "fourier_star center");
    detail::require_finite(a0, "fourier_star a0");
    if (cos_coef.size() != sin_coef.size())
        throw InvalidDomainError("fourier_star: cos/sin coefficient lists differ in length");
    for (double c : cos_coef) detail::require_finite(c, "fourier_star coefficient");
    for (double s : sin_coef) detail::require_finite(s, "fourier_star coefficient");
    FourierStar fs{center, a0, std::move(cos_coef), std::move(sin_coef)};
    if (fs.min_radius() <= 0.0)
        throw InvalidDomainError("fourier_star: radius function must be positive");
    return Domain(Repr(std::move(fs)));
}

inline Domain Domain::polygon(std::vector<Vec2> vertices) {
    if (vertices.size() < 3) throw InvalidDomainError("polygon: needs at least 3 vertices");
    for (const Vec2& v : vertices) {
        detail::require_finite(v.x, "polygon vertex");
        detail::require_finite(v.y, "polygon vertex");
    }
    if (detail::polygon_signed_area(vertices) <= 0.0)
        throw InvalidDomainError("polygon: vertices must be in counterclockwise order");
    const std::size_t n = vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            // Skip adjacent edges (they share an endpoint).
            if (j == i + 1 || (i == 0 && j == n - 1)) continue;
            if (detail::segments_properly_intersect(vertices[i], vertices[(i + 1) % n],
                                                    vertices[j], vertices[(j + 1) % n]))
                throw InvalidDomainError("polygon: boundary is self-intersecting");
        }
    }
    return Domain(Repr(Polygon{std::move(vertices)}));
}

double equivalent_radius(const Domain& d);

inline Domain Domain::union_of(std::vector<Domain> parts) {
    if (parts.empty()) throw InvalidDomainError("union: needs at least one part");
    // Pairwise disjoint closures, checked on sampled boundaries.
    const std::size_t samples = 256;
    std::vector<std::vector<Vec2>> pts(parts.size());
    double scale = 0.0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        scale = std::fmax(scale, equivalent_radius(parts[i]));
        for (const BoundaryPiece& piece : boundary_pieces(parts[i])) {
            for (std::size_t j = 0; j < samples; ++j) {
                const double t =
                    piece.t0 + (piece.t1 - piece.t0) * (static_cast<double>(j) + 0.5) /
                                   static_cast<double>(samples);
                pts[i].push_back(piece.point(t));
            }
        }
    }
    const double eps = 1e-9 * scale;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        for (std::size_t j = i + 1; j < parts.size(); ++j) {
            double min_dist = std::numeric_limits<double>::infinity();
            for (const Vec2& a : pts[i])
                for (const Vec2& b : pts[j]) min_dist = std::fmin(min_dist, distance(a, b));
            if (min_dist <= eps)
                throw InvalidDomainError("union: component closures are not disjoint");
            // Nesting check: one boundary lying inside the other component.
            if (contains(parts[j], pts[i].front()) || contains(parts[i], pts[j].front()))
                throw InvalidDomainError("union: components are nested");
        }
    }
    return Domain(Repr(DisjointUnion{std::move(parts)}));
}

// ---------------------------------------------------------------------------
// Area and derived quantities
// ---------------------------------------------------------------------------

inline double area(const Domain& d) {
    return d.visit([](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return kPi * g.radius * g.radius;
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            // (1/2) \int rho^2 dtheta via Parseval, exact for the finite series.
            double s = g.a0 * g.a0;
            for (std::size_t k = 0; k < g.cos_coef.size(); ++k)
                s += 0.5 * (g.cos_coef[k] * g.cos_coef[k] + g.sin_coef[k] * g.sin_coef[k]);
            return kPi * s;
        } else if constexpr (std::is_same_v<T, Polygon>) {
            return detail::polygon_signed_area(g.vertices);
        } else {
            double s = 0.0;
            for (const Domain& part : g.parts) s += area(part);
            return s;
        }
    });
}

inline double equivalent_radius(const Domain& d) { return std::sqrt(area(d) / kPi); }

// ---------------------------------------------------------------------------
// Boundary parametrization
// ---------------------------------------------------------------------------

namespace detail {

// `next_component` hands out one id per connected component (leaf domain),
// so nested unions never share ids across branches.
inline void append_pieces(const Domain& d, std::vector<BoundaryPiece>& out, int& next_component) {
    const int base = static_cast<int>(out.size());
    const int component = next_component;
    switch (d.kind()) {
        case DomainKind::disk: {
            ++next_component;
            const Disk g = d.as_disk();
            BoundaryPiece p;
            p.t0 = 0.0;
            p.t1 = kTwoPi;
            p.point = [g](double t) {
                return Vec2{g.center.x + g.radius * std::cos(t), g.center.y + g.radius * std::sin(t)};
            };
            p.tangent = [g](double t) {
                return Vec2{-g.radius * std::sin(t), g.radius * std::cos(t)};
            };
            p.component = component;
            p.index = base;
            out.push_back(std::move(p));
            break;
        }
        case DomainKind::fourier_star: {
            ++next_component;
            const auto g = std::make_shared<FourierStar>(d.as_fourier_star());
            BoundaryPiece p;
            p.t0 = 0.0;
            p.t1 = kTwoPi;
            p.point = [g](double t) {
                const double r = g->radius(t);
                return Vec2{g->center.x + r * std::cos(t), g->center.y + r * std::sin(t)};
            };
            p.tangent = [g](double t) {
                const double r = g->radius(t);
                const double dr = g->radius_deriv(t);
                const double c = std::cos(t), s = std::sin(t);
                return Vec2{dr * c - r * s, dr * s + r * c};
            };
            p.component = component;
            p.index = base;
            out.push_back(std::move(p));
            break;
        }
        case DomainKind::polygon: {
            ++next_component;
            const Polygon& g = d.as_polygon();
            const std::size_t n = g.vertices.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2 a = g.vertices[i];
                const Vec2 b = g.vertices[(i + 1) % n];
                BoundaryPiece p;
                p.t0 = 0.0;
                p.t1 = 1.0;
                p.point = [a, b](double t) { return a + (b - a) * t; };
                p.tangent = [a, b](double) { return b - a; };
                p.component = component;
                p.index = base + static_cast<int>(i);
                out.push_back(std::move(p));
            }
            break;
        }
        case DomainKind::union_of: {
            for (const Domain& part : d.as_union().parts)
                append_pieces(part, out, next_component);
            break;
        }
    }
}

} // namespace detail

inline std::vector<BoundaryPiece> boundary_pieces(const Domain& d) {
    std::vector<BoundaryPiece> out;
    int next_component = 0;
    detail::append_pieces(d, out, next_component);
    for (std::size_t i = 0; i < out.size(); ++i) out[i].index = static_cast<int>(i);
    return out;
}

// Composite Gauss-Legendre nodes approximating the arc-length measure.
// `order` counts panels per closed loop (polygons get per-edge panels).
inline BoundaryQuadrature boundary_nodes(const Domain& d, int order) {
    if (order < 16) throw PreconditionError("boundary_nodes: order must be >= 16");
    const GaussLegendre& rule = gauss_legendre_10();
    BoundaryQuadrature q;
    const auto pieces = boundary_pieces(d);
    // Polygons: spread the panel budget across the edges of each component.
    std::vector<int> panels_per_piece(pieces.size(), order);
    {
        std::vector<int> edges_in_component;
        for (const BoundaryPiece& p : pieces) {
            if (static_cast<std::size_t>(p.component) >= edges_in_component.size())
                edges_in_component.resize(p.component + 1, 0);
            edges_in_component[p.component]++;
        }
        for (std::size_t i = 0; i < pieces.size(); ++i) {
            const int siblings = edges_in_component[pieces[i].component];
            if (siblings > 1)
                panels_per_piece[i] = std::max(1, order / siblings);
        }
    }
    for (std::size_t pi = 0; pi < pieces.size(); ++pi) {
        const BoundaryPiece& p = pieces[pi];
        const int panels = panels_per_piece[pi];
        const double h = (p.t1 - p.t0) / panels;
        for (int k = 0; k < panels; ++k) {
            const double a = p.t0 + k * h;
            const double mid = a + 0.5 * h;
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double t = mid + 0.5 * h * rule.nodes[i];
                const double w = 0.5 * h * rule.weights[i] * p.tangent(t).norm();
                q.nodes.push_back(BoundaryNode{p.point(t), w, p.index});
                q.total_arc_length += w;
            }
        }
    }
    return q;
}

// ---------------------------------------------------------------------------
// Point location
// ---------------------------------------------------------------------------

inline bool contains(const Domain& d, const Vec2& p) {
    return d.visit([&p](const auto& g) -> bool {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return distance(p, g.center) < g.radius;
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            const Vec2 rel = p - g.center;
            const double r = rel.norm();
            if (r == 0.0) return true;
            return r < g.radius(rel.angle());
        } else if constexpr (std::is_same_v<T, Polygon>) {
            // Winding-number point-in-polygon test.
            int winding = 0;
            const std::size_t n = g.vertices.size();
            for (std::size_t i = 0; i < n; ++i) {
                const Vec2& a = g.vertices[i];
                const Vec2& b = g.vertices[(i + 1) % n];
                if (a.y <= p.y) {
                    if (b.y > p.y && cross(b - a, p - a) > 0) ++winding;
                } else {
                    if (b.y <= p.y && cross(b - a, p - a) < 0) --winding;
                }
            }
            return winding != 0;
        } else {
            for (const Domain& part : g.parts)
                if (contains(part, p)) return true;
            return false;
        }
    });
}

namespace detail {

// Distance from the origin to a smooth closed chart, coarse grid + local refinement.
inline double origin_distance_smooth(const BoundaryPiece& p, std::size_t samples = 4096) {
    double best_t = p.t0;
    double best = std::numeric_limits<double>::infinity();
    const double h = (p.t1 - p.t0) / static_cast<double>(samples);
    for (std::size_t j = 0; j < samples; ++j) {
        const double t = p.t0 + h * static_cast<double>(j);
        const double d2 = p.point(t).norm2();
        if (d2 < best) {
            best = d2;
            best_t = t;
        }
    }
    // Golden-section refine inside the bracketing interval.
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double a = best_t - h, b = best_t + h;
    double c = b - gr * (b - a), e = a + gr * (b - a);
    double fc = p.point(c).norm2(), fe = p.point(e).norm2();
    for (int it = 0; it < 80; ++it) {
        if (fc < fe) {
            b = e;
            e = c;
            fe = fc;
            c = b - gr * (b - a);
            fc = p.point(c).norm2();
        } else {
            a = c;
            c = e;
            fc = fe;
            e = a + gr * (b - a);
            fe = p.point(e).norm2();
        }
    }
    return std::sqrt(std::fmin(fc, fe));
}

} // namespace detail

inline double origin_boundary_distance(const Domain& d) {
    return d.visit([&d](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return std::abs(g.center.norm() - g.radius);
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            if (g.center.norm() == 0.0) return g.min_radius();
            double best = std::numeric_limits<double>::infinity();
            for (const BoundaryPiece& p : boundary_pieces(d))
                best = std::fmin(best, detail::origin_distance_smooth(p));
            return best;
        } else if constexpr (std::is_same_v<T, Polygon>) {
            double best = std::numeric_limits<double>::infinity();
            const std::size_t n = g.vertices.size();
            for (std::size_t i = 0; i < n; ++i)
                best = std::fmin(best, point_segment_distance(Vec2{0, 0}, g.vertices[i],
                                                              g.vertices[(i + 1) % n]));
            return best;
        } else {
            double best = std::numeric_limits<double>::infinity();
            for (const Domain& part : g.parts)
                best = std::fmin(best, origin_boundary_distance(part));
            return best;
        }
    });
}

// Classifies the origin relative to the domain. eps < 0 selects the default
// tolerance 1e-9 * equivalent_radius.
inline OriginLocation contains_origin(const Domain& d, double eps = -1.0) {
    if (eps < 0.0) eps = 1e-9 * equivalent_radius(d);
    if (origin_boundary_distance(d) <= eps) return OriginLocation::on_boundary;
    return contains(d, Vec2{0, 0}) ? OriginLocation::inside : OriginLocation::outside;
}

// ---------------------------------------------------------------------------
// Similarity transforms (about the origin)
// ---------------------------------------------------------------------------

inline Domain scaled(const Domain& d, double lambda) {
    if (!(lambda > 0.0)) throw RangeError("scaled: factor must be positive");
    return d.visit([lambda](const auto& g) -> Domain {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return Domain::disk(g.center * lambda, g.radius * lambda);
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            auto cos_c = g.cos_coef;
            auto sin_c = g.sin_coef;
            for (double& c : cos_c) c *= lambda;
            for (double& s : sin_c) s *= lambda;
            return Domain::fourier_star(g.center * lambda, g.a0 * lambda, std::move(cos_c),
                                        std::move(sin_c));
        } else if constexpr (std::is_same_v<T, Polygon>) {
            auto v = g.vertices;
            for (Vec2& p : v) p = p * lambda;
            return Domain::polygon(std::move(v));
        } else {
            std::vector<Domain> parts;
            parts.reserve(g.parts.size());
            for (const Domain& part : g.parts) parts.push_back(scaled(part, lambda));
            return Domain::union_of(std::move(parts));
        }
    });
}

inline Domain rotated(const Domain& d, double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    const auto rot = [c, s](const Vec2& v) { return Vec2{c * v.x - s * v.y, s * v.x + c * v.y}; };
    return d.visit([&](const auto& g) -> Domain {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return Domain::disk(rot(g.center), g.radius);
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            std::vector<double> cos_c(g.cos_coef.size()), sin_c(g.sin_coef.size());
            for (std::size_t k = 1; k <= g.cos_coef.size(); ++k) {
                const double ck = std::cos(static_cast<double>(k) * phi);
                const double sk = std::sin(static_cast<double>(k) * phi);
                cos_c[k - 1] = g.cos_coef[k - 1] * ck - g.sin_coef[k - 1] * sk;
                sin_c[k - 1] = g.cos_coef[k - 1] * sk + g.sin_coef[k - 1] * ck;
            }
            return Domain::fourier_star(rot(g.center), g.a0, std::move(cos_c), std::move(sin_c));
        } else if constexpr (std::is_same_v<T, Polygon>) {
            auto v = g.vertices;
            for (Vec2& p : v) p = rot(p);
            return Domain::polygon(std::move(v));
        } else {
            std::vector<Domain> parts;
            parts.reserve(g.parts.size());
            for (const Domain& part : g.parts) parts.push_back(rotated(part, phi));
            return Domain::union_of(std::move(parts));
        }
    });
}

inline Domain translated(const Domain& d, const Vec2& v) {
    return d.visit([&v](const auto& g) -> Domain {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, Disk>) {
            return Domain::disk(g.center + v, g.radius);
        } else if constexpr (std::is_same_v<T, FourierStar>) {
            return Domain::fourier_star(g.center + v, g.a0, g.cos_coef, g.sin_coef);
        } else if constexpr (std::is_same_v<T, Polygon>) {
            auto verts = g.vertices;
            for (Vec2& p : verts) p = p + v;
            return Domain::polygon(std::move(verts));
        } else {
            std::vector<Domain> parts;
            parts.reserve(g.parts.size());
            for (const Domain& part : g.parts) parts.push_back(translated(part, v));
            return Domain::union_of(std::move(parts));
        }
    });
}

// ---------------------------------------------------------------------------
// Inversion of the complement, z -> 1/z
// ---------------------------------------------------------------------------

struct InvertOptions {
    // Residual target for the Fourier refit of the inverted star boundary.
    double refit_tol = 1e-10;
    std::size_t max_order = 1024;
};

struct InvertedDomain {
    Domain domain;
    double refit_residual = 0.0;
};

// Image of the complement of a Jordan domain containing 0 under z -> 1/z,
// together with 0. For a disk the image circle is closed-form; for a star
// about the origin the radius function 1/rho(-theta) is refit to a Fourier
// series, raising the order until the residual target is met.
inline InvertedDomain invert_complement(const Domain& d, const InvertOptions& opt = {}) {
    if (d.is_disk()) {
        const Disk g = d.as_disk();
        const double c2 = g.center.norm2();
        const double r2 = g.radius * g.radius;
        const double eps = 1e-12 * g.radius;
        if (c2 >= (g.radius - eps) * (g.radius - eps))
            throw PreconditionError("invert_complement: origin must lie strictly inside the disk");
        const double denom = r2 - c2;
        // 1/z maps |z-c|=R to the circle with center -conj(c)/(R^2-|c|^2).
        const Vec2 center{-g.center.x / denom, g.center.y / denom};
        return InvertedDomain{Domain::disk(center, g.radius / denom), 0.0};
    }
    if (!d.is_fourier_star())
        throw PreconditionError("invert_complement: domain must be a disk or a fourier_star");
    const FourierStar& g = d.as_fourier_star();
    if (g.center.norm() != 0.0)
        throw PreconditionError("invert_complement: fourier_star must be centered at the origin");

    const auto inverted_radius = [&g](double theta) { return 1.0 / g.radius(-theta); };
    const double scale = 1.0 / g.min_radius();

    std::size_t k_out = std::max<std::size_t>(g.order(), 8);
    double residual = std::numeric_limits<double>::infinity();
    while (true) {
        std::size_t m = 64;
        while (m < 4 * k_out) m *= 2;
        std::vector<std::complex<double>> samples(m);
        for (std::size_t j = 0; j < m; ++j)
            samples[j] = inverted_radius(kTwoPi * static_cast<double>(j) / static_cast<double>(m));
        fft_inplace(samples, false);
        const double inv_m = 1.0 / static_cast<double>(m);
        const double a0 = samples[0].real() * inv_m;
        std::vector<double> cos_c(k_out), sin_c(k_out);
        for (std::size_t k = 1; k <= k_out; ++k) {
            cos_c[k - 1] = 2.0 * samples[k].real() * inv_m;
            sin_c[k - 1] = -2.0 * samples[k].imag() * inv_m;
        }
        FourierStar fit{Vec2{0, 0}, a0, cos_c, sin_c};
        residual = 0.0;
        const std::size_t dense = 2 * m;
        for (std::size_t j = 0; j < dense; ++j) {
            const double t = kTwoPi * (static_cast<double>(j) + 0.5) / static_cast<double>(dense);
            residual = std::fmax(residual, std::abs(fit.radius(t) - inverted_radius(t)));
        }
        if (residual <= opt.refit_tol * scale)
            return InvertedDomain{
                Domain::fourier_star(Vec2{0, 0}, a0, std::move(cos_c), std::move(sin_c)),
                residual};
        if (k_out >= opt.max_order)
            throw TruncationError(
                "invert_complement: Fourier refit residual above tolerance at max order",
                residual);
        k_out = std::min(opt.max_order, 2 * k_out);
    }
}

} // namespace isoperim
