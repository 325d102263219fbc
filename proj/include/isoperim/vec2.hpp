#pragma once

#include <cmath>
#include <complex>

namespace isoperim {

using Complex = std::complex<double>;

// Plain 2-vector. Points and tangents in the plane; converts to/from
// std::complex where the conformal machinery wants it.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    constexpr Vec2() = default;
    constexpr Vec2(double x_, double y_) : x(x_), y(y_) {}
    explicit Vec2(const Complex& z) : x(z.real()), y(z.imag()) {}

    Complex as_complex() const { return Complex(x, y); }

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2 operator/(double s) const { return {x / s, y / s}; }
    Vec2 operator-() const { return {-x, -y}; }

    double norm2() const { return x * x + y * y; }
    double norm() const { return std::hypot(x, y); }
    double angle() const { return std::atan2(y, x); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// z-component of the 3-D cross product; twice the signed triangle area (0,a,b).
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

inline double distance(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

// Distance from point p to the closed segment [a,b].
inline double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
    const Vec2 d = b - a;
    const double len2 = d.norm2();
    if (len2 == 0.0) return distance(p, a);
    double t = dot(p - a, d) / len2;
    t = std::fmin(1.0, std::fmax(0.0, t));
    return distance(p, a + d * t);
}

} // namespace isoperim
