#pragma once

#include <cmath>

namespace curvop {

// Truncated order-2 Taylor jet of a scalar function of r:
// value, first and second derivative at the expansion point.
struct Jet2 {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    static constexpr Jet2 constant(double c) { return {c, 0.0, 0.0}; }
    static constexpr Jet2 variable(double r) { return {r, 1.0, 0.0}; }
};

constexpr Jet2 operator+(const Jet2& a, const Jet2& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet2 operator-(const Jet2& a, const Jet2& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet2 operator-(const Jet2& a) { return {-a.v, -a.d1, -a.d2}; }
constexpr Jet2 operator*(const Jet2& a, const Jet2& b) {
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2.0 * a.d1 * b.d1 + a.v * b.d2};
}
constexpr Jet2 operator*(double s, const Jet2& a) { return {s * a.v, s * a.d1, s * a.d2}; }
constexpr Jet2 operator*(const Jet2& a, double s) { return s * a; }
constexpr Jet2 operator+(const Jet2& a, double s) { return {a.v + s, a.d1, a.d2}; }
constexpr Jet2 operator+(double s, const Jet2& a) { return a + s; }
constexpr Jet2 operator-(const Jet2& a, double s) { return {a.v - s, a.d1, a.d2}; }
constexpr Jet2 operator-(double s, const Jet2& a) { return {s - a.v, -a.d1, -a.d2}; }

// f(g) given f, f', f'' evaluated at g.v
constexpr Jet2 compose(double f0, double f1, double f2, const Jet2& g) {
    return {f0, f1 * g.d1, f2 * g.d1 * g.d1 + f1 * g.d2};
}

constexpr Jet2 reciprocal(const Jet2& a) {
    const double inv = 1.0 / a.v;
    return compose(inv, -inv * inv, 2.0 * inv * inv * inv, a);
}

constexpr Jet2 operator/(const Jet2& a, const Jet2& b) { return a * reciprocal(b); }
constexpr Jet2 operator/(const Jet2& a, double s) { return (1.0 / s) * a; }
constexpr Jet2 operator/(double s, const Jet2& a) { return s * reciprocal(a); }

inline Jet2 sinh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(s, c, s, a);
}
inline Jet2 cosh(const Jet2& a) {
    const double s = std::sinh(a.v), c = std::cosh(a.v);
    return compose(c, s, c, a);
}
inline Jet2 exp(const Jet2& a) {
    const double e = std::exp(a.v);
    return compose(e, e, e, a);
}
inline Jet2 log(const Jet2& a) { return compose(std::log(a.v), 1.0 / a.v, -1.0 / (a.v * a.v), a); }
inline Jet2 sqrt(const Jet2& a) {
    const double s = std::sqrt(a.v);
    return compose(s, 0.5 / s, -0.25 / (s * a.v), a);
}

}  // namespace curvop
