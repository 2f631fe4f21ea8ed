#pragma once

#include <cmath>

namespace revolve {

/// Second-order truncated Taylor number: carries f, f' and f'' through
/// arithmetic so closed-form curves give exact tangents and curvatures.
struct Jet {
    double v = 0.0;
    double d1 = 0.0;
    double d2 = 0.0;

    constexpr Jet() = default;
    constexpr Jet(double value) : v(value) {}
    constexpr Jet(double value, double first, double second) : v(value), d1(first), d2(second) {}

    static constexpr Jet variable(double t) { return {t, 1.0, 0.0}; }
};

// Composition with a scalar function g given g(v), g'(v), g''(v).
constexpr Jet chain(const Jet& a, double g, double dg, double ddg)
{
    return {g, dg * a.d1, ddg * a.d1 * a.d1 + dg * a.d2};
}

constexpr Jet operator+(const Jet& a, const Jet& b) { return {a.v + b.v, a.d1 + b.d1, a.d2 + b.d2}; }
constexpr Jet operator-(const Jet& a, const Jet& b) { return {a.v - b.v, a.d1 - b.d1, a.d2 - b.d2}; }
constexpr Jet operator-(const Jet& a) { return {-a.v, -a.d1, -a.d2}; }
constexpr Jet operator*(const Jet& a, const Jet& b)
{
    return {a.v * b.v, a.d1 * b.v + a.v * b.d1, a.d2 * b.v + 2 * a.d1 * b.d1 + a.v * b.d2};
}
constexpr Jet operator/(const Jet& a, const Jet& b)
{
    const double inv = 1.0 / b.v;
    const Jet r{inv, -b.d1 * inv * inv, (2 * b.d1 * b.d1 * inv - b.d2) * inv * inv};
    return a * r;
}
constexpr Jet operator+(const Jet& a, double b) { return {a.v + b, a.d1, a.d2}; }
constexpr Jet operator+(double a, const Jet& b) { return {a + b.v, b.d1, b.d2}; }
constexpr Jet operator-(const Jet& a, double b) { return {a.v - b, a.d1, a.d2}; }
constexpr Jet operator-(double a, const Jet& b) { return {a - b.v, -b.d1, -b.d2}; }
constexpr Jet operator*(const Jet& a, double b) { return {a.v * b, a.d1 * b, a.d2 * b}; }
constexpr Jet operator*(double a, const Jet& b) { return {a * b.v, a * b.d1, a * b.d2}; }
constexpr Jet operator/(const Jet& a, double b) { return {a.v / b, a.d1 / b, a.d2 / b}; }
inline Jet operator/(double a, const Jet& b) { return Jet(a) / b; }

inline Jet exp(const Jet& a)
{
    const double e = std::exp(a.v);
    return chain(a, e, e, e);
}
inline Jet log(const Jet& a) { return chain(a, std::log(a.v), 1 / a.v, -1 / (a.v * a.v)); }
inline Jet sin(const Jet& a)
{
    const double s = std::sin(a.v);
    return chain(a, s, std::cos(a.v), -s);
}
inline Jet cos(const Jet& a)
{
    const double c = std::cos(a.v);
    return chain(a, c, -std::sin(a.v), -c);
}
inline Jet tan(const Jet& a)
{
    const double t = std::tan(a.v);
    const double sec2 = 1 + t * t;
    return chain(a, t, sec2, 2 * t * sec2);
}
inline Jet sinh(const Jet& a)
{
    const double s = std::sinh(a.v);
    return chain(a, s, std::cosh(a.v), s);
}
inline Jet cosh(const Jet& a)
{
    const double c = std::cosh(a.v);
    return chain(a, c, std::sinh(a.v), c);
}
inline Jet atan(const Jet& a)
{
    const double q = 1 / (1 + a.v * a.v);
    return chain(a, std::atan(a.v), q, -2 * a.v * q * q);
}
inline Jet asin(const Jet& a)
{
    const double q = 1 / std::sqrt(1 - a.v * a.v);
    return chain(a, std::asin(a.v), q, a.v * q * q * q);
}
inline Jet sqrt(const Jet& a)
{
    const double r = std::sqrt(a.v);
    return chain(a, r, 0.5 / r, -0.25 / (r * a.v));
}
inline Jet pow(const Jet& a, double p)
{
    const double g = std::pow(a.v, p);
    const double dg = p * std::pow(a.v, p - 1);
    const double ddg = p * (p - 1) * std::pow(a.v, p - 2);
    return chain(a, g, dg, ddg);
}

}  // namespace revolve
