#pragma once

#include <algorithm>
#include <functional>

namespace revolve {

/// Closed interval of the real line.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double width() const { return hi - lo; }
    double mid() const { return 0.5 * (lo + hi); }
    bool contains(double x) const { return x >= lo && x <= hi; }
    double clamp(double x) const { return std::clamp(x, lo, hi); }

    friend bool operator==(const Interval&, const Interval&) = default;
};

/// Smallest interval containing both `a` and the point `x`.
inline Interval hull(Interval a, double x)
{
    return {std::min(a.lo, x), std::max(a.hi, x)};
}

/// A real function of one variable with an optional exact derivative.
///
/// When no derivative is supplied, `diff` falls back to a Richardson-extrapolated
/// central difference, which is accurate to roughly 1e-10 relative for smooth
/// inputs.
class ScalarFunction {
public:
    using Fn = std::function<double(double)>;

    ScalarFunction() = default;
    ScalarFunction(Fn value, Fn derivative = {})
        : value_(std::move(value)), derivative_(std::move(derivative))
    {
    }

    double operator()(double x) const { return value_(x); }
    double diff(double x) const;

    bool has_derivative() const { return static_cast<bool>(derivative_); }
    explicit operator bool() const { return static_cast<bool>(value_); }

    const Fn& value_fn() const { return value_; }

    static ScalarFunction constant(double c);

private:
    Fn value_;
    Fn derivative_;
};

}  // namespace revolve
