#include "revolve/function.hpp"

#include <algorithm>
#include <cmath>

namespace revolve {

double ScalarFunction::diff(double x) const
{
    if (derivative_)
        return derivative_(x);
    // Two central differences combined by Richardson extrapolation.
    const double h = 1e-3 * std::max(1.0, std::abs(x));
    const double d1 = (value_(x + h) - value_(x - h)) / (2 * h);
    const double d2 = (value_(x + h / 2) - value_(x - h / 2)) / h;
    return (4 * d2 - d1) / 3;
}

ScalarFunction ScalarFunction::constant(double c)
{
    return ScalarFunction([c](double) { return c; }, [](double) { return 0.0; });
}

}  // namespace revolve
