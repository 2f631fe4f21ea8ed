#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "revolve/function.hpp"

// Quadrature and root-finding primitives shared by the geometry modules.
namespace revolve::numerics {

/// Adaptive Gauss-Kronrod quadrature of a smooth integrand over [a, b].
/// Throws QuadratureFailure if the error estimate exceeds `tol * max(1, L1)`.
double integrate_smooth(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12);

/// Integrand for tanh-sinh quadrature that may be singular at the endpoints.
/// It receives the abscissa together with the signed distance to the nearest
/// endpoint: negative offsets measure from `a`, positive offsets from `b`.
/// Near an endpoint `x` itself may round onto the endpoint, while the offset
/// stays accurate down to the smallest normal double.
using EndpointIntegrand = std::function<double(double x, double offset)>;

/// Double-exponential (tanh-sinh) quadrature of an integrand with integrable
/// endpoint singularities. Supports b < a (returns the negated integral).
double integrate_endpoint_singular(const EndpointIntegrand& f, double a, double b,
                                   double tol = 1e-12);

/// Bracketed root of f on [a, b] with f(a) f(b) <= 0, located to `xtol`.
/// Throws RootBracketFailure if the endpoint signs do not bracket a root.
double find_root(const std::function<double(double)>& f, double a, double b,
                 double xtol = 1e-12);

/// Maximal sub-intervals of [lo, hi] on which g < 0, found by sampling g on
/// `samples` uniform points and refining each sign change with find_root.
std::vector<Interval> negative_regions(const std::function<double(double)>& g, Interval range,
                                       int samples = 2048, double xtol = 1e-12);

/// First derivative at t[i] of the quartic through five neighbouring samples
/// f(j) (centred where possible). Exact for quartics on any spacing; needs
/// t.size() >= 5.
template <class Get>
inline double stencil_derivative(std::span<const double> t, std::size_t i, Get f)
{
    const std::size_t n = t.size();
    const std::size_t first = std::min(i >= 2 ? i - 2 : 0, n - 5);
    double sum = 0.0;
    for (std::size_t j = first; j < first + 5; ++j) {
        double w;
        if (j == i) {
            w = 0.0;
            for (std::size_t k = first; k < first + 5; ++k)
                if (k != i)
                    w += 1 / (t[i] - t[k]);
        } else {
            double num = 1.0;
            double den = 1.0;
            for (std::size_t k = first; k < first + 5; ++k) {
                if (k == j)
                    continue;
                den *= t[j] - t[k];
                if (k != i)
                    num *= t[i] - t[k];
            }
            w = num / den;
        }
        sum += w * f(j);
    }
    return sum;
}

/// Cumulative antiderivative of an integrand, anchored at a chosen point.
///
/// Node values over a fixed grid are computed once with adaptive Gauss-Kronrod;
/// evaluation adds a local quadrature from the nearest node, so accuracy is that
/// of the quadrature rather than of an interpolant. Immutable after
/// construction, so concurrent evaluation is safe.
class Antiderivative {
public:
    Antiderivative() = default;
    Antiderivative(ScalarFunction integrand, Interval domain, double anchor, double tol = 1e-12,
                   int nodes = 65);

    /// Integral of the integrand from the anchor to x.
    double operator()(double x) const;

    const ScalarFunction& integrand() const { return integrand_; }
    double anchor() const { return anchor_; }
    Interval span() const { return span_; }

private:
    ScalarFunction integrand_;
    Interval span_;
    double anchor_ = 0.0;
    double tol_ = 1e-12;
    std::vector<double> nodes_;
    std::vector<double> values_;
};

}  // namespace revolve::numerics
