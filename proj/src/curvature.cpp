#include "revolve/curvature.hpp"

#include <cmath>
#include <sstream>

#include "revolve/error.hpp"

namespace revolve {

PrincipalCurvatures principal_curvatures(const Momentum& m, double x)
{
    const double km = m.deriv(x);
    if (std::abs(x) < axis_tolerance(m.domain())) {
        const double k0 = m.eval(x);
        if (std::abs(k0) > 1e-12) {
            std::ostringstream msg;
            msg << "K(0) = " << k0 << " so K(x)/x has no finite limit on the axis";
            throw Error(ErrorKind::AxisSingularity, msg.str());
        }
        return {km, km};
    }
    return {km, m.eval(x) / x};
}

double mean_curvature(const Momentum& m, double x)
{
    const auto [km, kp] = principal_curvatures(m, x);
    return 0.5 * (km + kp);
}

double gauss_curvature(const Momentum& m, double x)
{
    const auto [km, kp] = principal_curvatures(m, x);
    return km * kp;
}

CurvatureSample curvature_sample(const Momentum& m, double x)
{
    const auto [km, kp] = principal_curvatures(m, x);
    return CurvatureSample::from_principal(x, km, kp);
}

double gauss_from_mean(const numerics::Antiderivative& x_times_h, double gamma, double x)
{
    if (x == 0.0)
        throw Error(ErrorKind::AxisSingularity, "gauss_from_mean is singular at x = 0");
    const double a = x_times_h(x) + gamma;
    const double da = x_times_h.integrand()(x);
    return (2.0 / x) * (2 * a * da / (x * x) - 2 * a * a / (x * x * x));
}

double gauss_from_mean(const ScalarFunction& h, double gamma, Interval domain, double anchor,
                       double x)
{
    numerics::Antiderivative xh(ScalarFunction([h](double t) { return t * h(t); }), domain,
                                anchor);
    return gauss_from_mean(xh, gamma, x);
}

double gauss_monomial(double mu, double n, double gamma, double x)
{
    if (n == -2.0)
        throw Error(ErrorKind::ExponentForbidden, "the exponent n = -2 has no Gaussian constant");
    const double np2 = n + 2;
    return 4 * (n + 1) * mu * mu / (np2 * np2) * std::pow(x, 2 * n)
           + 4 * n * gamma * mu / np2 * std::pow(x, n - 2) - 4 * gamma * gamma / std::pow(x, 4);
}

double constraint_residual(const numerics::Antiderivative& x_times_h,
                           const numerics::Antiderivative& x_times_gauss, double gamma_h,
                           double c_g, double x)
{
    const double a = x_times_h(x) + gamma_h;
    const double b = x_times_gauss(x) + c_g;
    return a * a - 0.5 * x * x * b;
}

double weingarten_residual(const Momentum& m, double q, double x)
{
    const auto [km, kp] = principal_curvatures(m, x);
    return km - q * kp;
}

std::string_view to_string(MeanInverseBranch branch)
{
    switch (branch) {
    case MeanInverseBranch::Parabolic: return "Parabolic";
    case MeanInverseBranch::Trigonometric: return "Trigonometric";
    case MeanInverseBranch::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

MeanInverseClass classify_mean_inverse(double mu)
{
    if (!(mu > 0.0)) {
        std::ostringstream msg;
        msg << "mu = " << mu << " must be positive";
        throw Error(ErrorKind::NonPositiveMu, msg.str());
    }
    if (mu == 0.5)
        return {MeanInverseBranch::Parabolic, 0.0};
    if (mu < 0.5)
        return {MeanInverseBranch::Trigonometric, std::asin(2 * mu)};
    return {MeanInverseBranch::Hyperbolic, std::acosh(2 * mu)};
}

}  // namespace revolve
