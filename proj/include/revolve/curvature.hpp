#pragma once

#include <string_view>

#include "revolve/function.hpp"
#include "revolve/momentum.hpp"
#include "revolve/numerics.hpp"

namespace revolve {

/// Curvatures of a rotational surface at distance x from the axis.
struct CurvatureSample {
    double x = 0.0;
    double k_m = 0.0;  ///< principal curvature along meridians
    double k_p = 0.0;  ///< principal curvature along parallels
    double H = 0.0;
    double K_G = 0.0;

    static CurvatureSample from_principal(double x, double k_m, double k_p)
    {
        return {x, k_m, k_p, 0.5 * (k_m + k_p), k_m * k_p};
    }
};

struct PrincipalCurvatures {
    double k_m = 0.0;
    double k_p = 0.0;
};

/// (k_m, k_p) = (K'(x), K(x)/x). On the axis k_p takes its limit K'(0) when
/// K(0) = 0 and throws AxisSingularity otherwise.
PrincipalCurvatures principal_curvatures(const Momentum& m, double x);

/// 2H = K'(x) + K(x)/x.
double mean_curvature(const Momentum& m, double x);

/// K_G = K(x) K'(x) / x.
double gauss_curvature(const Momentum& m, double x);

CurvatureSample curvature_sample(const Momentum& m, double x);

/// Gauss curvature of the surface whose mean curvature is H, given the
/// antiderivative A of x H(x) and the additive constant gamma, so that
/// int x H dx = A(x) + gamma:
///   K_G = (2/x) d/dx[(A + gamma)^2 / x^2],
/// with the derivative expanded analytically using A'(x) = x H(x).
double gauss_from_mean(const numerics::Antiderivative& x_times_h, double gamma, double x);

/// Convenience overload that builds the antiderivative of x H(x) on `domain`,
/// anchored at `anchor`.
double gauss_from_mean(const ScalarFunction& h, double gamma, Interval domain, double anchor,
                       double x);

/// Gauss curvature of the surfaces with H = mu x^n and Gaussian constant gamma.
/// Throws ExponentForbidden for n = -2.
double gauss_monomial(double mu, double n, double gamma, double x);

/// Left side minus right side of
///   (int x H dx)^2 = (x^2 / 2) int x K_G dx,
/// where int x H dx = xh(x) + gamma_h and int x K_G dx = xk(x) + c_g.
/// Zero certifies that (H, K_G) is realized by one rotational surface.
double constraint_residual(const numerics::Antiderivative& x_times_h,
                           const numerics::Antiderivative& x_times_gauss, double gamma_h,
                           double c_g, double x);

/// k_m(x) - q k_p(x).
double weingarten_residual(const Momentum& m, double q, double x);

enum class MeanInverseBranch { Parabolic, Trigonometric, Hyperbolic };

std::string_view to_string(MeanInverseBranch branch);

/// Branch of the H = mu/x family: mu = 1/2 parabolic, mu < 1/2 trigonometric
/// with theta = asin(2 mu), mu > 1/2 hyperbolic with delta = acosh(2 mu).
struct MeanInverseClass {
    MeanInverseBranch branch = MeanInverseBranch::Parabolic;
    double angle = 0.0;  ///< theta or delta; zero for the parabolic branch
};

MeanInverseClass classify_mean_inverse(double mu);

}  // namespace revolve
