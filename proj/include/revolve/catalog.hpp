#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "revolve/momentum.hpp"
#include "revolve/reconstruct.hpp"

// Closed-form generatrices and momenta of the named rotational surfaces.
// They serve as analytic oracles for the generic reconstruction pipeline.
namespace revolve::catalog {

/// Point of a parametrized plane curve with first and second derivatives.
struct CurvePoint {
    double x = 0.0;
    double z = 0.0;
    double dx = 0.0;
    double dz = 0.0;
    double ddx = 0.0;
    double ddz = 0.0;

    double speed() const;
    /// z'/|alpha'|: the momentum measured on the parametrization.
    double momentum() const;
    /// Signed curvature, equal to K'(x) for the meridian.
    double curvature() const;
};

struct ClosedProfile {
    double t0 = 0.0;
    double t1 = 1.0;
    std::function<CurvePoint(double)> at;
    bool unit_speed = false;  ///< parameter is arc length
};

struct Param {
    std::string name;
    double value = 0.0;
};

struct CatalogEntry {
    std::string name;
    std::vector<Param> params;
    std::optional<Momentum> momentum;  ///< empty only for the cylinder
    std::string momentum_expression;
    std::optional<ClosedProfile> closed_profile;
    std::string provenance;
    std::optional<double> weingarten_q;  ///< k_m = q k_p holds when set
    std::string regime;
    std::string alias;

    double param(std::string_view key) const;
};

CatalogEntry plane();
CatalogEntry cone(double theta0);
CatalogEntry sphere(double radius);
CatalogEntry torus(double a, double radius);
CatalogEntry catenoid(double a);
CatalogEntry cylinder(double a);

/// Hopf-Kuhnel generatrix x = a cos^(1/q) t, z = (a/|q|) int_0^t cos^(1/q) v dv,
/// traversed so that the momentum is +(x/a)^q. The parameter runs over
/// [-t_max, t_max]; by default 1.5 for q > 0 and 1.2 for q < 0.
CatalogEntry hopf_kuhnel(double q, double a, std::optional<double> t_max = {});

/// Elasticoid with momentum a x^2 - k. No closed profile; the regime label
/// follows the classical modulus ranges.
CatalogEntry elasticoid(double a, double k);

/// Modulus k in (0, 1) at which the elastic curve with momentum a x^2 - k closes
/// into a figure eight: int_0^{x+} K / sqrt(1 - K^2) dx = 0, x+ = sqrt((k+1)/a).
double pseudolemniscate_modulus(double a);

/// Closure integral used by pseudolemniscate_modulus.
double elastic_closure_integral(double a, double k);

/// Generalized catenoid of equal strength, momentum a e^x + sin(beta).
CatalogEntry equal_strength(double a, double beta, double s_range = 3.0);
/// Ondualysoid (alysoid generatrix), momentum a e^x - 1.
CatalogEntry ondualysoid(double a, double s_range = 3.0);
/// Loopoid, momentum a e^x - cosh(eta). The printed height formula jumps by
/// 2 pi at the poles of the tangent; the stored profile is the continuous branch.
CatalogEntry loopoid(double a, double eta, double s_range = 3.0);

/// Graph z(x) of the H = mu/x surfaces with momentum 2 mu + c/x, on the branch
/// interval. `x_max` bounds branches that are unbounded above.
CatalogEntry mean_inverse_profile(double mu, double c, std::optional<double> x_max = {});

/// Closed form of the H = mu/x height function on its branch (the + sign for
/// mu = 1/2), anchored as printed.
double mean_inverse_height(double mu, double c, double x);

/// Branch interval of the H = mu/x family; hi is +infinity when unbounded.
Interval mean_inverse_interval(double mu, double c);

/// Cycloid x = a + R(1 - cos t), z = R(t - sin t - pi), t in [0, 2 pi].
CatalogEntry transonducycloid(double radius, double a);

/// Builds an entry by name with the given parameters; missing parameters
/// take the defaults used by `defaults()`.
CatalogEntry build(std::string_view name, const std::map<std::string, double>& params);

/// Names accepted by `build`.
std::vector<std::string> names();

/// One entry per family with default parameters.
std::vector<CatalogEntry> defaults();

/// Samples a closed profile uniformly in its parameter and reparametrizes by
/// arc length (cumulative quadrature of the speed).
Profile sample_closed_profile(const ClosedProfile& curve, int n);

}  // namespace revolve::catalog
