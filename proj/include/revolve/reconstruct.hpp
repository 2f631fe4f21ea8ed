#pragma once

#include <iosfwd>
#include <span>
#include <vector>

#include "revolve/curvature.hpp"
#include "revolve/momentum.hpp"
#include "revolve/ode.hpp"

namespace revolve {

/// One arc-length sample of a generatrix with its unit tangent.
struct ProfileSample {
    double s = 0.0;
    double x = 0.0;
    double z = 0.0;
    double tx = 1.0;
    double tz = 0.0;
};

enum class ProfileStop { ArcLengthLimit, DomainBoundary };

/// Arc-length sampled generatrix. `branch_events` lists the arc lengths at
/// which the tangent became vertical (K^2 = 1) and the x-direction of travel
/// reversed.
struct Profile {
    std::vector<ProfileSample> samples;
    std::vector<double> branch_events;
    ProfileStop stop = ProfileStop::ArcLengthLimit;

    double length() const { return samples.empty() ? 0.0 : samples.back().s - samples.front().s; }
};

enum class Clustering { Cosine, Uniform };

struct ProfileOptions {
    double s_max = 1.0;
    int samples_per_branch = 512;
    ode::Tolerance tolerance{1e-10, 1e-12};
    Clustering clustering = Clustering::Cosine;
};

/// Arc length of the monotone branch between x0 and x1:
///   s = int dx / sqrt(1 - K(x)^2),
/// by tanh-sinh quadrature so that inverse-square-root endpoint singularities
/// (turning points) are integrated accurately. Negative when x1 < x0.
double arclength(const Momentum& m, double x0, double x1, double tol = 1e-12);

/// Traces the generatrix with unit speed starting at `start_x`, moving in the
/// x-direction `direction` (+1 or -1), until arc length `options.s_max` or the
/// momentum's domain boundary is reached.
///
/// The curve is integrated as x' = cos(phi), z' = sin(phi), phi' = K'(x), whose
/// first integral sin(phi) = K(x) is the momentum. Turning points where
/// K^2 = 1 are crossed smoothly and recorded; a turning point with K' = 0 is
/// degenerate and raises EventLocatorFailure.
Profile integrate_profile(const Momentum& m, double start_x, int direction,
                          const ProfileOptions& options);

/// Samples of the height function of a graph z(x).
struct HeightSamples {
    std::vector<double> x;
    std::vector<double> z;
};

/// z(x) = int_{x0}^{x} K / sqrt(1 - K^2) dx on a monotone grid, z(grid[0]) = 0.
/// Each grid segment is integrated once, so differences of consecutive
/// outputs equal the segment integrals.
HeightSamples graph_height(const Momentum& m, std::span<const double> grid, double tol = 1e-12);

/// Uniform-grid overload with n points on [x0, x1].
HeightSamples graph_height(const Momentum& m, double x0, double x1, int n, double tol = 1e-12);

struct Point2 {
    double x = 0.0;
    double z = 0.0;
};

struct MomentumSample {
    double x = 0.0;
    double K = 0.0;
};

/// Discrete momentum K = z'/|alpha'| of a polyline, differentiating with
/// five-point stencils in cumulative chord length. Accurate when the samples
/// come from a smooth curve, uniformly spaced or not.
std::vector<MomentumSample> momentum_of_profile(std::span<const Point2> points);

std::vector<Point2> points_of(const Profile& profile);

/// Curvatures measured from samples: k_m is the turning rate of the tangent
/// angle per unit arc length (five-point stencils in s), k_p = tz / x; H and
/// K_G follow by identities.
std::vector<CurvatureSample> discrete_curvatures(std::span<const ProfileSample> samples);

/// CSV with header `s,x,z,tx,tz` and 17 significant digits.
void write_profile_csv(std::ostream& out, const Profile& profile);
Profile read_profile_csv(std::istream& in);

}  // namespace revolve
