#include "support/properties.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "revolve/curvature.hpp"
#include "revolve/error.hpp"
#include "revolve/mesh.hpp"
#include "revolve/numerics.hpp"
#include "revolve/reconstruct.hpp"

namespace revolve::testing {

namespace {

constexpr double pi = std::numbers::pi;

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

std::vector<double> grid(Interval d, int n)
{
    std::vector<double> out(n);
    for (int i = 0; i < n; ++i)
        out[i] = i == n - 1 ? d.hi : d.lo + d.width() * i / (n - 1);
    return out;
}

class Recorder {
public:
    void declare(const std::string& name, double tolerance)
    {
        if (!index_.count(name)) {
            index_[name] = results_.size();
            results_.push_back({name, tolerance});
        }
    }

    // Residual of one case; non-finite residuals count as failures.
    void record(const std::string& name, double residual, const std::string& label)
    {
        auto& r = results_.at(index_.at(name));
        const double v = std::isfinite(residual) ? std::abs(residual) : HUGE_VAL;
        if (v > r.tolerance && r.first_failure.empty())
            r.first_failure = label;
        r.worst = std::max(r.worst, v);
    }

    void count(const std::string& name) { ++results_.at(index_.at(name)).cases; }

    std::vector<PropertyResult> results() const { return results_; }

private:
    std::map<std::string, std::size_t> index_;
    std::vector<PropertyResult> results_;
};

// Largest residual of f over the points, counted as one case.
void check_all(Recorder& rec, const std::string& name, const std::vector<double>& xs,
               const std::function<double(double)>& f, const std::string& label)
{
    double worst = 0.0;
    for (double x : xs) {
        const double v = f(x);
        worst = std::isfinite(v) ? std::max(worst, std::abs(v)) : HUGE_VAL;
    }
    rec.record(name, worst, label);
    rec.count(name);
}

double relative(double got, double want)
{
    return (got - want) / std::max(1.0, std::abs(want));
}

}  // namespace

double RandomMomentum::operator()(double x) const
{
    const double t = x - centre;
    return coef[0] + t * (coef[1] + t * (coef[2] + t * coef[3]));
}

double RandomMomentum::deriv(double x) const
{
    const double t = x - centre;
    return coef[1] + t * (2 * coef[2] + t * 3 * coef[3]);
}

double RandomMomentum::second(double x) const
{
    const double t = x - centre;
    return 2 * coef[2] + 6 * coef[3] * t;
}

Momentum RandomMomentum::momentum() const
{
    const RandomMomentum self = *this;
    return Momentum([self](double x) { return self(x); }, [self](double x) { return self.deriv(x); },
                    domain);
}

RandomMomentum random_momentum(std::mt19937_64& rng)
{
    RandomMomentum r;
    const double lo = uniform(rng, 0.3, 1.5);
    r.domain = {lo, lo + uniform(rng, 0.5, 2.0)};
    r.centre = r.domain.mid();
    const int degree = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int k = 0; k <= degree; ++k)
        r.coef[k] = uniform(rng, -1, 1);
    double peak = 0.0;
    for (double x : grid(r.domain, 2001))
        peak = std::max(peak, std::abs(r(x)));
    const double target = uniform(rng, 0.2, 0.95);
    if (peak > 0)
        for (double& c : r.coef)
            c *= target / peak;
    return r;
}

std::vector<PropertyResult> run_property_suite(int cases, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Recorder rec;
    rec.declare("kp momentum recovers p", 1e-12);
    rec.declare("mean prescription round trip", 1e-8);
    rec.declare("gauss prescription round trip", 1e-8);
    rec.declare("gauss sign covariance", 0.0);
    rec.declare("km constant shift", 1e-12);
    rec.declare("mean constant shift", 1e-12);
    rec.declare("gauss constant shift", 1e-12);
    rec.declare("mean and gauss from principal curvatures", 1e-14);
    rec.declare("gauss_from_mean coupling", 1e-9);
    rec.declare("constraint vanishes on realizable pairs", 1e-9);
    rec.declare("monomial gauss curvature", 1e-10);
    rec.declare("profile tangent carries the momentum", 1e-8);
    rec.declare("momentum of profile round trip", 1e-6);
    rec.declare("meridian curvature round trip", 1e-4);
    rec.declare("arclength additivity", 2e-10);
    rec.declare("z translation invariance", 1e3);
    rec.declare("graph height slope", 1e-8);
    rec.declare("fundamental forms eigenvalues", 1e-14);
    rec.declare("mesh rotation symmetry", 1e-14);
    rec.declare("open tube topology", 0.0);

    for (int c = 0; c < cases; ++c) {
        const RandomMomentum P = random_momentum(rng);
        const Momentum exact = P.momentum();
        const Interval d = P.domain;
        const double lo = d.lo;
        std::ostringstream label_stream;
        label_stream.precision(17);
        label_stream << "case " << c << ": domain [" << d.lo << ", " << d.hi << "], centre " << P.centre
                     << ", coef {" << P.coef[0] << ", " << P.coef[1] << ", " << P.coef[2] << ", "
                     << P.coef[3] << "}";
        const std::string label = label_stream.str();
        const auto xs = grid(d, 100);

        try {
            const ScalarFunction p([P](double x) { return P(x) / x; },
                                   [P](double x) { return (P.deriv(x) - P(x) / x) / x; });
            const Momentum from_kp = momentum_from_kp(p, d);
            check_all(rec, "kp momentum recovers p", xs,
                      [&](double x) { return (from_kp(x) / x - p(x)) / std::max(1.0, std::abs(p(x))); }, label);

            const ScalarFunction h([P](double x) { return 0.5 * (P.deriv(x) + P(x) / x); },
                                   [P](double x) { return 0.5 * (P.second(x) + (P.deriv(x) - P(x) / x) / x); });
            const Momentum from_mean = momentum_from_mean(h, lo * P(lo), d, lo);
            check_all(rec, "mean prescription round trip", xs,
                      [&](double x) {
                          return std::abs(relative(mean_curvature(from_mean, x), h(x))) + std::abs(from_mean(x) - P(x));
                      },
                      label);

            const ScalarFunction kg([P](double x) { return P(x) * P.deriv(x) / x; });
            const double c0 = P(lo) * P(lo);
            const Momentum plus = momentum_from_gauss(kg, c0, 1, d, lo);
            const Momentum minus = momentum_from_gauss(kg, c0, -1, d, lo);
            std::vector<double> off_zero;
            for (double x : xs)
                if (std::abs(P(x)) > 0.05)
                    off_zero.push_back(x);
            check_all(rec, "gauss prescription round trip", off_zero,
                      [&](double x) {
                          return std::abs(relative(gauss_curvature(plus, x), kg(x))) + std::abs(plus(x) - std::abs(P(x)));
                      },
                      label);
            check_all(rec, "gauss sign covariance", xs,
                      [&](double x) {
                          const double slopes = std::abs(P(x)) > 0.05 ? std::abs(minus.deriv(x) + plus.deriv(x)) : 0.0;
                          return std::abs(minus(x) + plus(x)) + slopes;
                      },
                      label);

            const double c1 = uniform(rng, -0.5, 0.5);
            const double c2 = uniform(rng, -0.5, 0.5);
            const ScalarFunction km([P](double x) { return P.deriv(x); });
            const Momentum k1 = momentum_from_km(km, c1, d, lo);
            const Momentum k2 = momentum_from_km(km, c2, d, lo);
            check_all(rec, "km constant shift", xs, [&](double x) { return k1(x) - k2(x) - (c1 - c2); }, label);
            const Momentum m1 = momentum_from_mean(h, c1, d, lo);
            const Momentum m2 = momentum_from_mean(h, c2, d, lo);
            check_all(rec, "mean constant shift", xs,
                      [&](double x) { return x * (m1(x) - m2(x)) - (c1 - c2); }, label);
            const double g1 = c0 + 0.1 + std::abs(c1);
            const double g2 = c0 + 0.1 + std::abs(c2);
            const Momentum q1 = momentum_from_gauss(kg, g1, 1, d, lo);
            const Momentum q2 = momentum_from_gauss(kg, g2, 1, d, lo);
            check_all(rec, "gauss constant shift", xs,
                      [&](double x) { return q1(x) * q1(x) - q2(x) * q2(x) - (g1 - g2); }, label);

            check_all(rec, "mean and gauss from principal curvatures", xs,
                      [&](double x) {
                          const auto k = principal_curvatures(exact, x);
                          return std::abs(mean_curvature(exact, x) - 0.5 * (k.k_m + k.k_p)) +
                                 std::abs(gauss_curvature(exact, x) - k.k_m * k.k_p);
                      },
                      label);

            const double gamma = uniform(rng, -0.2, 0.2);
            const Momentum coupled = momentum_from_mean(h, 2 * gamma, d, lo);
            const numerics::Antiderivative xh(ScalarFunction([h](double x) { return x * h(x); }), d, lo);
            check_all(rec, "gauss_from_mean coupling", xs,
                      [&](double x) { return relative(gauss_from_mean(xh, gamma, x), gauss_curvature(coupled, x)); },
                      label);

            const numerics::Antiderivative xk(ScalarFunction([kg](double x) { return x * kg(x); }), d, lo);
            check_all(rec, "constraint vanishes on realizable pairs", xs,
                      [&](double x) { return constraint_residual(xh, xk, lo * P(lo) / 2, c0 / 2, x); }, label);

            double n = uniform(rng, -3, 2);
            if (std::abs(n + 2) < 0.2)
                n = 1.0;
            const double mu = uniform(rng, 0.2, 2);
            const double G = uniform(rng, -0.3, 0.3);
            const Momentum mono(
                [=](double x) { return 2 * mu / (n + 2) * std::pow(x, n + 1) + 2 * G / x; },
                [=](double x) { return 2 * mu * (n + 1) / (n + 2) * std::pow(x, n) - 2 * G / (x * x); }, d);
            check_all(rec, "monomial gauss curvature", xs,
                      [&](double x) { return relative(gauss_curvature(mono, x), gauss_monomial(mu, n, G, x)); },
                      label);

            ProfileOptions opt;
            opt.s_max = 2 * d.width();
            const double start = d.lo + uniform(rng, 0.05, 0.95) * d.width();
            const int direction = uniform(rng, 0, 1) < 0.5 ? -1 : 1;
            const Profile prof = integrate_profile(exact, start, direction, opt);
            double tangent = 0.0;
            for (const auto& q : prof.samples)
                tangent = std::max(tangent, std::abs(q.tz - P(q.x)) + std::abs(std::hypot(q.tx, q.tz) - 1));
            rec.record("profile tangent carries the momentum", tangent, label);
            rec.count("profile tangent carries the momentum");

            if (prof.samples.size() >= 5) {
                const auto pts = points_of(prof);
                const auto measured = momentum_of_profile(pts);
                const auto curv = discrete_curvatures(prof.samples);
                double trip_a = 0.0;
                double trip_b = 0.0;
                for (std::size_t i = 2; i + 2 < measured.size(); ++i) {
                    trip_a = std::max(trip_a, std::abs(measured[i].K - P(measured[i].x)));
                    trip_b = std::max(trip_b, std::abs(curv[i].k_m - P.deriv(prof.samples[i].x)));
                }
                rec.record("momentum of profile round trip", trip_a, label);
                rec.count("momentum of profile round trip");
                rec.record("meridian curvature round trip", trip_b, label);
                rec.count("meridian curvature round trip");

                const double z0 = uniform(rng, -5, 5);
                auto shifted = pts;
                for (auto& q : shifted)
                    q.z += z0;
                const auto moved = momentum_of_profile(shifted);
                double shift = 0.0;
                for (std::size_t i = 0; i < moved.size(); ++i)
                    shift = std::max(shift, std::abs(moved[i].K - measured[i].K) + std::abs(moved[i].x - measured[i].x));
                // Shifting rounds each z by up to eps (|z| + |z0|); the stencils
                // divide that by the sample spacing.
                double zmax = 0.0;
                double spacing = HUGE_VAL;
                for (std::size_t i = 0; i < pts.size(); ++i) {
                    zmax = std::max(zmax, std::abs(pts[i].z));
                    if (i > 0)
                        spacing = std::min(spacing, prof.samples[i].s - prof.samples[i - 1].s);
                }
                const double rounding = std::numeric_limits<double>::epsilon() * (zmax + std::abs(z0)) / spacing;
                rec.record("z translation invariance", shift / rounding, label);
                rec.count("z translation invariance");

                std::vector<ProfileSample> coarse;
                for (std::size_t i = 0; i < prof.samples.size(); i += 8)
                    coarse.push_back(prof.samples[i]);
                Profile thin;
                thin.samples = coarse;
                const int n_theta = std::uniform_int_distribution<int>(8, 40)(rng);
                SurfaceMesh mesh = revolve_profile(thin, n_theta);
                const double ca = std::cos(2 * pi / n_theta);
                const double sa = std::sin(2 * pi / n_theta);
                double sym = 0.0;
                for (const auto& ring : mesh.rings) {
                    for (int k = 0; k < static_cast<int>(ring.size()); ++k) {
                        const auto& v = mesh.vertices[ring[k]];
                        const auto& w = mesh.vertices[ring[(k + 1) % ring.size()]];
                        const double scale = std::max(1.0, std::hypot(v[0], v[1]));
                        sym = std::max(sym, (std::abs(ca * v[0] - sa * v[1] - w[0]) + std::abs(sa * v[0] + ca * v[1] - w[1]) +
                                             std::abs(v[2] - w[2])) / scale);
                    }
                }
                rec.record("mesh rotation symmetry", sym, label);
                rec.count("mesh rotation symmetry");
                rec.record("open tube topology",
                           std::abs(euler_characteristic(mesh)) + std::abs(boundary_loops(mesh) - 2), label);
                rec.count("open tube topology");
            }

            const double a = d.lo + 0.1 * d.width();
            const double b = d.lo + uniform(rng, 0.2, 0.8) * d.width();
            const double e = d.hi - 0.1 * d.width();
            rec.record("arclength additivity",
                       arclength(exact, a, b) + arclength(exact, b, e) - arclength(exact, a, e), label);
            rec.count("arclength additivity");

            double slope = 0.0;
            for (int i = 0; i < 20; ++i) {
                const double step = 5e-4;
                const double x = d.lo + 2 * step + uniform(rng, 0, 1) * (d.width() - 4 * step);
                const std::vector<double> local{x - 2 * step, x - step, x, x + step, x + 2 * step};
                const auto heights = graph_height(exact, local);
                const double dz = numerics::stencil_derivative(heights.x, 2, [&](std::size_t j) { return heights.z[j]; });
                const double k = P(x);
                slope = std::max(slope, std::abs(dz - k / std::sqrt(1 - k * k)));
            }
            rec.record("graph height slope", slope, label);
            rec.count("graph height slope");

            check_all(rec, "fundamental forms eigenvalues", xs,
                      [&](double x) {
                          const auto f = fundamental_forms(exact, x).principal();
                          const auto k = principal_curvatures(exact, x);
                          return relative(f.k_m, k.k_m) + relative(f.k_p, k.k_p);
                      },
                      label);
        } catch (const Error& err) {
            for (const auto& r : rec.results())
                rec.record(r.name, HUGE_VAL, label + ": " + err.what());
        }
    }
    return rec.results();
}

}  // namespace revolve::testing
