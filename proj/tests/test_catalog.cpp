#include <cmath>
#include <numbers>

#include "doctest.h"
#include "revolve/catalog.hpp"
#include "revolve/error.hpp"
#include "support/curves.hpp"

using namespace revolve;
using namespace revolve::catalog;

namespace {

constexpr double pi = std::numbers::pi;

ErrorKind kind_of(const std::function<void()>& action)
{
    try {
        action();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::InvalidArgument;
}

// Parameter values spread over the closed profile, endpoints excluded.
std::vector<double> parameters(const ClosedProfile& c, int n = 200)
{
    std::vector<double> t;
    for (int i = 1; i < n; ++i)
        t.push_back(c.t0 + (c.t1 - c.t0) * i / n);
    return t;
}

void check_entry(const CatalogEntry& e)
{
    INFO(e.name);
    REQUIRE(e.closed_profile.has_value());
    REQUIRE(e.momentum.has_value());
    const auto& c = *e.closed_profile;
    const Momentum& m = *e.momentum;
    double k_err = 0;
    double w_err = 0;
    double speed_err = 0;
    for (double t : parameters(c)) {
        const CurvePoint p = c.at(t);
        k_err = std::max(k_err, std::abs(p.momentum() - m(p.x)));
        if (e.weingarten_q && p.x != 0)
            w_err = std::max(w_err, std::abs(p.curvature() - *e.weingarten_q * p.momentum() / p.x));
        if (c.unit_speed)
            speed_err = std::max(speed_err, std::abs(p.dx * p.dx + p.dz * p.dz - 1));
    }
    CHECK(k_err <= 1e-8);
    CHECK(w_err <= 1e-8);
    CHECK(speed_err <= 1e-12);

    const Profile sampled = sample_closed_profile(c, 2001);
    const auto measured = momentum_of_profile(points_of(sampled));
    double discrete_err = 0;
    // trimmed so that cusps (cycloid ends) stay outside the stencils
    const std::size_t trim = measured.size() / 20;
    for (std::size_t i = trim; i + trim < measured.size(); ++i)
        discrete_err = std::max(discrete_err, std::abs(measured[i].K - m(measured[i].x)));
    CHECK(discrete_err <= 1e-8);
    for (std::size_t i = 0; i < sampled.samples.size(); ++i) {
        const auto& q = sampled.samples[i];
        CHECK(std::abs(std::hypot(q.tx, q.tz) - 1) <= 1e-10);
        if (i > 0) {
            const auto& r = sampled.samples[i - 1];
            CHECK(std::hypot(q.x - r.x, q.z - r.z) <= (q.s - r.s) * (1 + 1e-6));
        }
    }
}

}  // namespace

TEST_CASE("basic surfaces")
{
    const auto torus_entry = torus(2, 1);
    CHECK(torus_entry.momentum->domain() == Interval{1, 3});
    CHECK(torus_entry.momentum->eval(2.5) == 0.5);
    CHECK(cone(pi / 6).momentum->eval(3.0) == doctest::Approx(0.5).epsilon(1e-15));
    const auto cat = catenoid(1);
    for (double t : {-2.0, -0.5, 0.0, 1.3})
        CHECK(std::abs(cat.closed_profile->at(t).x - std::cosh(cat.closed_profile->at(t).z))
              < 1e-14);
    CHECK_FALSE(cylinder(1).momentum.has_value());
    for (const auto& e : {plane(), cone(0.3), sphere(1.5), torus(2, 1), catenoid(0.8)})
        check_entry(e);

    CHECK(kind_of([] { sphere(-1); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { cone(2); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { torus(0, 1); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("Hopf-Kuhnel family")
{
    for (double q : {2.0, 0.5, -0.5, -1.0, 3.0, 1.0})
        check_entry(hopf_kuhnel(q, 1.3));

    const auto mylar = hopf_kuhnel(2, 1.5);
    CHECK(mylar.alias == "mylar_balloon");
    CHECK(mylar.momentum->eval(0.75) == doctest::Approx(0.25).epsilon(1e-15));

    const double rs = 0.8;
    const auto flamm = hopf_kuhnel(-0.5, rs);
    CHECK(flamm.alias == "flamm_paraboloid");
    for (double t : parameters(*flamm.closed_profile, 20)) {
        const CurvePoint p = flamm.closed_profile->at(t);
        CHECK(std::abs(p.z * p.z - 4 * rs * (p.x - rs)) < 1e-12);
    }
    const auto ondu = hopf_kuhnel(0.5, 2 * 1.2);
    CHECK(ondu.alias == "onducycloid");
    CHECK(ondu.momentum->eval(0.7) == doctest::Approx(std::sqrt(0.7 / 2.4)).epsilon(1e-15));

    CHECK(kind_of([] { hopf_kuhnel(0, 1); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { hopf_kuhnel(1, -1); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("elasticoids and the pseudolemniscate modulus")
{
    CHECK(elasticoid(1, 0).alias == "mylar_balloon");
    CHECK(elasticoid(1, 0).regime == "lintearia");
    CHECK(elasticoid(1, 1).regime == "convict curve");
    CHECK(elasticoid(1, -0.5).regime == "pseudo-sinusoid");
    CHECK(elasticoid(1, 2).regime == "pseudotrochoid");
    CHECK(elasticoid(1, 0.3).regime == "elastic curve 0 < k < k1");
    CHECK(elasticoid(1, 0.8).regime == "elastic curve k1 < k < 1");
    CHECK(elasticoid(2, 0.3).momentum->eval(0.5) == doctest::Approx(0.2));
    CHECK(kind_of([] { elasticoid(1, -1); }) == ErrorKind::ParamOutOfRange);

    const double k1 = pseudolemniscate_modulus(1);
    CHECK(std::abs(k1 - 0.65222) < 1e-4);
    CHECK(elasticoid(1, k1).regime == "pseudolemniscate");
    CHECK(std::abs(pseudolemniscate_modulus(3.7) - k1) < 1e-9);
    CHECK(elastic_closure_integral(1, 0) > 0);
    CHECK(elastic_closure_integral(1, 0.9) < 0);
}

TEST_CASE("exponential meridians")
{
    const auto es = equal_strength(1, 0);
    const CurvePoint p = es.closed_profile->at(0);
    CHECK(std::abs(p.x) < 1e-15);
    CHECK(std::abs(p.z - pi / 2) < 1e-15);
    CHECK(std::abs(p.dx) < 1e-15);
    CHECK(std::abs(p.dz - 1) < 1e-15);
    for (double s : {-2.5, -1.0, 0.3, 2.0})
        CHECK(std::abs(es.closed_profile->at(s).curvature() - 1 / std::cosh(s)) < 1e-12);

    const CurvePoint q = ondualysoid(1).closed_profile->at(1);
    CHECK(std::abs(q.x) < 1e-15);
    CHECK(std::abs(q.z - (pi / 2 - 1)) < 1e-15);

    for (const auto& e : {equal_strength(1, 0), equal_strength(1, pi / 3),
                          equal_strength(1, -pi / 3), equal_strength(0.5, 0.2), ondualysoid(1),
                          ondualysoid(2), loopoid(1, 1), loopoid(0.3, 2)})
        check_entry(e);

    // the loopoid's stored height is continuous across the poles of the tangent
    const auto loop = loopoid(1, 1);
    const auto sampled = sample_closed_profile(*loop.closed_profile, 4001);
    for (std::size_t i = 1; i < sampled.samples.size(); ++i) {
        const auto& a = sampled.samples[i - 1];
        const auto& b = sampled.samples[i];
        CHECK(std::abs(b.z - a.z) <= (b.s - a.s) * (1 + 1e-9));
    }
    CHECK(loopoid(1, 1).regime == "cosh(eta) < a + 1");
    CHECK(loopoid(0.2, 1).regime == "cosh(eta) > a + 1");

    CHECK(kind_of([] { equal_strength(1, 2); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { loopoid(1, 0); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("H = mu/x profiles")
{
    CHECK(std::abs(mean_inverse_height(0.5, -1, 1) + 1.0 / 3) < 1e-15);
    for (double x : {0.5, 1.0, 4.0})
        CHECK(std::abs(mean_inverse_height(0.25, 0, x) - std::tan(pi / 6) * x) < 1e-15);
    const double mu = std::cosh(1.0) / 2;
    const Interval d = mean_inverse_interval(mu, -1);
    CHECK(std::abs(d.lo - 1 / (1 + std::cosh(1.0))) < 1e-15);
    CHECK(std::abs(d.hi - 1 / (std::cosh(1.0) - 1)) < 1e-15);

    struct Case {
        double mu;
        double c;
    };
    for (Case cs : {Case{0.5, -1}, Case{0.25, 0.3}, Case{0.25, -0.3}, Case{mu, -1},
                    Case{0.1, 0.05}, Case{2, -0.5}}) {
        INFO(cs.mu, " ", cs.c);
        const auto e = mean_inverse_profile(cs.mu, cs.c);
        const auto& prof = *e.closed_profile;
        const double span = prof.t1 - prof.t0;
        double err = 0;
        for (int i = 0; i <= 200; ++i) {
            const CurvePoint p = prof.at(prof.t0 + span * i / 200);
            const double k = 2 * cs.mu + cs.c / p.x;
            err = std::max(err, std::abs(p.momentum() - k));
        }
        CHECK(err <= 1e-8);
        CHECK(prof.at(prof.t0).x >= e.momentum->domain().lo);
        CHECK(prof.at(prof.t1).x <= e.momentum->domain().hi);
    }
    CHECK(mean_inverse_profile(0.5, -1).regime == "Parabolic");
    CHECK(kind_of([] { mean_inverse_profile(0.5, 1); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { mean_inverse_profile(1, 0.2); }) == ErrorKind::ParamOutOfRange);
    CHECK(kind_of([] { mean_inverse_profile(-1, 0.2); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("transonducycloids")
{
    const auto e = transonducycloid(1, 0);
    const CurvePoint top = e.closed_profile->at(pi);
    CHECK(std::abs(top.x - 2) < 1e-15);
    CHECK(std::abs(top.z) < 1e-15);
    CHECK(e.alias == "onducycloid");
    for (double t : parameters(*e.closed_profile)) {
        const CurvePoint p = e.closed_profile->at(t);
        CHECK(std::abs(p.momentum() - std::sqrt(p.x / 2)) < 1e-8);
        // K_G = k_m k_p with k_m the profile curvature
        CHECK(std::abs(p.curvature() * p.momentum() - 0.25) < 1e-8);
    }
    check_entry(e);
    check_entry(transonducycloid(0.7, 0.4));
}

TEST_CASE("registry")
{
    for (const auto& name : names()) {
        INFO(name);
        const auto e = build(name, {});
        CHECK_FALSE(e.provenance.empty());
        if (name != "cylinder")
            CHECK(e.momentum.has_value());
    }
    CHECK(defaults().size() == names().size());
    CHECK(build("torus", {{"a", 3}, {"R", 0.5}}).param("a") == 3);
    CHECK(kind_of([] { build("klein_bottle", {}); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { build("sphere", {{"R", -2}}); }) == ErrorKind::ParamOutOfRange);
}

TEST_CASE("closed profiles agree with reconstruction from the momentum")
{
    for (const auto& e : defaults()) {
        if (!e.closed_profile || !e.momentum)
            continue;
        INFO(e.name);
        const auto& c = *e.closed_profile;
        const double inset = 1e-3 * (c.t1 - c.t0);
        const auto r = testing::reconstruct_arc(*e.momentum, c, c.t0 + inset, c.t1 - inset);
        CHECK(r.distance <= 1e-5);
    }
}
