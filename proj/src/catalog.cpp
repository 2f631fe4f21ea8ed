#include "revolve/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "revolve/error.hpp"
#include "revolve/jet.hpp"
#include "revolve/numerics.hpp"

namespace revolve::catalog {

namespace {

constexpr double pi = std::numbers::pi;

void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorKind::ParamOutOfRange, what);
}

CurvePoint from_jets(const Jet& x, const Jet& z)
{
    return {x.v, z.v, x.d1, z.d1, x.d2, z.d2};
}

// Momentum with K and K' given in closed form.
Momentum closed_momentum(std::function<double(double)> k, std::function<double(double)> dk,
                         Interval domain)
{
    return Momentum(std::move(k), std::move(dk), domain);
}

}  // namespace

double CurvePoint::speed() const { return std::hypot(dx, dz); }

double CurvePoint::momentum() const { return dz / speed(); }

double CurvePoint::curvature() const
{
    const double v = speed();
    return (dx * ddz - dz * ddx) / (v * v * v);
}

double CatalogEntry::param(std::string_view key) const
{
    for (const auto& p : params) {
        if (p.name == key)
            return p.value;
    }
    throw Error(ErrorKind::InvalidArgument, "entry " + name + " has no parameter "
                                                + std::string(key));
}

CatalogEntry plane()
{
    CatalogEntry e;
    e.name = "plane";
    e.momentum = closed_momentum([](double) { return 0.0; }, [](double) { return 0.0; }, {0, 1});
    e.momentum_expression = "0";
    e.closed_profile = ClosedProfile{0, 1, [](double t) { return CurvePoint{t, 0, 1, 0, 0, 0}; },
                                     true};
    e.provenance = "horizontal plane, K = 0";
    return e;
}

CatalogEntry cone(double theta0)
{
    require(theta0 > 0 && theta0 < pi / 2, "cone needs 0 < theta0 < pi/2");
    CatalogEntry e;
    e.name = "cone";
    e.params = {{"theta0", theta0}};
    const double s = std::sin(theta0);
    const double c = std::cos(theta0);
    e.momentum = closed_momentum([s](double) { return s; }, [](double) { return 0.0; }, {0, 1});
    e.momentum_expression = "sin(theta0)";
    e.closed_profile = ClosedProfile{
        0, 1, [c, s](double t) { return CurvePoint{t * c, t * s, c, s, 0, 0}; }, true};
    e.provenance = "circular cone x1^2 + x2^2 = cot^2(theta0) x3^2, K = sin(theta0)";
    e.weingarten_q = std::nullopt;
    return e;
}

CatalogEntry sphere(double radius)
{
    require(radius > 0, "sphere needs R > 0");
    CatalogEntry e;
    e.name = "sphere";
    e.params = {{"R", radius}};
    e.momentum = closed_momentum([radius](double x) { return x / radius; },
                                 [radius](double) { return 1 / radius; }, {0, radius});
    e.momentum_expression = "x/R";
    e.closed_profile = ClosedProfile{0, pi,
                                     [radius](double u) {
                                         const Jet t = Jet::variable(u);
                                         return from_jets(radius * sin(t), -radius * cos(t));
                                     },
                                     false};
    e.provenance = "round sphere of radius R, K = x/R";
    e.weingarten_q = 1.0;
    return e;
}

CatalogEntry torus(double a, double radius)
{
    require(radius > 0, "torus needs R > 0");
    require(a != 0, "torus needs a != 0");
    CatalogEntry e;
    e.name = "torus";
    e.params = {{"a", a}, {"R", radius}};
    e.momentum = closed_momentum([a, radius](double x) { return (x - a) / radius; },
                                 [radius](double) { return 1 / radius; },
                                 {a - radius, a + radius});
    e.momentum_expression = "(x-a)/R";
    e.closed_profile = ClosedProfile{-pi, pi,
                                     [a, radius](double u) {
                                         const Jet t = Jet::variable(u);
                                         return from_jets(a + radius * sin(t), -radius * cos(t));
                                     },
                                     false};
    e.provenance = "torus of revolution (r - a)^2 + x3^2 = R^2, K = (x - a)/R";
    return e;
}

CatalogEntry catenoid(double a)
{
    require(a > 0, "catenoid needs a > 0");
    CatalogEntry e;
    e.name = "catenoid";
    e.params = {{"a", a}};
    e.momentum = closed_momentum([a](double x) { return a / x; },
                                 [a](double x) { return -a / (x * x); },
                                 {a, a * std::cosh(3.0)});
    e.momentum_expression = "a/x";
    e.closed_profile = ClosedProfile{-3 * a, 3 * a,
                                     [a](double u) {
                                         const Jet t = Jet::variable(u);
                                         return from_jets(a * cosh(t / a), t);
                                     },
                                     false};
    e.provenance = "catenoid of chord a, x = a cosh(z/a), K = a/x";
    e.weingarten_q = -1.0;
    return e;
}

CatalogEntry cylinder(double a)
{
    require(a > 0, "cylinder needs a > 0");
    CatalogEntry e;
    e.name = "cylinder";
    e.params = {{"a", a}};
    e.momentum_expression = "";
    e.closed_profile = ClosedProfile{
        -1, 1, [a](double t) { return CurvePoint{a, t, 0, 1, 0, 0}; }, true};
    e.provenance = "right circular cylinder of radius a; x is constant so no momentum exists";
    return e;
}

CatalogEntry hopf_kuhnel(double q, double a, std::optional<double> t_max)
{
    require(q != 0, "Hopf-Kuhnel surfaces need q != 0");
    require(a > 0, "Hopf-Kuhnel surfaces need a > 0");
    const double tm = t_max.value_or(q > 0 ? 1.5 : 1.2);
    require(tm > 0 && tm < pi / 2, "Hopf-Kuhnel parameter range needs 0 < t_max < pi/2");
    CatalogEntry e;
    e.name = "hopf_kuhnel";
    e.params = {{"q", q}, {"a", a}};
    const double x_end = a * std::pow(std::cos(tm), 1 / q);
    const Interval domain = q > 0 ? Interval{0, a} : Interval{a, x_end};
    e.momentum = closed_momentum([q, a](double x) { return std::pow(x / a, q); },
                                 [q, a](double x) { return q / a * std::pow(x / a, q - 1); },
                                 domain);
    e.momentum_expression = "(x/a)^q";
    const double scale = a / std::abs(q);
    e.closed_profile = ClosedProfile{
        -tm, tm,
        [q, a, scale](double u) {
            const Jet t = Jet::variable(u);
            const Jet x = a * pow(cos(t), 1 / q);
            const Jet dz = scale * pow(cos(t), 1 / q);
            const double z = numerics::integrate_smooth(
                [q](double v) { return std::pow(std::cos(v), 1 / q); }, 0.0, u, 1e-13);
            return CurvePoint{x.v, scale * z, x.d1, dz.v, x.d2, dz.d1};
        },
        false};
    e.provenance = "Hopf-Kuhnel generatrix x = a cos^(1/q) t, z = (a/q) int_0^t cos^(1/q) v dv, "
                   "K = (x/a)^q";
    e.weingarten_q = q;
    if (q == 1)
        e.alias = "sphere";
    else if (q == -1)
        e.alias = "catenoid";
    else if (q == 2)
        e.alias = "mylar_balloon";
    else if (q == 0.5)
        e.alias = "onducycloid";
    else if (q == -0.5)
        e.alias = "flamm_paraboloid";
    return e;
}

double elastic_closure_integral(double a, double k)
{
    const double xp = std::sqrt((k + 1) / a);
    // 1 - K = a (x+ - x)(x+ + x) keeps the turning point at x+ well conditioned.
    auto integrand = [a, k, xp](double x, double offset) {
        const double gap = offset > 0 ? offset : xp - x;
        const double kk = a * x * x - k;
        const double one_minus = a * gap * (xp + x);
        const double r = one_minus * (1 + kk);
        return kk / std::sqrt(std::max(r, 1e-300));
    };
    return numerics::integrate_endpoint_singular(integrand, 0.0, xp, 1e-13);
}

double pseudolemniscate_modulus(double a)
{
    require(a > 0, "elastic curves need a > 0");
    return numerics::find_root([a](double k) { return elastic_closure_integral(a, k); }, 0.05,
                               0.95, 1e-11);
}

CatalogEntry elasticoid(double a, double k)
{
    require(a > 0, "elasticoids need a > 0");
    require(k > -1, "elasticoids need k > -1");
    CatalogEntry e;
    e.name = "elasticoid";
    e.params = {{"a", a}, {"k", k}};
    const double xp = std::sqrt((k + 1) / a);
    const Interval domain = k <= 1 ? Interval{-xp, xp} : Interval{std::sqrt((k - 1) / a), xp};
    e.momentum = closed_momentum([a, k](double x) { return a * x * x - k; },
                                 [a](double x) { return 2 * a * x; }, domain);
    e.momentum_expression = "a*x^2-k";
    e.provenance = "elastic curve rotated about its directrix, K = a x^2 - k";
    constexpr double k1 = 0.65222;
    constexpr double same = 5e-5;
    if (k < 0)
        e.regime = "pseudo-sinusoid";
    else if (k == 0) {
        e.regime = "lintearia";
        e.alias = "mylar_balloon";
        e.weingarten_q = 2.0;
    } else if (k < k1 - same)
        e.regime = "elastic curve 0 < k < k1";
    else if (k <= k1 + same)
        e.regime = "pseudolemniscate";
    else if (k < 1)
        e.regime = "elastic curve k1 < k < 1";
    else if (k == 1)
        e.regime = "convict curve";
    else
        e.regime = "pseudotrochoid";
    return e;
}

CatalogEntry equal_strength(double a, double beta, double s_range)
{
    require(a > 0, "catenoids of equal strength need a > 0");
    require(beta > -pi / 2 && beta < pi / 2, "catenoids of equal strength need |beta| < pi/2");
    const double sb = std::sin(beta);
    const double cb = std::cos(beta);
    auto curve = [a, sb, cb](double u) {
        const Jet s = Jet::variable(u);
        const Jet x = log(cb * cb / (a * (cosh(cb * s) + sb)));
        const Jet z = sb * s + 2 * atan((exp(cb * s) + sb) / cb);
        return from_jets(x, z);
    };
    CatalogEntry e;
    e.name = "equal_strength";
    e.params = {{"a", a}, {"beta", beta}};
    const Interval domain{curve(2 * s_range).x, std::log((1 - sb) / a)};
    e.momentum = closed_momentum([a, sb](double x) { return a * std::exp(x) + sb; },
                                 [a](double x) { return a * std::exp(x); }, domain);
    e.momentum_expression = "a*exp(x)+sin(beta)";
    e.closed_profile = ClosedProfile{-s_range, s_range, curve, true};
    e.provenance = "generalized catenary of equal strength, x = ln(cos^2 b / (a (cosh(s cos b) "
                   "+ sin b))), K = a e^x + sin b";
    return e;
}

CatalogEntry ondualysoid(double a, double s_range)
{
    require(a > 0, "the ondualysoid needs a > 0");
    auto curve = [a](double u) {
        const Jet s = Jet::variable(u);
        const Jet x = log(2.0 / (a * (1 + s * s)));
        const Jet z = 2 * atan(s) - s;
        return from_jets(x, z);
    };
    CatalogEntry e;
    e.name = "ondualysoid";
    e.params = {{"a", a}};
    const Interval domain{curve(2 * s_range).x, std::log(2 / a)};
    e.momentum = closed_momentum([a](double x) { return a * std::exp(x) - 1; },
                                 [a](double x) { return a * std::exp(x); }, domain);
    e.momentum_expression = "a*exp(x)-1";
    e.closed_profile = ClosedProfile{-s_range, s_range, curve, true};
    e.provenance = "alysoid x = ln(2 / (a (1 + s^2))), z = 2 atan(s) - s, K = a e^x - 1";
    return e;
}

CatalogEntry loopoid(double a, double eta, double s_range)
{
    require(a > 0, "loopoids need a > 0");
    require(eta > 0, "loopoids need eta > 0");
    const double ch = std::cosh(eta);
    const double sh = std::sinh(eta);
    auto curve = [a, ch, sh](double u) {
        const Jet s = Jet::variable(u);
        const Jet x = log(sh * sh / (a * (ch - sin(sh * s))));
        Jet z = -ch * s - 2 * atan((1 - ch * tan(sh * s / 2)) / sh);
        // Unwrap the jump of -2 pi at each pole of tan(sh s / 2).
        z.v += 2 * pi * std::floor((sh * u / 2 + pi / 2) / pi);
        return from_jets(x, z);
    };
    CatalogEntry e;
    e.name = "loopoid";
    e.params = {{"a", a}, {"eta", eta}};
    const Interval domain{std::log(sh * sh / (a * (ch + 1))), std::log(sh * sh / (a * (ch - 1)))};
    e.momentum = closed_momentum([a, ch](double x) { return a * std::exp(x) - ch; },
                                 [a](double x) { return a * std::exp(x); }, domain);
    e.momentum_expression = "a*exp(x)-cosh(eta)";
    e.closed_profile = ClosedProfile{-s_range, s_range, curve, true};
    e.provenance = "loop curve x = ln(sinh^2 h / (a (cosh h - sin(s sinh h)))), "
                   "K = a e^x - cosh h";
    if (ch < a + 1)
        e.regime = "cosh(eta) < a + 1";
    else if (ch == a + 1)
        e.regime = "cosh(eta) = a + 1";
    else
        e.regime = "cosh(eta) > a + 1";
    return e;
}

Interval mean_inverse_interval(double mu, double c)
{
    require(mu > 0, "the H = mu/x family needs mu > 0");
    constexpr double inf = std::numeric_limits<double>::infinity();
    if (mu == 0.5) {
        require(c < 0, "mu = 1/2 needs c < 0");
        return {-c / 2, inf};
    }
    if (mu < 0.5) {
        const double s = 2 * mu;
        if (c > 0)
            return {c / (1 - s), inf};
        if (c < 0)
            return {-c / (1 + s), inf};
        return {0, inf};
    }
    require(c < 0, "mu > 1/2 needs c < 0");
    const double ch = 2 * mu;
    return {-c / (1 + ch), c / (1 - ch)};
}

namespace {

Jet mean_inverse_height_jet(double mu, double c, const Jet& x)
{
    if (mu == 0.5)
        return (x + 2 * c) * sqrt(2 * x + c) / (3 * std::sqrt(-c));
    if (mu < 0.5) {
        const double st = 2 * mu;
        const double ct = std::sqrt(1 - st * st);
        if (c == 0)
            return st / ct * x;
        const Jet p = ct * ct * x * x - 2 * st * c * x - c * c;
        return st / (ct * ct) * sqrt(p)
               + c / (ct * ct * ct) * log(2 * ct * sqrt(p) + 2 * ct * ct * x - 2 * st * c);
    }
    const double chd = 2 * mu;
    const double shd = std::sqrt(chd * chd - 1);
    const Jet p = -shd * shd * x * x - 2 * chd * c * x - c * c;
    return -chd / (shd * shd) * sqrt(p)
           + c / (shd * shd * shd) * asin((shd * shd * x + chd * c) / c);
}

}  // namespace

double mean_inverse_height(double mu, double c, double x)
{
    return mean_inverse_height_jet(mu, c, Jet(x)).v;
}

CatalogEntry mean_inverse_profile(double mu, double c, std::optional<double> x_max)
{
    const Interval branch = mean_inverse_interval(mu, c);
    double hi = branch.hi;
    if (!std::isfinite(hi))
        hi = x_max.value_or(branch.lo > 0 ? 10 * branch.lo : 1.0);
    else if (x_max)
        hi = std::min(hi, *x_max);
    require(hi > branch.lo, "x_max must exceed the lower end of the branch");
    CatalogEntry e;
    e.name = "mean_inverse";
    e.params = {{"mu", mu}, {"c", c}};
    e.momentum = closed_momentum([mu, c](double x) { return 2 * mu + c / x; },
                                 [c](double x) { return -c / (x * x); }, {branch.lo, hi});
    e.momentum_expression = "2*mu+c/x";
    // Where |K| = 1 the graph has a vertical tangent and z ~ sqrt(distance).
    // Such ends are reached quadratically in the curve parameter, which makes
    // the profile smooth there.
    auto vertical = [mu, c](double x) { return x != 0 && std::abs(2 * mu + c / x) > 1 - 1e-12; };
    const bool lo_vertical = vertical(branch.lo);
    const bool hi_vertical = vertical(hi);
    const double lo = branch.lo;
    const double w = hi - lo;
    auto abscissa = [=](const Jet& u) {
        if (lo_vertical && hi_vertical)
            return lo + w * (1 - cos(pi * u)) / 2;
        if (lo_vertical)
            return lo + w * u * u;
        if (hi_vertical)
            return hi - w * (1 - u) * (1 - u);
        return lo + w * u;
    };
    constexpr double inset = 1e-3;
    e.closed_profile = ClosedProfile{lo_vertical ? inset : 0.0, hi_vertical ? 1 - inset : 1.0,
                                     [mu, c, abscissa](double u) {
                                         const Jet x = abscissa(Jet::variable(u));
                                         return from_jets(x, mean_inverse_height_jet(mu, c, x));
                                     },
                                     false};
    const auto cls = classify_mean_inverse(mu);
    e.regime = std::string(to_string(cls.branch));
    e.provenance = "graph z(x) of the surfaces with H = mu/x, K = 2 mu + c/x";
    return e;
}

CatalogEntry transonducycloid(double radius, double a)
{
    require(radius > 0, "transonducycloids need R > 0");
    CatalogEntry e;
    e.name = "transonducycloid";
    e.params = {{"R", radius}, {"a", a}};
    e.momentum = closed_momentum(
        [radius, a](double x) { return std::sqrt(std::max(0.0, x - a) / (2 * radius)); },
        [radius, a](double x) { return 1 / (2 * std::sqrt(2 * radius * (x - a))); },
        {a, a + 2 * radius});
    e.momentum_expression = "sqrt((x-a)/(2*R))";
    e.closed_profile = ClosedProfile{0, 2 * pi,
                                     [radius, a](double u) {
                                         const Jet t = Jet::variable(u);
                                         return from_jets(a + radius * (1 - cos(t)),
                                                          radius * (t - sin(t) - pi));
                                     },
                                     false};
    e.provenance = "cycloid x = a + R(1 - cos t), z = R(t - sin t - pi) rotated about x = 0, "
                   "K_G = 1/(4 R x)";
    if (a == 0) {
        e.alias = "onducycloid";
        e.weingarten_q = 0.5;
    }
    return e;
}

namespace {

double get(const std::map<std::string, double>& params, const std::string& key, double fallback)
{
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

const std::map<std::string, std::vector<std::string>, std::less<>>& accepted_params()
{
    static const std::map<std::string, std::vector<std::string>, std::less<>> table{
        {"plane", {}},
        {"cone", {"theta0"}},
        {"sphere", {"R"}},
        {"torus", {"a", "R"}},
        {"catenoid", {"a"}},
        {"cylinder", {"a"}},
        {"hopf_kuhnel", {"q", "a", "t_max"}},
        {"mylar_balloon", {"r"}},
        {"onducycloid", {"R"}},
        {"flamm_paraboloid", {"r_S"}},
        {"elasticoid", {"a", "k"}},
        {"equal_strength", {"a", "beta"}},
        {"ondualysoid", {"a"}},
        {"loopoid", {"a", "eta"}},
        {"mean_inverse", {"mu", "c", "x_max"}},
        {"transonducycloid", {"R", "a"}},
    };
    return table;
}

}  // namespace

CatalogEntry build(std::string_view name, const std::map<std::string, double>& p)
{
    const std::string n(name);
    const auto& table = accepted_params();
    const auto known = table.find(n);
    if (known == table.end())
        throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + n + "'");
    for (const auto& [key, value] : p) {
        if (std::find(known->second.begin(), known->second.end(), key) == known->second.end())
            throw Error(ErrorKind::InvalidArgument, "entry " + n + " has no parameter " + key);
        if (!std::isfinite(value))
            throw Error(ErrorKind::ParamOutOfRange, "parameter " + key + " is not finite");
    }
    if (n == "plane")
        return plane();
    if (n == "cone")
        return cone(get(p, "theta0", pi / 6));
    if (n == "sphere")
        return sphere(get(p, "R", 1));
    if (n == "torus")
        return torus(get(p, "a", 2), get(p, "R", 1));
    if (n == "catenoid")
        return catenoid(get(p, "a", 1));
    if (n == "cylinder")
        return cylinder(get(p, "a", 1));
    if (n == "hopf_kuhnel") {
        std::optional<double> tm;
        if (p.count("t_max"))
            tm = p.at("t_max");
        return hopf_kuhnel(get(p, "q", 2), get(p, "a", 1), tm);
    }
    if (n == "mylar_balloon")
        return hopf_kuhnel(2, get(p, "r", 1));
    if (n == "onducycloid")
        return hopf_kuhnel(0.5, 2 * get(p, "R", 1));
    if (n == "flamm_paraboloid")
        return hopf_kuhnel(-0.5, get(p, "r_S", 1));
    if (n == "elasticoid")
        return elasticoid(get(p, "a", 1), get(p, "k", 0.5));
    if (n == "equal_strength")
        return equal_strength(get(p, "a", 1), get(p, "beta", 0));
    if (n == "ondualysoid")
        return ondualysoid(get(p, "a", 1));
    if (n == "loopoid")
        return loopoid(get(p, "a", 1), get(p, "eta", 1));
    if (n == "mean_inverse") {
        std::optional<double> xm;
        if (p.count("x_max"))
            xm = p.at("x_max");
        return mean_inverse_profile(get(p, "mu", 0.25), get(p, "c", 0.3), xm);
    }
    if (n == "transonducycloid")
        return transonducycloid(get(p, "R", 1), get(p, "a", 0));
    throw Error(ErrorKind::InvalidArgument, "unknown catalog entry '" + n + "'");
}

std::vector<std::string> names()
{
    return {"plane",         "cone",           "sphere",         "torus",
            "catenoid",      "cylinder",       "hopf_kuhnel",    "mylar_balloon",
            "onducycloid",   "flamm_paraboloid", "elasticoid",   "equal_strength",
            "ondualysoid",   "loopoid",        "mean_inverse",   "transonducycloid"};
}

std::vector<CatalogEntry> defaults()
{
    std::vector<CatalogEntry> out;
    for (const auto& n : names())
        out.push_back(build(n, {}));
    return out;
}

Profile sample_closed_profile(const ClosedProfile& curve, int n)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "need at least two samples");
    Profile profile;
    profile.samples.reserve(n);
    double s = 0.0;
    double prev_t = curve.t0;
    for (int i = 0; i < n; ++i) {
        const double t = (i == n - 1) ? curve.t1 : curve.t0 + (curve.t1 - curve.t0) * i / (n - 1);
        if (i > 0) {
            s += curve.unit_speed ? t - prev_t
                                  : numerics::integrate_smooth(
                                        [&curve](double u) { return curve.at(u).speed(); },
                                        prev_t, t, 1e-13);
        }
        const CurvePoint p = curve.at(t);
        double tx = p.dx;
        double tz = p.dz;
        if (p.speed() == 0) {
            // Cusp at an end: the one-sided tangent is along the second derivative.
            const double side = i == 0 ? 1.0 : -1.0;
            tx = side * p.ddx;
            tz = side * p.ddz;
        }
        const double v = std::hypot(tx, tz);
        profile.samples.push_back({s, p.x, p.z, tx / v, tz / v});
        prev_t = t;
    }
    profile.stop = ProfileStop::ArcLengthLimit;
    return profile;
}

}  // namespace revolve::catalog
