#include "revolve/reconstruct.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "revolve/error.hpp"
#include "revolve/numerics.hpp"

namespace revolve {

namespace {

// 1 - K(x)^2 near an endpoint e, evaluated from the signed displacement from e
// so that the value stays accurate when x itself rounds onto e.
struct Radicand {
    const Momentum& m;
    double a;
    double b;
    double ra;
    double rb;
    double dra;
    double drb;
    double near_a;
    double near_b;

    Radicand(const Momentum& mom, double lo, double hi) : m(mom), a(lo), b(hi)
    {
        const double ka = m.eval(a);
        const double kb = m.eval(b);
        ra = 1 - ka * ka;
        rb = 1 - kb * kb;
        dra = -2 * ka * m.deriv(a);
        drb = -2 * kb * m.deriv(b);
        near_a = 1e-8 * std::max(1.0, std::abs(a));
        near_b = 1e-8 * std::max(1.0, std::abs(b));
    }

    // `offset` follows numerics::EndpointIntegrand: negative measures from a.
    double operator()(double x, double offset) const
    {
        if (offset < 0 && -offset < near_a)
            return ra + dra * (-offset);
        if (offset > 0 && offset < near_b)
            return rb - drb * offset;
        const double k = m.eval(x);
        return 1 - k * k;
    }
};

void check_branch(const Momentum& m, double lo, double hi)
{
    constexpr int n = 257;
    for (int i = 1; i < n - 1; ++i) {
        const double x = lo + (hi - lo) * i / (n - 1);
        const double k = m.eval(x);
        if (!(k * k < 1 + 1e-12)) {
            std::ostringstream msg;
            msg << "K(" << x << ")^2 = " << k * k << " > 1 inside [" << lo << ", " << hi << "]";
            throw Error(ErrorKind::DomainViolation, msg.str());
        }
    }
    for (double e : {lo, hi}) {
        const double k = m.eval(e);
        const double r = 1 - k * k;
        if (r < -1e-12) {
            std::ostringstream msg;
            msg << "K(" << e << ")^2 = " << k * k << " > 1 at an endpoint";
            throw Error(ErrorKind::DomainViolation, msg.str());
        }
        if (std::abs(r) < 1e-12 && std::abs(k * m.deriv(e)) < 1e-9) {
            std::ostringstream msg;
            msg << "K^2 - 1 has a multiple zero at x = " << e;
            throw Error(ErrorKind::NonIntegrableSingularity, msg.str());
        }
    }
}

int sign_of(double v) { return v < 0 ? -1 : 1; }

using State = ode::State<3>;

struct Step {
    double s;
    State y;
};

}  // namespace

double arclength(const Momentum& m, double x0, double x1, double tol)
{
    if (x0 == x1)
        return 0.0;
    const double lo = std::min(x0, x1);
    const double hi = std::max(x0, x1);
    check_branch(m, lo, hi);
    const Radicand radicand(m, lo, hi);
    auto integrand = [&](double x, double offset) {
        return 1.0 / std::sqrt(std::max(radicand(x, offset), 1e-300));
    };
    const double s = numerics::integrate_endpoint_singular(integrand, lo, hi, tol);
    return x1 > x0 ? s : -s;
}

Profile integrate_profile(const Momentum& m, double start_x, int direction,
                          const ProfileOptions& options)
{
    const Interval domain = m.domain();
    if (!domain.contains(start_x)) {
        std::ostringstream msg;
        msg << "start x = " << start_x << " outside [" << domain.lo << ", " << domain.hi << "]";
        throw Error(ErrorKind::DomainViolation, msg.str());
    }
    if (direction != 1 && direction != -1)
        throw Error(ErrorKind::InvalidArgument, "direction must be +1 or -1");
    if (!(options.s_max > 0))
        throw Error(ErrorKind::InvalidArgument, "s_max must be positive");
    if (options.samples_per_branch < 2)
        throw Error(ErrorKind::InvalidArgument, "need at least two samples per branch");

    const double k0 = m.eval(start_x);
    if (!(std::abs(k0) <= 1 + 1e-12)) {
        std::ostringstream msg;
        msg << "|K(start)| = " << std::abs(k0) << " exceeds 1";
        throw Error(ErrorKind::DomainViolation, msg.str());
    }

    // Non-finite trial states are rejected by the step control, not evaluated.
    auto curvature = [&m, domain](double x) {
        return std::isfinite(x) ? m.deriv(domain.clamp(x)) : std::numeric_limits<double>::quiet_NaN();
    };
    auto rhs = [&curvature](double, const State& y) -> State {
        return {std::cos(y[2]), std::sin(y[2]), curvature(y[0])};
    };

    constexpr double pi = std::numbers::pi;
    State y{start_x, 0.0, 0.0};
    int branch = direction;
    if (std::abs(k0) >= 1 - 1e-14) {
        // Starting on a turning point: the curvature decides which way x moves.
        const double kd = m.deriv(start_x);
        if (std::abs(kd) < 1e-9)
            throw Error(ErrorKind::EventLocatorFailure, "degenerate turning point at start");
        y[2] = k0 > 0 ? pi / 2 : -pi / 2;
        branch = -sign_of(k0 * kd);
    } else {
        const double phi = std::asin(std::clamp(k0, -1.0, 1.0));
        y[2] = direction > 0 ? phi : pi - phi;
    }

    const double width = domain.width();
    const ode::Tolerance tol = options.tolerance;
    std::vector<Step> steps{{0.0, y}};
    std::vector<double> events;
    ProfileStop stop = ProfileStop::ArcLengthLimit;
    double s = 0.0;
    double h = std::min(1e-2 * width, options.s_max);
    const double s_tol = 1e-12;
    std::size_t iterations = 0;

    auto inside = [&domain](double x) { return std::min(x - domain.lo, domain.hi - x); };
    auto trial = [&](double hh) { return ode::dopri5_step<3>(rhs, s, y, hh, tol); };
    // Largest h' in (0, h] such that pred(h') still holds, assuming it holds at 0.
    auto bisect = [&](double hh, auto&& holds) {
        double lo = 0.0;
        double hi = hh;
        while (hi - lo > s_tol) {
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi)
                break;
            if (holds(trial(mid).y))
                lo = mid;
            else
                hi = mid;
        }
        return hi;
    };

    while (s < options.s_max) {
        if (++iterations > 2000000)
            throw Error(ErrorKind::StepUnderflow, "step budget exhausted");
        h = std::min(h, options.s_max - s);
        auto t = trial(h);
        if (!t.finite || t.error > 1) {
            h = t.finite ? ode::next_step(h, t.error) : 0.25 * h;
            if (h < 1e-13 * std::max(1.0, std::abs(s))) {
                if (inside(y[0]) < 1e-7 * width) {
                    stop = ProfileStop::DomainBoundary;
                    break;
                }
                std::ostringstream msg;
                msg << "step size underflow at s = " << s << ", x = " << y[0];
                throw Error(ErrorKind::StepUnderflow, msg.str());
            }
            continue;
        }
        // A turning point that comes first wins over leaving the domain, so that
        // momenta with K^2 = 1 exactly on the domain boundary still turn.
        const double slack = 1e-10 * width;
        double h_used = h;
        bool leaves = false;
        bool turns = false;
        if (std::cos(t.y[2]) * branch < 0) {
            h_used = bisect(h, [&](const State& st) { return std::cos(st[2]) * branch >= 0; });
            turns = true;
        }
        if (inside(t.y[0]) < -slack) {
            const double hb = bisect(h, [&](const State& st) { return inside(st[0]) >= 0; });
            if (!turns || hb < h_used) {
                h_used = hb;
                turns = false;
                leaves = true;
            }
        }
        State end = (turns || leaves) ? trial(h_used).y : t.y;
        if (leaves)
            end[0] = domain.clamp(end[0]);
        const double h_next = ode::next_step(h, t.error);
        s += h_used;
        y = end;
        steps.push_back({s, y});
        if (turns) {
            const double kd = m.deriv(domain.clamp(y[0]));
            const double kv = m.eval(domain.clamp(y[0]));
            if (std::abs(kv * kd) < 1e-9) {
                std::ostringstream msg;
                msg << "degenerate turning point (K' = 0) at x = " << y[0];
                throw Error(ErrorKind::EventLocatorFailure, msg.str());
            }
            events.push_back(s);
            branch = -branch;
        }
        if (leaves) {
            stop = ProfileStop::DomainBoundary;
            break;
        }
        h = turns ? std::min(h_next, h) : h_next;
    }

    // Resample each monotone branch.
    Profile profile;
    profile.branch_events = events;
    profile.stop = stop;
    std::vector<double> bounds{0.0};
    bounds.insert(bounds.end(), events.begin(), events.end());
    bounds.push_back(s);
    const int n = options.samples_per_branch;
    std::size_t k = 0;
    auto sample_at = [&](double target) {
        while (k + 1 < steps.size() && steps[k + 1].s <= target)
            ++k;
        State st = steps[k].y;
        if (target > steps[k].s)
            st = ode::dopri5_step<3>(rhs, steps[k].s, steps[k].y, target - steps[k].s, tol).y;
        return ProfileSample{target, st[0], st[1], std::cos(st[2]), std::sin(st[2])};
    };
    for (std::size_t b = 0; b + 1 < bounds.size(); ++b) {
        const double a = bounds[b];
        const double e = bounds[b + 1];
        if (e - a <= 0 && b > 0)
            continue;
        for (int j = (b == 0 ? 0 : 1); j < n; ++j) {
            const double u = static_cast<double>(j) / (n - 1);
            const double w = options.clustering == Clustering::Cosine
                                 ? 0.5 * (1 - std::cos(pi * u))
                                 : u;
            double target = (j == n - 1) ? e : a + (e - a) * w;
            profile.samples.push_back(sample_at(target));
        }
    }
    // Exact stored states at the branch bounds.
    if (stop == ProfileStop::DomainBoundary && !profile.samples.empty())
        profile.samples.back().x = domain.clamp(profile.samples.back().x);
    return profile;
}

HeightSamples graph_height(const Momentum& m, std::span<const double> grid, double tol)
{
    HeightSamples out;
    if (grid.empty())
        return out;
    const double lo = std::min(grid.front(), grid.back());
    const double hi = std::max(grid.front(), grid.back());
    for (std::size_t i = 1; i < grid.size(); ++i) {
        if ((grid[i] - grid[i - 1]) * (grid.back() - grid.front()) <= 0)
            throw Error(ErrorKind::InvalidArgument, "graph_height needs a strictly monotone grid");
    }
    check_branch(m, lo, hi);
    const Radicand global(m, lo, hi);
    out.x.assign(grid.begin(), grid.end());
    out.z.assign(grid.size(), 0.0);
    for (std::size_t i = 1; i < grid.size(); ++i) {
        const double a = std::min(grid[i - 1], grid[i]);
        const double b = std::max(grid[i - 1], grid[i]);
        const bool at_lo = a == lo;
        const bool at_hi = b == hi;
        auto integrand = [&](double x, double offset) {
            // Endpoint expansions apply only where the segment touches the branch ends.
            double r;
            if (offset < 0 && at_lo)
                r = global(x, offset);
            else if (offset > 0 && at_hi)
                r = global(x, offset);
            else {
                const double k = m.eval(x);
                r = 1 - k * k;
            }
            return m.eval(x) / std::sqrt(std::max(r, 1e-300));
        };
        double piece = numerics::integrate_endpoint_singular(integrand, a, b, tol);
        if (grid[i] < grid[i - 1])
            piece = -piece;
        out.z[i] = out.z[i - 1] + piece;
    }
    return out;
}

HeightSamples graph_height(const Momentum& m, double x0, double x1, int n, double tol)
{
    if (n < 2)
        throw Error(ErrorKind::InvalidArgument, "graph_height needs at least two points");
    std::vector<double> grid(n);
    for (int i = 0; i < n; ++i)
        grid[i] = (i == n - 1) ? x1 : x0 + (x1 - x0) * i / (n - 1);
    return graph_height(m, grid, tol);
}

std::vector<MomentumSample> momentum_of_profile(std::span<const Point2> points)
{
    const std::size_t n = points.size();
    if (n < 5)
        throw Error(ErrorKind::DegeneratePolyline, "need at least 5 points");
    for (std::size_t i = 1; i < n; ++i) {
        if (points[i].x == points[i - 1].x && points[i].z == points[i - 1].z) {
            std::ostringstream msg;
            msg << "repeated point at index " << i;
            throw Error(ErrorKind::DegeneratePolyline, msg.str());
        }
    }
    // Cumulative chord length is a smooth parameter for smooth samplings and K
    // does not depend on the parametrization.
    std::vector<double> t(n, 0.0);
    for (std::size_t i = 1; i < n; ++i)
        t[i] = t[i - 1] + std::hypot(points[i].x - points[i - 1].x, points[i].z - points[i - 1].z);
    std::vector<MomentumSample> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = numerics::stencil_derivative(t, i, [&](std::size_t j) { return points[j].x; });
        const double dz = numerics::stencil_derivative(t, i, [&](std::size_t j) { return points[j].z; });
        const double speed = std::hypot(dx, dz);
        if (speed == 0.0)
            throw Error(ErrorKind::DegeneratePolyline, "zero speed");
        out[i] = {points[i].x, dz / speed};
    }
    return out;
}

std::vector<Point2> points_of(const Profile& profile)
{
    std::vector<Point2> out;
    out.reserve(profile.samples.size());
    for (const auto& p : profile.samples)
        out.push_back({p.x, p.z});
    return out;
}

std::vector<CurvatureSample> discrete_curvatures(std::span<const ProfileSample> samples)
{
    const std::size_t n = samples.size();
    if (n < 5)
        throw Error(ErrorKind::DegeneratePolyline, "need at least 5 samples");
    std::vector<double> phi(n);
    std::vector<double> s(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && !(samples[i].s > samples[i - 1].s))
            throw Error(ErrorKind::DegeneratePolyline, "arc length must increase strictly");
        if (std::abs(samples[i].x) < 1e-12) {
            std::ostringstream msg;
            msg << "sample " << i << " lies on the axis";
            throw Error(ErrorKind::AxisSingularity, msg.str());
        }
        s[i] = samples[i].s;
        phi[i] = std::atan2(samples[i].tz, samples[i].tx);
        if (i > 0) {
            while (phi[i] - phi[i - 1] > std::numbers::pi)
                phi[i] -= 2 * std::numbers::pi;
            while (phi[i] - phi[i - 1] < -std::numbers::pi)
                phi[i] += 2 * std::numbers::pi;
        }
    }
    std::vector<CurvatureSample> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double dphi = numerics::stencil_derivative(s, i, [&](std::size_t j) { return phi[j]; });
        out[i] = CurvatureSample::from_principal(samples[i].x, dphi,
                                                 samples[i].tz / samples[i].x);
    }
    return out;
}

void write_profile_csv(std::ostream& out, const Profile& profile)
{
    out << "s,x,z,tx,tz\n";
    char line[160];
    for (const auto& p : profile.samples) {
        std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g,%.17g\n", p.s, p.x, p.z, p.tx,
                      p.tz);
        out << line;
    }
}

Profile read_profile_csv(std::istream& in)
{
    Profile profile;
    std::string line;
    if (!std::getline(in, line) || line.rfind("s,x,z,tx,tz", 0) != 0)
        throw Error(ErrorKind::IoError, "profile CSV must start with header s,x,z,tx,tz");
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (line.empty())
            continue;
        ProfileSample p;
        char tail = 0;
        if (std::sscanf(line.c_str(), "%lf,%lf,%lf,%lf,%lf%c", &p.s, &p.x, &p.z, &p.tx, &p.tz,
                        &tail)
                < 5) {
            throw Error(ErrorKind::IoError, "malformed profile CSV row " + std::to_string(row));
        }
        profile.samples.push_back(p);
    }
    return profile;
}

}  // namespace revolve
