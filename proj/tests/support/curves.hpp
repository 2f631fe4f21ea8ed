#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "revolve/catalog.hpp"
#include "revolve/numerics.hpp"
#include "revolve/reconstruct.hpp"

namespace revolve::testing {

inline double point_segment_distance(Point2 p, Point2 a, Point2 b)
{
    const double ux = b.x - a.x;
    const double uz = b.z - a.z;
    const double len2 = ux * ux + uz * uz;
    double t = len2 > 0 ? ((p.x - a.x) * ux + (p.z - a.z) * uz) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(p.x - a.x - t * ux, p.z - a.z - t * uz);
}

// Largest distance from a point of `from` to the polyline `to`. Both are
// expected to run in the same direction, so the nearest segment is tracked
// through a window and only searched globally when the match is poor. A
// windowed match can only overestimate the distance.
inline double directed_hausdorff(const std::vector<Point2>& from, const std::vector<Point2>& to)
{
    constexpr std::size_t window = 64;
    constexpr double good = 1e-4;
    auto nearest = [&](Point2 p, std::size_t lo, std::size_t hi, std::size_t& at) {
        double best = std::hypot(p.x - to[lo].x, p.z - to[lo].z);
        at = lo;
        for (std::size_t i = lo + 1; i < hi; ++i) {
            const double d = point_segment_distance(p, to[i - 1], to[i]);
            if (d < best) {
                best = d;
                at = i;
            }
        }
        return best;
    };
    double worst = 0.0;
    std::size_t at = 0;
    bool tracking = false;
    for (const auto& p : from) {
        double best = 0.0;
        bool found = false;
        if (tracking) {
            const std::size_t lo = at > window ? at - window : 0;
            const std::size_t hi = std::min(to.size(), at + window);
            std::size_t local = at;
            best = nearest(p, lo, hi, local);
            found = best <= good && local > lo + 1 && local + 1 < hi;
            if (found)
                at = local;
        }
        if (!found)
            best = nearest(p, 0, to.size(), at);
        tracking = true;
        worst = std::max(worst, best);
    }
    return worst;
}

inline double hausdorff(const std::vector<Point2>& a, const std::vector<Point2>& b)
{
    return std::max(directed_hausdorff(a, b), directed_hausdorff(b, a));
}

// Dense polyline of a closed-form curve over [t0, t1].
inline std::vector<Point2> trace(const catalog::ClosedProfile& c, double t0, double t1, int n)
{
    std::vector<Point2> out(n);
    for (int i = 0; i < n; ++i) {
        const auto p = c.at(i == n - 1 ? t1 : t0 + (t1 - t0) * i / (n - 1));
        out[i] = {p.x, p.z};
    }
    return out;
}

struct Reconstruction {
    double distance = 0.0;  ///< Hausdorff distance to the closed-form arc
    Profile profile;
};

// Integrates the momentum from the closed curve's point at t0 in its direction
// of travel for the arc length up to t1, and measures the distance between
// the two arcs after aligning heights at the start.
inline Reconstruction reconstruct_arc(const Momentum& m, const catalog::ClosedProfile& c, double t0,
                                      double t1, int samples_per_branch = 2048)
{
    const auto start = c.at(t0);
    ProfileOptions opt;
    opt.s_max = numerics::integrate_smooth([&](double t) { return c.at(t).speed(); }, t0, t1);
    opt.samples_per_branch = samples_per_branch;
    Reconstruction r;
    r.profile = integrate_profile(m, start.x, start.dx >= 0 ? 1 : -1, opt);
    std::vector<Point2> rebuilt;
    for (const auto& q : r.profile.samples)
        rebuilt.push_back({q.x, q.z + start.z - r.profile.samples.front().z});
    r.distance = hausdorff(rebuilt, trace(c, t0, t1, 8001));
    return r;
}

}  // namespace revolve::testing
