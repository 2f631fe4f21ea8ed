#include "revolve/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/tools/roots.hpp>

#include "revolve/error.hpp"

namespace revolve {

namespace numerics {

double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol)
{
    if (a == b)
        return 0.0;
    using boost::math::quadrature::gauss_kronrod;
    double error = 0.0;
    double l1 = 0.0;
    // Boost compares the scaled tolerance against an unscaled error estimate,
    // which never converges on short intervals; integrate on [-1, 1] instead.
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    auto unit = [&f, mid, half](double u) { return f(mid + half * u); };
    double value = gauss_kronrod<double, 31>::integrate(unit, -1.0, 1.0, 15, tol, &error, &l1);
    value *= half;
    error *= std::abs(half);
    l1 *= std::abs(half);
    if (!std::isfinite(value) || error > std::max(1e-9, 1e3 * tol) * std::max(1.0, l1)) {
        std::ostringstream msg;
        msg << "Gauss-Kronrod on [" << a << ", " << b << "] reached error estimate " << error;
        throw Error(ErrorKind::QuadratureFailure, msg.str());
    }
    return value;
}

double integrate_endpoint_singular(const EndpointIntegrand& f, double a, double b, double tol)
{
    if (a == b)
        return 0.0;
    if (b < a)
        return -integrate_endpoint_singular(
            [&f](double x, double offset) { return f(x, -offset); }, b, a, tol);
    boost::math::quadrature::tanh_sinh<double> integrator(12);
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(f, a, b, tol, &error, &l1);
    if (!std::isfinite(value) || error > std::max(1e-9, 1e3 * tol) * std::max(1.0, l1)) {
        std::ostringstream msg;
        msg << "tanh-sinh on [" << a << ", " << b << "] reached error estimate " << error;
        throw Error(ErrorKind::QuadratureFailure, msg.str());
    }
    return value;
}

double find_root(const std::function<double(double)>& f, double a, double b, double xtol)
{
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if (!(std::signbit(fa) != std::signbit(fb)) || !std::isfinite(fa) || !std::isfinite(fb)) {
        std::ostringstream msg;
        msg << "no sign change on [" << a << ", " << b << "]: f(a)=" << fa << ", f(b)=" << fb;
        throw Error(ErrorKind::RootBracketFailure, msg.str());
    }
    auto tolerance = [xtol](double lo, double hi) { return std::abs(hi - lo) <= xtol; };
    std::uintmax_t max_iter = 200;
    const auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, fa, fb, tolerance, max_iter);
    if (std::abs(hi - lo) > xtol) {
        // TOMS 748 stalls on nearly flat brackets; finish by bisection.
        double l = lo;
        double h = hi;
        double fl = f(l);
        while (std::abs(h - l) > xtol) {
            const double m = 0.5 * (l + h);
            if (m <= l || m >= h)
                break;
            const double fm = f(m);
            if (fm == 0.0)
                return m;
            if (std::signbit(fm) == std::signbit(fl)) {
                l = m;
                fl = fm;
            } else {
                h = m;
            }
        }
        return 0.5 * (l + h);
    }
    return 0.5 * (lo + hi);
}

std::vector<Interval> negative_regions(const std::function<double(double)>& g, Interval range,
                                       int samples, double xtol)
{
    std::vector<Interval> out;
    if (samples < 2)
        samples = 2;
    std::vector<double> xs(samples);
    std::vector<double> gs(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = (i == samples - 1) ? range.hi : range.lo + range.width() * i / (samples - 1);
        gs[i] = g(xs[i]);
    }
    bool inside = gs[0] < 0;
    double start = range.lo;
    for (int i = 1; i < samples; ++i) {
        const bool now = gs[i] < 0;
        if (now == inside)
            continue;
        const double root = find_root(g, xs[i - 1], xs[i], xtol);
        if (inside)
            out.push_back({start, root});
        else
            start = root;
        inside = now;
    }
    if (inside)
        out.push_back({start, range.hi});
    return out;
}

Antiderivative::Antiderivative(ScalarFunction integrand, Interval domain, double anchor, double tol,
                               int nodes)
    : integrand_(std::move(integrand)), span_(hull(domain, anchor)), anchor_(anchor), tol_(tol)
{
    nodes = std::max(nodes, 2);
    nodes_.reserve(nodes + 1);
    for (int i = 0; i < nodes; ++i)
        nodes_.push_back(i == nodes - 1 ? span_.hi : span_.lo + span_.width() * i / (nodes - 1));
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), anchor_);
    if (it == nodes_.end() || *it != anchor_)
        it = nodes_.insert(it, anchor_);
    const auto k = static_cast<std::size_t>(it - nodes_.begin());
    values_.assign(nodes_.size(), 0.0);
    const auto& f = integrand_.value_fn();
    for (std::size_t j = k + 1; j < nodes_.size(); ++j)
        values_[j] = values_[j - 1] + integrate_smooth(f, nodes_[j - 1], nodes_[j], tol_);
    for (std::size_t j = k; j-- > 0;)
        values_[j] = values_[j + 1] - integrate_smooth(f, nodes_[j], nodes_[j + 1], tol_);
}

double Antiderivative::operator()(double x) const
{
    if (nodes_.empty())
        return 0.0;
    if (x == anchor_)
        return 0.0;
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), x);
    std::size_t j;
    if (it == nodes_.end()) {
        j = nodes_.size() - 1;
    } else {
        j = static_cast<std::size_t>(it - nodes_.begin());
        if (j > 0 && (x - nodes_[j - 1]) < (nodes_[j] - x))
            --j;
    }
    if (nodes_[j] == x)
        return values_[j];
    return values_[j] + integrate_smooth(integrand_.value_fn(), nodes_[j], x, tol_);
}

}  // namespace numerics
}  // namespace revolve
