#include "revolve/momentum.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <sstream>

#include "revolve/error.hpp"
#include "revolve/numerics.hpp"

namespace revolve {

namespace {

constexpr int kCheckSamples = 2049;

void require_valid_domain(Interval domain)
{
    if (!(domain.lo < domain.hi) || !std::isfinite(domain.lo) || !std::isfinite(domain.hi)) {
        std::ostringstream msg;
        msg << "domain [" << domain.lo << ", " << domain.hi << "] is empty or not finite";
        throw Error(ErrorKind::InvalidArgument, msg.str());
    }
}

double sample_point(Interval domain, int i, int n)
{
    return i == n - 1 ? domain.hi : domain.lo + domain.width() * i / (n - 1);
}

}  // namespace

Momentum Momentum::negated() const
{
    auto e = eval_;
    auto d = deriv_;
    return Momentum([e](double x) { return -e(x); }, [d](double x) { return -d(x); }, domain_);
}

std::string_view to_string(PrescriptionKind kind)
{
    switch (kind) {
    case PrescriptionKind::OnParallels: return "kp";
    case PrescriptionKind::OnMeridians: return "km";
    case PrescriptionKind::Mean: return "mean";
    case PrescriptionKind::Gauss: return "gauss";
    }
    return "?";
}

std::optional<PrescriptionKind> parse_prescription_kind(std::string_view text)
{
    if (text == "kp")
        return PrescriptionKind::OnParallels;
    if (text == "km")
        return PrescriptionKind::OnMeridians;
    if (text == "mean")
        return PrescriptionKind::Mean;
    if (text == "gauss")
        return PrescriptionKind::Gauss;
    return std::nullopt;
}

double axis_tolerance(Interval domain)
{
    return 1e-13 * std::max(domain.width(), std::abs(domain.hi) + std::abs(domain.lo));
}

Momentum momentum_from_kp(const ScalarFunction& p, Interval domain)
{
    require_valid_domain(domain);
    for (int i = 0; i < kCheckSamples; ++i) {
        const double x = sample_point(domain, i, kCheckSamples);
        const double k = x * p(x);
        if (!std::isfinite(k) || std::abs(k) > 1.0 + 1e-12) {
            std::ostringstream msg;
            msg << "|x p(x)| = " << std::abs(k) << " exceeds 1 at x = " << x;
            throw Error(ErrorKind::DomainViolation, msg.str());
        }
    }
    return Momentum([p](double x) { return x * p(x); },
                    [p](double x) { return p(x) + x * p.diff(x); }, domain);
}

Momentum momentum_from_km(const ScalarFunction& k, double c, Interval domain,
                          std::optional<double> anchor, double tol)
{
    require_valid_domain(domain);
    auto integral = std::make_shared<const numerics::Antiderivative>(
        k, domain, anchor.value_or(domain.lo), tol);
    return Momentum([integral, c](double x) { return (*integral)(x) + c; },
                    [k](double x) { return k(x); }, domain);
}

Momentum momentum_from_mean(const ScalarFunction& h, double c, Interval domain,
                            std::optional<double> anchor, double tol)
{
    require_valid_domain(domain);
    ScalarFunction xh([h](double x) { return x * h(x); });
    auto integral = std::make_shared<const numerics::Antiderivative>(
        xh, domain, anchor.value_or(domain.lo), tol);
    const double eps = axis_tolerance(domain);
    if (domain.contains(0.0)) {
        const double at_axis = 2 * (*integral)(0.0) + c;
        if (std::abs(at_axis) > 1e-12 * (1 + std::abs(c))) {
            std::ostringstream msg;
            msg << "x K(x) = " << at_axis << " at x = 0; the momentum has a pole on the axis";
            throw Error(ErrorKind::SingularAxis, msg.str());
        }
    }
    // On the axis the numerator vanishes to second order, so K(0) = 0 and K'(0) = H(0).
    auto eval = [integral, c, eps](double x) {
        if (std::abs(x) < eps)
            return 0.0;
        return (2 * (*integral)(x) + c) / x;
    };
    auto deriv = [eval, h, eps](double x) {
        if (std::abs(x) < eps)
            return h(0.0);
        return 2 * h(x) - eval(x) / x;
    };
    return Momentum(eval, deriv, domain);
}

Momentum momentum_from_gauss(const ScalarFunction& gauss, double c, int sign, Interval domain,
                             std::optional<double> anchor, double tol)
{
    require_valid_domain(domain);
    if (sign != 1 && sign != -1)
        throw Error(ErrorKind::InvalidArgument, "Gauss prescription needs sign +1 or -1");
    ScalarFunction xk([gauss](double x) { return x * gauss(x); });
    auto integral = std::make_shared<const numerics::Antiderivative>(
        xk, domain, anchor.value_or(domain.lo), tol);
    auto radicand = [integral, c](double x) { return 2 * (*integral)(x) + c; };

    const double slack = 1e-12 * (1 + std::abs(c));
    auto below = numerics::negative_regions([&](double x) { return radicand(x) + slack; }, domain,
                                            kCheckSamples);
    if (!below.empty()) {
        std::ostringstream msg;
        msg << "2 int x K_G dx + c < 0 on [" << below.front().lo << ", " << below.front().hi
            << "]";
        throw NegativeRadicandError(below.front().lo, below.front().hi, msg.str());
    }

    const double s = sign;
    auto eval = [radicand, s](double x) { return s * std::sqrt(std::max(0.0, radicand(x))); };
    auto deriv = [eval, gauss, s](double x) {
        const double k = eval(x);
        const double num = x * gauss(x);
        if (k != 0.0)
            return num / k;
        if (num == 0.0) {
            // Double root of the radicand: K'^2 = (x K_G)'.
            const double second = gauss(x) + x * gauss.diff(x);
            return s * std::sqrt(std::max(0.0, second));
        }
        return std::copysign(std::numeric_limits<double>::infinity(), s * num);
    };
    return Momentum(eval, deriv, domain);
}

Momentum momentum_from(const Prescription& p)
{
    switch (p.kind) {
    case PrescriptionKind::OnParallels:
        return momentum_from_kp(p.func, p.domain);
    case PrescriptionKind::OnMeridians:
        return momentum_from_km(p.func, p.constant, p.domain, p.anchor, p.tolerance);
    case PrescriptionKind::Mean:
        return momentum_from_mean(p.func, p.constant, p.domain, p.anchor, p.tolerance);
    case PrescriptionKind::Gauss:
        return momentum_from_gauss(p.func, p.constant, p.sign, p.domain, p.anchor, p.tolerance);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown prescription kind");
}

std::vector<Interval> admissible_intervals(const Momentum& m)
{
    auto excess = [&m](double x) {
        const double k = m.eval(x);
        return std::isfinite(k) ? k * k - 1.0 : 1.0;
    };
    return numerics::negative_regions(excess, m.domain(), kCheckSamples, 1e-12);
}

}  // namespace revolve
