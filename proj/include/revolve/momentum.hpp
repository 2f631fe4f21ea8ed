#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "revolve/function.hpp"

namespace revolve {

/// Geometric linear momentum K(x) of a generatrix: the z-component of the
/// unit tangent expressed as a function of the signed distance x to the axis.
///
/// A Momentum is immutable and cheap to copy; any cached antiderivative is
/// shared between copies and never mutated after construction.
class Momentum {
public:
    using Fn = std::function<double(double)>;

    Momentum() = default;
    Momentum(Fn eval, Fn deriv, Interval domain)
        : eval_(std::move(eval)), deriv_(std::move(deriv)), domain_(domain)
    {
    }

    double eval(double x) const { return eval_(x); }
    double deriv(double x) const { return deriv_(x); }
    double operator()(double x) const { return eval_(x); }
    Interval domain() const { return domain_; }

    /// Same momentum with K replaced by -K (the opposite orientation).
    Momentum negated() const;

private:
    Fn eval_;
    Fn deriv_;
    Interval domain_;
};

enum class PrescriptionKind { OnParallels, OnMeridians, Mean, Gauss };

std::string_view to_string(PrescriptionKind kind);
std::optional<PrescriptionKind> parse_prescription_kind(std::string_view text);

/// A curvature function of x together with its integration data.
struct Prescription {
    PrescriptionKind kind = PrescriptionKind::OnParallels;
    ScalarFunction func;
    double constant = 0.0;        ///< integration constant c (unused for OnParallels)
    int sign = 1;                 ///< branch sign, Gauss kind only
    Interval domain;
    std::optional<double> anchor; ///< antiderivative anchor; defaults to domain.lo
    double tolerance = 1e-12;     ///< quadrature tolerance of the antiderivative
};

/// Width-relative threshold under which |x| is treated as the axis.
double axis_tolerance(Interval domain);

/// Principal curvature on parallels prescribed: K(x) = x p(x). No free constant.
Momentum momentum_from_kp(const ScalarFunction& p, Interval domain);

/// Principal curvature on meridians prescribed: K = A(x) + c where A is the
/// antiderivative of k anchored at `anchor` (default: left end of the domain).
Momentum momentum_from_km(const ScalarFunction& k, double c, Interval domain,
                          std::optional<double> anchor = {}, double tol = 1e-12);

/// Mean curvature prescribed: x K(x) = 2 A(x) + c with A the anchored
/// antiderivative of x H(x).
Momentum momentum_from_mean(const ScalarFunction& h, double c, Interval domain,
                            std::optional<double> anchor = {}, double tol = 1e-12);

/// Gauss curvature prescribed: K(x) = sign * sqrt(2 A(x) + c) with A the
/// anchored antiderivative of x K_G(x).
Momentum momentum_from_gauss(const ScalarFunction& gauss, double c, int sign, Interval domain,
                             std::optional<double> anchor = {}, double tol = 1e-12);

Momentum momentum_from(const Prescription& prescription);

/// Maximal sub-intervals of the momentum's domain on which K(x)^2 < 1.
/// Interior endpoints are the roots of K^2 - 1, located to 1e-12 in x.
std::vector<Interval> admissible_intervals(const Momentum& m);

}  // namespace revolve
