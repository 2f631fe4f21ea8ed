#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace revolve::ode {

template <std::size_t N>
using State = std::array<double, N>;

template <std::size_t N>
struct Trial {
    State<N> y{};
    double error = 0.0;  ///< scaled RMS error; accept when <= 1
    bool finite = true;
};

struct Tolerance {
    double rtol = 1e-10;
    double atol = 1e-12;
};

/// One Dormand-Prince 5(4) step of size h from (t, y). Returns the fifth-order
/// solution and the scaled norm of the embedded error estimate.
template <std::size_t N, class Rhs>
Trial<N> dopri5_step(const Rhs& rhs, double t, const State<N>& y, double h, Tolerance tol)
{
    constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
    constexpr double a21 = 1.0 / 5;
    constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
    constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
    constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                     a54 = -212.0 / 729;
    constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                     a64 = 49.0 / 176, a65 = -5103.0 / 18656;
    constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                     b6 = 11.0 / 84;
    constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                     e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

    State<N> k1, k2, k3, k4, k5, k6, k7, tmp;
    auto stage = [&](auto&& combine) {
        for (std::size_t i = 0; i < N; ++i)
            tmp[i] = y[i] + h * combine(i);
        return tmp;
    };
    k1 = rhs(t, y);
    k2 = rhs(t + c2 * h, stage([&](std::size_t i) { return a21 * k1[i]; }));
    k3 = rhs(t + c3 * h, stage([&](std::size_t i) { return a31 * k1[i] + a32 * k2[i]; }));
    k4 = rhs(t + c4 * h,
             stage([&](std::size_t i) { return a41 * k1[i] + a42 * k2[i] + a43 * k3[i]; }));
    k5 = rhs(t + c5 * h, stage([&](std::size_t i) {
                 return a51 * k1[i] + a52 * k2[i] + a53 * k3[i] + a54 * k4[i];
             }));
    k6 = rhs(t + h, stage([&](std::size_t i) {
                 return a61 * k1[i] + a62 * k2[i] + a63 * k3[i] + a64 * k4[i] + a65 * k5[i];
             }));
    Trial<N> out;
    for (std::size_t i = 0; i < N; ++i)
        out.y[i] = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] + b5 * k5[i] + b6 * k6[i]);
    k7 = rhs(t + h, out.y);

    double sum = 0.0;
    for (std::size_t i = 0; i < N; ++i) {
        const double err = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i]
                                + e7 * k7[i]);
        const double scale = tol.atol + tol.rtol * std::max(std::abs(y[i]), std::abs(out.y[i]));
        sum += (err / scale) * (err / scale);
        if (!std::isfinite(out.y[i]) || !std::isfinite(err))
            out.finite = false;
    }
    out.error = std::sqrt(sum / N);
    if (!std::isfinite(out.error))
        out.finite = false;
    return out;
}

/// Step-size update for a fifth-order pair.
inline double next_step(double h, double error)
{
    if (error == 0.0)
        return 5 * h;
    const double factor = 0.9 * std::pow(error, -0.2);
    return h * std::clamp(factor, 0.2, 5.0);
}

}  // namespace revolve::ode
