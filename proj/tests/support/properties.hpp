#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "revolve/momentum.hpp"

// Module invariants evaluated on randomly drawn momenta.
namespace revolve::testing {

/// Polynomial momentum of degree <= 3 in (x - centre), scaled so that
/// |K| < 0.95 on its domain.
struct RandomMomentum {
    std::array<double, 4> coef{};
    double centre = 0.0;
    Interval domain;

    double operator()(double x) const;
    double deriv(double x) const;
    double second(double x) const;
    Momentum momentum() const;
};

RandomMomentum random_momentum(std::mt19937_64& rng);

struct PropertyResult {
    std::string name;
    double tolerance = 0.0;
    double worst = 0.0;  ///< largest residual seen; NaN or inf fails
    int cases = 0;
    std::string first_failure;

    bool pass() const { return cases > 0 && worst <= tolerance; }
};

/// Runs every property on `cases` random momenta drawn from `seed`.
std::vector<PropertyResult> run_property_suite(int cases, std::uint64_t seed);

}  // namespace revolve::testing
