#pragma once

#include "deadbeat/matrix.hpp"

#include <functional>
#include <string>
#include <vector>

namespace deadbeat {

/// Real cube root with the odd sign convention, so that cube-power maps are
/// bijections on the reals.
double signed_cbrt(double x);

/// Closed-form nonlinear system bundle: dynamics f with exact inverse,
/// output map h, and the derived deadbeat observer update with horizon p.
struct SystemFamily {
    std::string name;
    std::size_t state_dim = 0;
    std::size_t output_dim = 0;
    std::vector<double> params;
    std::size_t p = 0;

    std::function<RealVector(const RealVector&)> f;
    std::function<RealVector(const RealVector&)> f_inv;
    std::function<RealVector(const RealVector&)> h;
    std::function<RealVector(const RealVector&, const RealVector&)> observer_step;
};

/// Third-order quadratic map with scalar output and observer horizon 3.
/// Requires b != 0 (throws Error(zero_b)); defaults match the bundled
/// reference scenario.
SystemFamily chaotic_family(double a = 1.0, double b = 1.0 / 3.0);

/// Third-order cube-power map with scalar output and observer horizon 3.
SystemFamily cube_family();

/// Lookup by name ("chaotic" takes parameters {a, b}; "cube" takes none).
SystemFamily family_by_name(const std::string& name, const std::vector<double>& params);

}  // namespace deadbeat
