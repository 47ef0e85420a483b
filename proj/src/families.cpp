#include "deadbeat/families.hpp"

#include "deadbeat/errors.hpp"

#include <cmath>

namespace deadbeat {

double signed_cbrt(double x) { return std::cbrt(x); }

SystemFamily chaotic_family(double a, double b) {
    if (b == 0.0) raise(errc::zero_b, "parameter b must be nonzero for the map to be invertible");

    SystemFamily fam;
    fam.name = "chaotic";
    fam.state_dim = 3;
    fam.output_dim = 1;
    fam.params = {a, b};
    fam.p = 3;

    fam.f = [a, b](const RealVector& x) -> RealVector {
        return {1.0 + x[1] - a * x[0] * x[0], b * x[0] + x[2], -b * x[0]};
    };
    fam.f_inv = [a, b](const RealVector& x) -> RealVector {
        return {-x[2] / b, -1.0 + a / (b * b) * x[2] * x[2] + x[0], x[1] + x[2]};
    };
    fam.h = [](const RealVector& x) -> RealVector { return {x[2]}; };
    fam.observer_step = [a, b](const RealVector& xh, const RealVector& yv) -> RealVector {
        const double y = yv[0];
        const double d = xh[2] * xh[2] - y * y;  // output-mismatch square term
        const double u = xh[0] + a / (b * b) * d;
        return {1.0 + xh[1] + xh[2] - y - a * u * u, b * xh[0] + a / b * d + y, -b * xh[0] - a / b * d};
    };
    return fam;
}

SystemFamily cube_family() {
    SystemFamily fam;
    fam.name = "cube";
    fam.state_dim = 3;
    fam.output_dim = 1;
    fam.p = 3;

    fam.f = [](const RealVector& x) -> RealVector {
        return {x[1], signed_cbrt(x[2]), x[0] * x[0] * x[0] + x[1] * x[1] * x[1]};
    };
    fam.f_inv = [](const RealVector& x) -> RealVector {
        return {signed_cbrt(x[2] - x[0] * x[0] * x[0]), x[0], x[1] * x[1] * x[1]};
    };
    fam.h = [](const RealVector& x) -> RealVector { return {x[0]}; };
    // f applied to the single point where the one-step preimage set meets
    // the measured output fiber.
    fam.observer_step = [](const RealVector& xh, const RealVector& yv) -> RealVector {
        const double y = yv[0];
        const double y3 = y * y * y;
        return {xh[1], signed_cbrt(xh[2] - xh[0] * xh[0] * xh[0] + y3), xh[1] * xh[1] * xh[1] + y3};
    };
    return fam;
}

SystemFamily family_by_name(const std::string& name, const std::vector<double>& params) {
    if (name == "cube") {
        if (!params.empty()) raise(errc::parse_error, "family 'cube' takes no parameters");
        return cube_family();
    }
    if (name == "chaotic") {
        if (params.empty()) return chaotic_family();
        if (params.size() != 2) raise(errc::parse_error, "family 'chaotic' takes parameters {a, b}");
        return chaotic_family(params[0], params[1]);
    }
    raise(errc::unsupported_family, "unknown system family '" + name + "'");
}

}  // namespace deadbeat
