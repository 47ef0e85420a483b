#include "deadbeat/refcases.hpp"

#include "deadbeat/rational.hpp"

namespace deadbeat::refcases {

RationalMatrix coupling4() {
    return RationalMatrix::from_strings({{"0.4", "-0.2", "3.2", "-2.4"},
                                         {"0.4", "-0.2", "0.2", "0.6"},
                                         {"0.2", "-0.6", "0.6", "0.8"},
                                         {"0.3", "-0.4", "0.9", "0.2"}});
}

RationalVector coupling4_weights() { return {rat(1, 10), rat(-4, 5), rat(13, 10), rat(2, 5)}; }

RationalMatrix pair4_a() {
    return RationalMatrix::from_rows({{0, -1, 1, 0}, {-1, 0, 0, -1}, {1, 0, 0, 0}, {-1, -1, -1, 1}});
}

RationalMatrix pair4_c() { return RationalMatrix::from_rows({{0, -1, 1, -1}, {-1, 1, 0, 1}}); }

RationalMatrix pair4_h() {
    return RationalMatrix::from_strings({{"-1", "-5/4"}, {"1", "3/2"}, {"0", "-1/4"}, {"-2", "-7/4"}});
}

RationalMatrix gamma_nonkron() {
    return RationalMatrix::from_rows({{0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 1, -1, 0}});
}

Polynomial pair4_phi_charpoly() {
    // s^8 - 7/2 s^7 - 3/2 s^6 + 23/2 s^5 - 5/2 s^4 - 8 s^3 - 2 s^2
    return Polynomial({rat(0), rat(0), rat(-2), rat(-8), rat(-5, 2), rat(23, 2), rat(-3, 2), rat(-7, 2), rat(1)});
}

RealVector chaotic_x0() { return {1.0, -1.0, 1.0}; }

RealVector chaotic_xhat0() { return {0.0, 2.0, 1.0}; }

std::vector<RealVector> cube_array_initials() {
    return {{0.5, 0.5, 0.5}, {0.0, -1.0, 0.0}, {-0.5, 0.0, -0.5}, {-1.0, 0.5, 0.0}};
}

}  // namespace deadbeat::refcases
