#pragma once

#include "deadbeat/rational.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace deadbeat {

/// Deterministic random source. Built on the standard-specified mt19937_64
/// stream with hand-rolled value mappings, so identical seeds reproduce
/// identical draws on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [lo, hi], inclusive.
    std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
        const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next_u64() % span);
    }

    /// Uniform double in [0, 1).
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double next_real(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

    /// Small-magnitude rational: |num| <= 9, den in {1, 2, 4, 5, 10}.
    Rational next_small_rational() {
        static constexpr long dens[] = {1, 2, 4, 5, 10};
        const long num = static_cast<long>(next_int(-9, 9));
        const long den = dens[next_int(0, 4)];
        Rational value(num, den);
        value.canonicalize();
        return value;
    }

    /// Rational in [-1, 1] with a small denominator.
    Rational next_unit_rational() {
        static constexpr long dens[] = {1, 2, 4, 5, 10};
        const long den = dens[next_int(0, 4)];
        const long num = static_cast<long>(next_int(-den, den));
        Rational value(num, den);
        value.canonicalize();
        return value;
    }

    RationalVector next_unit_rational_vector(std::size_t n) {
        RationalVector v(n);
        for (auto& x : v) x = next_unit_rational();
        return v;
    }

    std::vector<double> next_real_vector(std::size_t n, double lo, double hi) {
        std::vector<double> v(n);
        for (auto& x : v) x = next_real(lo, hi);
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace deadbeat
