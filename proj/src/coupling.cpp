#include "deadbeat/coupling.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/polynomial.hpp"
#include "deadbeat/rng.hpp"

#include <string>

namespace deadbeat {

namespace {

// s^(q-1) * (s - 1), ascending coefficients.
Polynomial target_charpoly(std::size_t q) {
    return Polynomial::monomial(q, Rational(1)) + Polynomial::monomial(q - 1, Rational(-1));
}

}  // namespace

CouplingMatrix validate_coupling(const RationalMatrix& g) {
    if (!g.is_square() || g.rows() == 0) {
        raise(errc::dimension_mismatch, "coupling matrix must be square and nonempty");
    }
    const std::size_t q = g.rows();

    for (std::size_t i = 0; i < q; ++i) {
        Rational sum(0);
        for (std::size_t j = 0; j < q; ++j) sum += g.at(i, j);
        if (sum != 1) {
            raise(errc::row_sum_violation,
                  "row " + std::to_string(i) + " sums to " + format_rational(sum) + ", expected 1");
        }
    }

    if (charpoly(g) != target_charpoly(q)) {
        raise(errc::spectrum_violation, "characteristic polynomial is not s^" + std::to_string(q - 1) + "*(s-1)");
    }

    // The spectrum condition bounds the horizon by max(1, q-1).
    CouplingMatrix out;
    out.g = g;
    RationalMatrix power = g;
    for (std::size_t r = 1; r <= q; ++r) {
        const RationalMatrix next = power * g;
        if (next == power) {
            out.horizon_r = r;
            out.left_eigvec = power.row(0);
            Rational weight_sum(0);
            for (const auto& w : out.left_eigvec) weight_sum += w;
            if (weight_sum != 1) {
                raise(errc::spectrum_violation, "consensus weights do not sum to one");
            }
            return out;
        }
        power = next;
    }
    raise(errc::spectrum_violation, "powers failed to stabilize despite valid spectrum");
}

std::size_t deadbeat_horizon(const RationalMatrix& g) { return validate_coupling(g).horizon_r; }

CouplingMatrix random_coupling(std::size_t q, std::size_t r, std::uint64_t seed) {
    if (q == 0) raise(errc::dimension_mismatch, "agent count must be positive");
    if (r < 1 || (q == 1 && r != 1) || (q > 1 && r > q - 1)) {
        raise(errc::invalid_horizon,
              "horizon " + std::to_string(r) + " is not attainable for " + std::to_string(q) + " agents");
    }
    if (q == 1) return validate_coupling(RationalMatrix::identity(1));

    Rng rng(seed);

    // Strictly upper triangular J with nilpotency index exactly r: leading
    // r x r shift block, remaining space filled with random shift blocks of
    // size <= r.
    RationalMatrix j(q - 1, q - 1);
    std::size_t offset = 0;
    bool first = true;
    while (offset < q - 1) {
        const std::size_t remaining = q - 1 - offset;
        const std::size_t block = first ? std::min(r, remaining)
                                        : static_cast<std::size_t>(rng.next_int(1, static_cast<std::int64_t>(
                                                                                       std::min(r, remaining))));
        for (std::size_t i = 0; i + 1 < block; ++i) j.at(offset + i, offset + i + 1) = 1;
        offset += block;
        first = false;
    }

    RationalMatrix core(q, q);
    core.at(0, 0) = 1;
    for (std::size_t i = 0; i < q - 1; ++i)
        for (std::size_t k = 0; k < q - 1; ++k) core.at(i + 1, k + 1) = j.at(i, k);

    // First pass insists on small printed entries; a fallback pass accepts
    // any invertible V so the generator always terminates.
    const Rational entry_cap(100);
    for (int pass = 0; pass < 2; ++pass) {
        for (int attempt = 0; attempt < 500; ++attempt) {
            RationalMatrix v(q, q);
            for (std::size_t i = 0; i < q; ++i) {
                v.at(i, 0) = 1;
                for (std::size_t k = 1; k < q; ++k) v.at(i, k) = rng.next_small_rational();
            }
            const auto v_inv = inverse(v);
            if (!v_inv) continue;
            const RationalMatrix g = v * core * *v_inv;
            if (pass == 0) {
                bool readable = true;
                for (const Rational& e : g.entries()) {
                    if (abs(e) > entry_cap) {
                        readable = false;
                        break;
                    }
                }
                if (!readable) continue;
            }
            CouplingMatrix out = validate_coupling(g);
            if (out.horizon_r != r) {
                raise(errc::invalid_horizon, "generated horizon disagrees with construction");
            }
            return out;
        }
    }
    raise(errc::invalid_horizon, "could not sample an invertible transformation");
}

}  // namespace deadbeat
