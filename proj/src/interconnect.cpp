#include "deadbeat/interconnect.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/families.hpp"
#include "deadbeat/rng.hpp"

#include <cmath>
#include <string>

namespace deadbeat {

std::size_t agent_count(const Interconnection& ic) {
    if (const auto* lin = std::get_if<LinearInterconnection>(&ic)) return lin->q;
    return std::get<CubeInterconnection>(ic).g.size();
}

std::size_t output_dim(const Interconnection& ic) {
    if (const auto* lin = std::get_if<LinearInterconnection>(&ic)) return lin->m;
    return 1;
}

std::size_t horizon(const Interconnection& ic) {
    if (const auto* lin = std::get_if<LinearInterconnection>(&ic)) return lin->horizon;
    return std::get<CubeInterconnection>(ic).g.horizon_r;
}

RationalMatrix disagreement_matrix(std::size_t q, std::size_t m) {
    RationalMatrix d((q - 1) * m, q * m);
    for (std::size_t i = 0; i + 1 < q; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            d.at(i * m + k, i * m + k) = 1;
            d.at(i * m + k, (i + 1) * m + k) = -1;
        }
    return d;
}

RationalMatrix diagonal_embedding(std::size_t q, std::size_t m) {
    return kron(RationalMatrix::ones(q, 1), RationalMatrix::identity(m));
}

std::size_t linear_horizon(const RationalMatrix& gamma, std::size_t q, std::size_t m) {
    if (q == 0 || m == 0) raise(errc::dimension_mismatch, "agent count and output dimension must be positive");
    if (gamma.rows() != q * m || gamma.cols() != q * m) {
        raise(errc::dimension_mismatch, "interconnection matrix must be " + std::to_string(q * m) + "x" +
                                            std::to_string(q * m));
    }
    const RationalMatrix d = disagreement_matrix(q, m);
    if (!(d * (gamma * diagonal_embedding(q, m))).is_zero()) {
        raise(errc::diagonal_not_invariant, "map does not send equal output stacks to equal output stacks");
    }
    RationalMatrix power = gamma;
    for (std::size_t r = 1; r <= q * m; ++r) {
        if ((d * power).is_zero()) return r;
        power = power * gamma;
    }
    raise(errc::not_deadbeat, "no power within qm steps lands on the diagonal");
}

std::size_t linear_horizon(const LinearInterconnection& ic) { return ic.horizon; }

Interconnection kron_interconnection(const CouplingMatrix& g, const RationalMatrix& qmat) {
    if (!qmat.is_square() || qmat.rows() == 0) {
        raise(errc::dimension_mismatch, "the per-output factor must be square and nonempty");
    }
    LinearInterconnection ic;
    ic.gamma = kron(g.g, qmat);
    ic.q = g.size();
    ic.m = qmat.rows();
    ic.horizon = linear_horizon(ic.gamma, ic.q, ic.m);
    ic.kron_form = KronFactors{g, qmat};
    return ic;
}

Interconnection raw_linear_interconnection(const RationalMatrix& gamma, std::size_t q, std::size_t m) {
    LinearInterconnection ic;
    ic.horizon = linear_horizon(gamma, q, m);
    ic.gamma = gamma;
    ic.q = q;
    ic.m = m;
    return ic;
}

Interconnection cube_interconnection(const CouplingMatrix& g) { return CubeInterconnection{g}; }

Interconnection tree_interconnection(const std::vector<std::optional<std::size_t>>& parent, std::size_t m) {
    const std::size_t q = parent.size();
    if (q == 0 || m == 0) raise(errc::dimension_mismatch, "tree needs at least one agent and a positive output dim");

    std::size_t roots = 0;
    for (std::size_t i = 0; i < q; ++i) {
        if (!parent[i]) {
            ++roots;
        } else if (*parent[i] >= q) {
            raise(errc::dimension_mismatch, "parent index " + std::to_string(*parent[i]) + " out of range");
        } else if (*parent[i] == i) {
            raise(errc::cycle_detected, "agent " + std::to_string(i) + " is its own parent");
        }
    }
    if (roots > 1) raise(errc::multiple_roots, std::to_string(roots) + " roots found, expected exactly one");
    if (roots == 0) raise(errc::cycle_detected, "no root: every agent has a parent, so the graph has a cycle");

    std::size_t depth = 0;
    for (std::size_t i = 0; i < q; ++i) {
        std::size_t steps = 0;
        std::size_t node = i;
        while (parent[node]) {
            node = *parent[node];
            if (++steps > q) raise(errc::cycle_detected, "parent chain from agent " + std::to_string(i) + " cycles");
        }
        depth = std::max(depth, steps);
    }

    RationalMatrix gamma(q * m, q * m);
    for (std::size_t i = 0; i < q; ++i) {
        const std::size_t j = parent[i].value_or(i);
        for (std::size_t k = 0; k < m; ++k) gamma.at(i * m + k, j * m + k) = 1;
    }

    LinearInterconnection ic;
    ic.gamma = std::move(gamma);
    ic.q = q;
    ic.m = m;
    ic.horizon = linear_horizon(ic.gamma, q, m);
    if (ic.horizon != std::max<std::size_t>(depth, 1)) {
        raise(errc::not_deadbeat, "tree horizon disagrees with its depth");
    }
    return ic;
}

RationalMatrix y_sigma_matrix(const LinearInterconnection& ic, std::size_t sigma) {
    return disagreement_matrix(ic.q, ic.m) * matpow(ic.gamma, sigma);
}

bool check_linear_compatibility(const RationalMatrix& a, const RationalMatrix& c, const LinearInterconnection& ic,
                                std::size_t p) {
    const std::size_t n = a.rows();
    if (!a.is_square()) raise(errc::dimension_mismatch, "state matrix must be square");
    if (c.rows() != ic.m || c.cols() != n) {
        raise(errc::dimension_mismatch, "output matrix shape does not match the interconnection");
    }
    if (rank(a) != n) raise(errc::singular_a, "state matrix is singular");
    const std::size_t q = ic.q;
    const RationalMatrix iq = RationalMatrix::identity(q);

    // Output-prediction maps (I_q x C*A^k) for k = 0..p.
    std::vector<RationalMatrix> predictions;
    RationalMatrix ak = RationalMatrix::identity(n);
    for (std::size_t k = 0; k <= p; ++k) {
        predictions.push_back(kron(iq, c * ak));
        ak = ak * a;
    }

    for (std::size_t sigma = 1; sigma <= ic.horizon; ++sigma) {
        const RationalMatrix member = y_sigma_matrix(ic, sigma);
        RationalMatrix stacked = member * predictions[0];
        for (std::size_t k = 1; k < p; ++k) stacked = vstack(stacked, member * predictions[k]);
        const RationalMatrix kernel = nullspace_basis(stacked);
        if (!(member * predictions[p] * kernel).is_zero()) return false;
    }
    return true;
}

bool check_cube_compatibility(const CouplingMatrix& g, std::size_t samples, double tol, std::uint64_t seed) {
    const std::size_t q = g.size();
    const RationalMatrix consensus =
        RationalMatrix::ones(q, 1) * RationalMatrix::column(g.left_eigvec).transpose();
    Rng rng(seed);

    const auto cube_stack = [&](const RealVector& y) {
        RealVector w(q, 0.0);
        for (std::size_t i = 0; i < q; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < q; ++j) acc += to_double(g.g.at(i, j)) * y[j] * y[j] * y[j];
            w[i] = signed_cbrt(acc);
        }
        return w;
    };

    for (std::size_t sigma = 1; sigma <= g.horizon_r; ++sigma) {
        const RationalMatrix basis = nullspace_basis(matpow(g.g, sigma) - consensus);
        for (std::size_t s = 0; s < samples; ++s) {
            // Draw two cubed stacks from the null space, take signed cube
            // roots, and check that the cube-sum recombination is still
            // driven onto the diagonal within sigma steps. Membership is
            // measured in cubed coordinates, where these sets are linear
            // subspaces (cbrt would amplify roundoff without bound when the
            // consensus value is near zero).
            RealVector combined(q, 0.0);
            for (int rep = 0; rep < 2; ++rep) {
                const RationalVector coeffs = rng.next_unit_rational_vector(basis.cols());
                const RealVector cubed = to_real(basis * coeffs);
                for (std::size_t i = 0; i < q; ++i) combined[i] += cubed[i];
            }
            RealVector y(q);
            for (std::size_t i = 0; i < q; ++i) y[i] = signed_cbrt(combined[i]);
            for (std::size_t step = 0; step < sigma; ++step) y = cube_stack(y);
            double spread = 0.0;
            for (std::size_t i = 0; i < q; ++i) {
                spread = std::max(spread, std::abs(y[i] * y[i] * y[i] - y[0] * y[0] * y[0]));
            }
            if (spread > tol) return false;
        }
    }
    return true;
}

RationalVector apply_exact(const LinearInterconnection& ic, const RationalVector& stacked) {
    return ic.gamma * stacked;
}

RealVector apply_interconnection(const Interconnection& ic, const RealVector& stacked) {
    if (const auto* lin = std::get_if<LinearInterconnection>(&ic)) {
        return to_real(lin->gamma) * stacked;
    }
    const auto& cube = std::get<CubeInterconnection>(ic);
    const std::size_t q = cube.g.size();
    if (stacked.size() != q) raise(errc::dimension_mismatch, "cube interconnection expects one output per agent");
    RealVector out(q, 0.0);
    for (std::size_t i = 0; i < q; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < q; ++j) {
            acc += to_double(cube.g.g.at(i, j)) * stacked[j] * stacked[j] * stacked[j];
        }
        out[i] = signed_cbrt(acc);
    }
    return out;
}

}  // namespace deadbeat
