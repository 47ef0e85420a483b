#include "deadbeat/observer.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace deadbeat {

namespace {

void require_pair(const RationalMatrix& a, const RationalMatrix& c) {
    if (!a.is_square() || a.rows() == 0) raise(errc::dimension_mismatch, "state matrix must be square and nonempty");
    if (c.cols() != a.rows() || c.rows() == 0) {
        raise(errc::dimension_mismatch, "output matrix shape does not match state dimension");
    }
    if (rank(a) != a.rows()) raise(errc::singular_a, "state matrix is singular");
    if (rank(c) != c.rows()) raise(errc::rank_deficient_c, "output matrix is not full row rank");
}

}  // namespace

SubspaceChain subspace_chain(const RationalMatrix& a, const RationalMatrix& c) {
    require_pair(a, c);

    SubspaceChain chain;
    chain.s.push_back(nullspace_basis(c));
    while (true) {
        const RationalMatrix& cur = chain.s.back();
        if (cur.cols() == 0) break;
        // A*S_k ∩ N(C) = image of N(C * A * s_k) under A * s_k. A is
        // nonsingular and the chain is nested, so column ranks are exact.
        const RationalMatrix img = a * cur;
        const RationalMatrix next = img * nullspace_basis(c * img);
        if (next.cols() == cur.cols()) break;  // nested + equal dimension => stabilized
        chain.s.push_back(next);
    }
    return chain;
}

LinearDeadbeatObserver design_observer(const RationalMatrix& a, const RationalMatrix& c) {
    require_pair(a, c);
    const std::size_t n = a.rows();
    const std::size_t m = c.rows();

    LinearDeadbeatObserver obs;
    obs.a = a;
    obs.c = c;
    obs.chain = subspace_chain(a, c);

    // Candidate bases for S_k, k = -1, 0, 1, ...; dimensions only decrease,
    // so the first k whose subspace has dimension m decides the design.
    std::vector<const RationalMatrix*> candidates;
    const RationalMatrix full = RationalMatrix::identity(n);
    candidates.push_back(&full);
    for (const auto& s : obs.chain.s) candidates.push_back(&s);

    for (std::size_t idx = 0; idx < candidates.size(); ++idx) {
        const RationalMatrix& basis = *candidates[idx];
        const std::size_t p = idx + 1;  // idx 0 is S_{-1}
        if (p > n) break;
        if (basis.cols() > m) continue;
        if (basis.cols() < m) break;  // chain never regains dimension

        const RationalMatrix b = a * basis;
        const auto cb_inv = inverse(c * b);
        if (!cb_inv) break;  // A*S_k meets N(C) nontrivially; later k cannot fix it

        obs.h_gain = b * *cb_inv;
        obs.l_gain = a * obs.h_gain;
        obs.p = p;
        if (nilpotency_index(a - obs.l_gain * c) != p) {
            raise(errc::nilpotency_check_failed, "designed gain is not deadbeat with the predicted horizon");
        }
        return obs;
    }
    raise(errc::not_deadbeat_observable, "no horizon p <= n satisfies the direct-sum condition");
}

RealVector observer_step(const LinearDeadbeatObserver& obs, const RealVector& xhat, const RealVector& y) {
    if (xhat.size() != obs.a.rows() || y.size() != obs.c.rows()) {
        raise(errc::dimension_mismatch, "observer_step: state/output sizes do not match the design");
    }
    const RealMatrix a = to_real(obs.a);
    const RealMatrix c = to_real(obs.c);
    const RealMatrix h = to_real(obs.h_gain);
    RealVector innovation = c * xhat;
    for (std::size_t i = 0; i < innovation.size(); ++i) innovation[i] = y[i] - innovation[i];
    const RealVector corrected_delta = h * innovation;
    RealVector corrected = xhat;
    for (std::size_t i = 0; i < corrected.size(); ++i) corrected[i] += corrected_delta[i];
    return a * corrected;
}

RationalVector observer_step_exact(const LinearDeadbeatObserver& obs, const RationalVector& xhat,
                                   const RationalVector& y) {
    if (xhat.size() != obs.a.rows() || y.size() != obs.c.rows()) {
        raise(errc::dimension_mismatch, "observer_step: state/output sizes do not match the design");
    }
    RationalVector innovation = obs.c * xhat;
    for (std::size_t i = 0; i < innovation.size(); ++i) innovation[i] = y[i] - innovation[i];
    const RationalVector delta = obs.h_gain * innovation;
    RationalVector corrected = xhat;
    for (std::size_t i = 0; i < corrected.size(); ++i) corrected[i] += delta[i];
    return obs.a * corrected;
}

void write_observer(std::ostream& out, const LinearDeadbeatObserver& obs) {
    out << "horizon " << obs.p << "\n";
    const std::pair<const char*, const RationalMatrix*> parts[] = {
        {"A", &obs.a}, {"C", &obs.c}, {"H", &obs.h_gain}, {"L", &obs.l_gain}};
    for (const auto& [name, matrix] : parts) {
        out << "matrix " << name << " " << matrix->rows() << " " << matrix->cols() << "\n";
        write_matrix(out, *matrix);
    }
}

LinearDeadbeatObserver read_observer(std::istream& in) {
    LinearDeadbeatObserver obs;
    std::string keyword;
    if (!(in >> keyword) || keyword != "horizon" || !(in >> obs.p)) {
        raise(errc::parse_error, "observer bundle must start with 'horizon <p>'");
    }
    bool seen[4] = {false, false, false, false};
    for (int part = 0; part < 4; ++part) {
        std::string name;
        std::size_t rows = 0, cols = 0;
        if (!(in >> keyword >> name >> rows >> cols) || keyword != "matrix") {
            raise(errc::parse_error, "expected 'matrix <name> <rows> <cols>'");
        }
        RationalMatrix m(rows, cols);
        std::string tok;
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) {
                if (!(in >> tok)) raise(errc::parse_error, "truncated matrix block in observer bundle");
                m.at(i, j) = parse_rational(tok);
            }
        int slot = name == "A" ? 0 : name == "C" ? 1 : name == "H" ? 2 : name == "L" ? 3 : -1;
        if (slot < 0 || seen[slot]) raise(errc::parse_error, "unexpected matrix block '" + name + "'");
        seen[slot] = true;
        (slot == 0 ? obs.a : slot == 1 ? obs.c : slot == 2 ? obs.h_gain : obs.l_gain) = std::move(m);
    }
    return obs;
}

}  // namespace deadbeat
