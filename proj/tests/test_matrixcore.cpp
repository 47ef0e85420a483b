#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "deadbeat/errors.hpp"
#include "deadbeat/matrix.hpp"
#include "deadbeat/matrix_io.hpp"
#include "deadbeat/polynomial.hpp"
#include "deadbeat/rational.hpp"
#include "deadbeat/refcases.hpp"
#include "deadbeat/rng.hpp"

using namespace deadbeat;

namespace {

// Independent reference Kronecker product: direct index expansion of the
// definition, no shared code with the library routine.
RationalMatrix kron_reference(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < out.rows(); ++i)
        for (std::size_t j = 0; j < out.cols(); ++j)
            out.at(i, j) = a.at(i / b.rows(), j / b.cols()) * b.at(i % b.rows(), j % b.cols());
    return out;
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rng.next_small_rational();
    return m;
}

}  // namespace

TEST_CASE("rational parsing: fractions, integers, exact decimals") {
    CHECK(parse_rational("3/6") == rat(1, 2));
    CHECK(parse_rational("-7") == rat(-7));
    CHECK(parse_rational("0.4") == rat(2, 5));
    CHECK(parse_rational("-2.4") == rat(-12, 5));
    CHECK(parse_rational("13/10") == rat(13, 10));
    CHECK(parse_rational(" 1/3 ") == rat(1, 3));
    CHECK(format_rational(parse_rational("0.4")) == "2/5");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("1e3"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("kron: identities and direct expansion") {
    CHECK(kron(RationalMatrix::identity(2), RationalMatrix::identity(3)) == RationalMatrix::identity(6));

    const RationalMatrix m = RationalMatrix::from_rows({{1, 2}, {3, 4}, {5, 6}});
    CHECK(kron(RationalMatrix::from_rows({{1}}), m) == m);

    const RationalMatrix a = RationalMatrix::from_rows({{1, 2}, {0, 1}});
    const RationalMatrix b = RationalMatrix::from_rows({{0, 1}, {1, 0}});
    const RationalMatrix expected =
        RationalMatrix::from_rows({{0, 1, 0, 2}, {1, 0, 2, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK(kron(a, b) == expected);
    CHECK(kron(a, b) == kron_reference(a, b));
}

TEST_CASE("kron: mixed-product property on random rationals") {
    Rng rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const RationalMatrix a = random_matrix(rng, 2, 3);
        const RationalMatrix c = random_matrix(rng, 3, 2);
        const RationalMatrix b = random_matrix(rng, 2, 2);
        const RationalMatrix d = random_matrix(rng, 2, 3);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("nullspace_basis: trivial, full, and reference cases") {
    CHECK(nullspace_basis(RationalMatrix::identity(4)).cols() == 0);

    const RationalMatrix zero23 = RationalMatrix::zero(2, 3);
    const RationalMatrix full = nullspace_basis(zero23);
    CHECK(full.cols() == 3);
    CHECK(rank(full) == 3);

    const RationalMatrix c = refcases::pair4_c();
    const RationalMatrix basis = nullspace_basis(c);
    CHECK(basis.rows() == 4);
    CHECK(basis.cols() == 2);
    CHECK((c * basis).is_zero());
    CHECK(rank(basis) == 2);
}

TEST_CASE("nullspace_basis: rank-nullity and exact annihilation on random input") {
    Rng rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t rows = static_cast<std::size_t>(rng.next_int(1, 5));
        const std::size_t cols = static_cast<std::size_t>(rng.next_int(1, 6));
        const RationalMatrix m = random_matrix(rng, rows, cols);
        const RationalMatrix basis = nullspace_basis(m);
        CHECK((m * basis).is_zero());
        CHECK(basis.cols() + rank(m) == cols);
        if (basis.cols() > 0) CHECK(rank(basis) == basis.cols());
    }
}

TEST_CASE("charpoly: fixed cases") {
    const Polynomial p2 = charpoly(RationalMatrix::identity(2));
    CHECK(p2 == Polynomial({rat(1), rat(-2), rat(1)}));  // (s-1)^2

    const RationalMatrix shift = RationalMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(charpoly(shift) == Polynomial::monomial(3));

    CHECK_THROWS_AS(charpoly(RationalMatrix::zero(2, 3)), Error);
}

TEST_CASE("charpoly: Cayley-Hamilton on random matrices up to dim 8") {
    Rng rng(37);
    for (std::size_t n = 1; n <= 8; ++n) {
        const RationalMatrix m = random_matrix(rng, n, n);
        CHECK(charpoly(m).eval(m).is_zero());
    }
}

TEST_CASE("nilpotency_index") {
    CHECK(nilpotency_index(RationalMatrix::zero(3, 3)) == 1);
    CHECK(nilpotency_index(RationalMatrix::identity(2)) == std::nullopt);

    const RationalMatrix shift = RationalMatrix::from_rows({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
    CHECK(nilpotency_index(shift) == 3);
    // index p implies m^p = 0 and m^(p-1) != 0
    CHECK(matpow(shift, 3).is_zero());
    CHECK(!matpow(shift, 2).is_zero());
}

TEST_CASE("matpow, rank, solve") {
    const RationalMatrix g = refcases::coupling4();
    CHECK(matpow(g, 0) == RationalMatrix::identity(4));

    const RationalMatrix g3 = matpow(g, 3);
    const RationalVector weights = refcases::coupling4_weights();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) CHECK(g3.at(i, j) == weights[j]);

    CHECK(rank(RationalMatrix::identity(3)) == 3);
    CHECK(rank(RationalMatrix::zero(2, 2)) == 0);

    const RationalMatrix a = RationalMatrix::from_rows({{2, 0}, {0, 4}});
    const RationalMatrix rhs = RationalMatrix::from_rows({{1}, {2}});
    const auto x = solve(a, rhs);
    REQUIRE(x.has_value());
    CHECK(a * *x == rhs);
    CHECK(x->at(0, 0) == rat(1, 2));

    // inconsistent system
    const RationalMatrix sing = RationalMatrix::from_rows({{1, 1}, {1, 1}});
    const RationalMatrix bad = RationalMatrix::from_rows({{0}, {1}});
    CHECK(!solve(sing, bad).has_value());

    // underdetermined but consistent: free variables pinned to zero
    const auto under = solve(RationalMatrix::from_rows({{1, 1}}), RationalMatrix::from_rows({{3}}));
    REQUIRE(under.has_value());
    CHECK(under->at(0, 0) == rat(3));
    CHECK(under->at(1, 0) == rat(0));
}

TEST_CASE("inverse") {
    const RationalMatrix a = refcases::pair4_a();
    const auto inv = inverse(a);
    REQUIRE(inv.has_value());
    CHECK(a * *inv == RationalMatrix::identity(4));
    CHECK(*inv * a == RationalMatrix::identity(4));
    CHECK(!inverse(RationalMatrix::from_rows({{1, 1}, {1, 1}})).has_value());
}

TEST_CASE("to_real and float helpers") {
    const RealMatrix m = to_real(RationalMatrix::from_strings({{"1/2", "-1/4"}}));
    CHECK(m.at(0, 0) == doctest::Approx(0.5));
    CHECK(m.at(0, 1) == doctest::Approx(-0.25));
    CHECK(inf_norm_diff({1.0, 2.0}, {1.5, 2.0}) == doctest::Approx(0.5));
}

TEST_CASE("polynomial formatting and divisibility") {
    const Polynomial phi = refcases::pair4_phi_charpoly();
    CHECK(phi.divisible_by_power(2));
    CHECK(!phi.divisible_by_power(3));
    CHECK(!phi.divisible_by_power(4));
    CHECK(phi.str() == "s^8 - 7/2*s^7 - 3/2*s^6 + 23/2*s^5 - 5/2*s^4 - 8*s^3 - 2*s^2");
}

TEST_CASE("matrix text io round trip") {
    const RationalMatrix g = refcases::coupling4();
    const RationalMatrix back = parse_matrix(format_matrix(g));
    CHECK(back == g);

    CHECK_THROWS_AS(parse_matrix("1 2\n3\n"), Error);
    CHECK_THROWS_AS(parse_matrix("# only a comment\n"), Error);
    CHECK(parse_matrix("# header\n1 1/2\n\n0.4 2\n") ==
          RationalMatrix::from_strings({{"1", "1/2"}, {"2/5", "2"}}));
}

TEST_CASE("zero-dimension shapes behave as empty linear maps") {
    const RationalMatrix none(0, 3);
    CHECK(none.is_zero());
    CHECK(rank(none) == 0);
    CHECK(nullspace_basis(none).cols() == 3);

    const RationalMatrix tall(3, 0);
    const RationalMatrix product = tall * RationalMatrix(0, 2);
    CHECK(product == RationalMatrix::zero(3, 2));
}
