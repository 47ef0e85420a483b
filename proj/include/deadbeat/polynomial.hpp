#pragma once

#include "deadbeat/matrix.hpp"
#include "deadbeat/rational.hpp"

#include <string>
#include <vector>

namespace deadbeat {

/// Polynomial with exact rational coefficients, ascending degree order.
/// The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coefficients);

    static Polynomial monomial(std::size_t degree, const Rational& coefficient = Rational(1));

    bool is_zero() const noexcept { return coefficients_.empty(); }
    std::size_t degree() const noexcept { return coefficients_.empty() ? 0 : coefficients_.size() - 1; }

    /// Coefficient of s^k (zero beyond the degree).
    Rational coefficient(std::size_t k) const;
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    bool operator==(const Polynomial& other) const { return coefficients_ == other.coefficients_; }

    /// True when s^k divides the polynomial.
    bool divisible_by_power(std::size_t k) const;

    /// Substitutes a square matrix for the indeterminate (Horner form).
    RationalMatrix eval(const RationalMatrix& m) const;

    std::string str(const std::string& var = "s") const;

private:
    std::vector<Rational> coefficients_;
};

/// Exact characteristic polynomial det(sI - m) of a square matrix.
Polynomial charpoly(const RationalMatrix& m);

}  // namespace deadbeat
