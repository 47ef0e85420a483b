#include "deadbeat/polynomial.hpp"

#include "deadbeat/errors.hpp"

#include <sstream>
#include <utility>

namespace deadbeat {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial Polynomial::monomial(std::size_t degree, const Rational& coefficient) {
    if (coefficient == 0) return Polynomial();
    std::vector<Rational> c(degree + 1, Rational(0));
    c[degree] = coefficient;
    return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coefficients_.size() ? coefficients_[k] : Rational(0);
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    std::vector<Rational> c(std::max(coefficients_.size(), other.coefficients_.size()), Rational(0));
    for (std::size_t k = 0; k < c.size(); ++k) c[k] = coefficient(k) + other.coefficient(k);
    return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    if (is_zero() || other.is_zero()) return Polynomial();
    std::vector<Rational> c(coefficients_.size() + other.coefficients_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coefficients_.size(); ++i)
        for (std::size_t j = 0; j < other.coefficients_.size(); ++j)
            c[i + j] += coefficients_[i] * other.coefficients_[j];
    return Polynomial(std::move(c));
}

bool Polynomial::divisible_by_power(std::size_t k) const {
    if (is_zero()) return true;
    if (coefficients_.size() < k) return false;
    for (std::size_t i = 0; i < k; ++i)
        if (coefficients_[i] != 0) return false;
    return true;
}

RationalMatrix Polynomial::eval(const RationalMatrix& m) const {
    if (!m.is_square()) raise(errc::dimension_mismatch, "polynomial eval needs a square matrix");
    const std::size_t n = m.rows();
    RationalMatrix acc = RationalMatrix::zero(n, n);
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        acc = acc * m + coefficients_[k] * RationalMatrix::identity(n);
    }
    return acc;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coefficients_.size(); k-- > 0;) {
        const Rational& c = coefficients_[k];
        if (c == 0) continue;
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool unit = mag == 1;
        if (k == 0) {
            out << format_rational(mag);
        } else {
            if (!unit) out << format_rational(mag) << "*";
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

Polynomial charpoly(const RationalMatrix& m) {
    if (!m.is_square()) raise(errc::dimension_mismatch, "charpoly of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    // Faddeev-LeVerrier: exact in rational arithmetic, no pivoting needed.
    RationalMatrix aux = RationalMatrix::identity(n);
    for (std::size_t k = 1; k <= n; ++k) {
        const RationalMatrix ma = m * aux;
        const Rational c = -trace(ma) / Rational(static_cast<long>(k));
        coeffs[n - k] = c;
        aux = ma + c * RationalMatrix::identity(n);
    }
    return Polynomial(std::move(coeffs));
}

}  // namespace deadbeat
