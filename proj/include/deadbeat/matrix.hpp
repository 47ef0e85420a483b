#pragma once

#include "deadbeat/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

namespace deadbeat {

/// Dense row-major matrix over exact rationals. Zero-row and zero-column
/// shapes are legal and behave as the corresponding empty linear maps.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix zero(std::size_t rows, std::size_t cols);
    static RationalMatrix ones(std::size_t rows, std::size_t cols);
    static RationalMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);
    static RationalMatrix from_strings(std::initializer_list<std::initializer_list<const char*>> rows);
    static RationalMatrix column(const RationalVector& v);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rational>& entries() const noexcept { return entries_; }

    RationalMatrix transpose() const;
    RationalVector row(std::size_t i) const;
    RationalVector col(std::size_t j) const;

    bool is_zero() const;
    bool is_square() const noexcept { return rows_ == cols_; }

    void swap_rows(std::size_t i, std::size_t j);

    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator-() const;
    bool operator==(const RationalMatrix& other) const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> entries_;
};

RationalMatrix operator*(const Rational& scalar, const RationalMatrix& m);
RationalVector operator*(const RationalMatrix& m, const RationalVector& v);

/// Horizontal / vertical concatenation. Row (resp. column) counts must agree.
RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom);

Rational trace(const RationalMatrix& m);

/// Kronecker product, dims (a.rows*b.rows) x (a.cols*b.cols).
RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b);

struct RrefResult {
    RationalMatrix r;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
};

/// Reduced row echelon form by exact Gaussian elimination.
RrefResult rref(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Canonical free-variable basis of the null space, one column per free
/// variable of the RREF. A trivial null space yields a matrix with zero
/// columns (never zero-filled columns).
RationalMatrix nullspace_basis(const RationalMatrix& m);

/// m^k for square m; m^0 = I by convention.
RationalMatrix matpow(const RationalMatrix& m, std::size_t k);

/// Smallest p >= 1 with m^p = 0, or nullopt when m^dim != 0.
std::optional<std::size_t> nilpotency_index(const RationalMatrix& m);

/// One exact solution X of m*X = rhs (free variables set to zero), or
/// nullopt when the system is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& rhs);

/// Exact inverse, or nullopt for singular/non-square input.
std::optional<RationalMatrix> inverse(const RationalMatrix& m);

// ---------------------------------------------------------------------------
// Floating-point mirror used only where irrational dynamics force it.

using RealVector = std::vector<double>;

struct RealMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;

    RealMatrix() = default;
    RealMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), entries(r * c, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return entries[i * cols + j]; }
    double at(std::size_t i, std::size_t j) const { return entries[i * cols + j]; }
};

RealMatrix to_real(const RationalMatrix& m);
RealVector to_real(const RationalVector& v);
RealVector operator*(const RealMatrix& m, const RealVector& v);

double inf_norm_diff(const RealVector& a, const RealVector& b);

}  // namespace deadbeat
