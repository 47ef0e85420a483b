#include "deadbeat/matrix.hpp"

#include "deadbeat/errors.hpp"
#include "deadbeat/rational.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace deadbeat {

namespace {

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        raise(errc::dimension_mismatch, std::string(op) + ": shapes " + std::to_string(a.rows()) + "x" +
                                            std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                                            std::to_string(b.cols()));
    }
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Rational(0)) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) {
        raise(errc::dimension_mismatch, "entry count does not match matrix shape");
    }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::zero(std::size_t rows, std::size_t cols) { return RationalMatrix(rows, cols); }

RationalMatrix RationalMatrix::ones(std::size_t rows, std::size_t cols) {
    RationalMatrix m(rows, cols);
    for (auto& e : m.entries_) e = 1;
    return m;
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) raise(errc::dimension_mismatch, "ragged initializer");
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = v;
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::from_strings(std::initializer_list<std::initializer_list<const char*>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.begin()->size();
    RationalMatrix m(r, c);
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != c) raise(errc::dimension_mismatch, "ragged initializer");
        std::size_t j = 0;
        for (const char* v : row) m.at(i, j++) = parse_rational(v);
        ++i;
    }
    return m;
}

RationalMatrix RationalMatrix::column(const RationalVector& v) {
    RationalMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m.at(i, 0) = v[i];
    return m;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

RationalVector RationalMatrix::row(std::size_t i) const {
    RationalVector v(cols_);
    for (std::size_t j = 0; j < cols_; ++j) v[j] = at(i, j);
    return v;
}

RationalVector RationalMatrix::col(std::size_t j) const {
    RationalVector v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
}

bool RationalMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rational& e) { return e == 0; });
}

void RationalMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& other) const {
    require_same_shape(*this, other, "add");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& other) const {
    require_same_shape(*this, other, "subtract");
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& other) const {
    if (cols_ != other.rows_) {
        raise(errc::dimension_mismatch, "multiply: " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                                            std::to_string(other.rows_) + "x" + std::to_string(other.cols_));
    }
    RationalMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rational& aik = at(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                out.at(i, j) += aik * other.at(k, j);
            }
        }
    }
    return out;
}

RationalMatrix RationalMatrix::operator-() const {
    RationalMatrix out(rows_, cols_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

bool RationalMatrix::operator==(const RationalMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RationalMatrix operator*(const Rational& scalar, const RationalMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = scalar * m.at(i, j);
    return out;
}

RationalVector operator*(const RationalMatrix& m, const RationalVector& v) {
    if (m.cols() != v.size()) raise(errc::dimension_mismatch, "matrix-vector size mismatch");
    RationalVector out(m.rows(), Rational(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
    return out;
}

RationalMatrix hstack(const RationalMatrix& left, const RationalMatrix& right) {
    if (left.rows() != right.rows()) raise(errc::dimension_mismatch, "hstack: row counts differ");
    RationalMatrix out(left.rows(), left.cols() + right.cols());
    for (std::size_t i = 0; i < out.rows(); ++i) {
        for (std::size_t j = 0; j < left.cols(); ++j) out.at(i, j) = left.at(i, j);
        for (std::size_t j = 0; j < right.cols(); ++j) out.at(i, left.cols() + j) = right.at(i, j);
    }
    return out;
}

RationalMatrix vstack(const RationalMatrix& top, const RationalMatrix& bottom) {
    if (top.cols() != bottom.cols()) raise(errc::dimension_mismatch, "vstack: column counts differ");
    RationalMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t j = 0; j < out.cols(); ++j) {
        for (std::size_t i = 0; i < top.rows(); ++i) out.at(i, j) = top.at(i, j);
        for (std::size_t i = 0; i < bottom.rows(); ++i) out.at(top.rows() + i, j) = bottom.at(i, j);
    }
    return out;
}

Rational trace(const RationalMatrix& m) {
    if (!m.is_square()) raise(errc::dimension_mismatch, "trace of non-square matrix");
    Rational t(0);
    for (std::size_t i = 0; i < m.rows(); ++i) t += m.at(i, i);
    return t;
}

RationalMatrix kron(const RationalMatrix& a, const RationalMatrix& b) {
    RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const Rational& aij = a.at(i, j);
            if (aij == 0) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out.at(i * b.rows() + k, j * b.cols() + l) = aij * b.at(k, l);
        }
    return out;
}

RrefResult rref(const RationalMatrix& m) {
    RrefResult result{m, {}};
    RationalMatrix& r = result.r;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < r.cols() && lead < r.rows(); ++col) {
        std::size_t piv = lead;
        while (piv < r.rows() && r.at(piv, col) == 0) ++piv;
        if (piv == r.rows()) continue;
        r.swap_rows(piv, lead);
        const Rational scale = Rational(1) / r.at(lead, col);
        for (std::size_t j = col; j < r.cols(); ++j) r.at(lead, j) *= scale;
        for (std::size_t i = 0; i < r.rows(); ++i) {
            if (i == lead || r.at(i, col) == 0) continue;
            const Rational factor = r.at(i, col);
            for (std::size_t j = col; j < r.cols(); ++j) r.at(i, j) -= factor * r.at(lead, j);
        }
        result.pivots.push_back(col);
        ++lead;
    }
    return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).pivots.size(); }

RationalMatrix nullspace_basis(const RationalMatrix& m) {
    const RrefResult red = rref(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t p : red.pivots) is_pivot[p] = true;

    std::vector<std::size_t> free_cols;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free_cols.push_back(j);

    RationalMatrix basis(n, free_cols.size());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::size_t f = free_cols[k];
        basis.at(f, k) = 1;
        for (std::size_t i = 0; i < red.pivots.size(); ++i) {
            basis.at(red.pivots[i], k) = -red.r.at(i, f);
        }
    }
    return basis;
}

RationalMatrix matpow(const RationalMatrix& m, std::size_t k) {
    if (!m.is_square()) raise(errc::dimension_mismatch, "matpow of non-square matrix");
    RationalMatrix acc = RationalMatrix::identity(m.rows());
    RationalMatrix base = m;
    while (k > 0) {
        if (k & 1u) acc = acc * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return acc;
}

std::optional<std::size_t> nilpotency_index(const RationalMatrix& m) {
    if (!m.is_square()) raise(errc::dimension_mismatch, "nilpotency_index of non-square matrix");
    const std::size_t n = m.rows();
    RationalMatrix power = m;
    for (std::size_t p = 1; p <= n; ++p) {
        if (power.is_zero()) return p;
        if (p < n) power = power * m;
    }
    return std::nullopt;
}

std::optional<RationalMatrix> solve(const RationalMatrix& m, const RationalMatrix& rhs) {
    if (m.rows() != rhs.rows()) raise(errc::dimension_mismatch, "solve: row counts differ");
    const RrefResult red = rref(hstack(m, rhs));
    // Inconsistent when some pivot lands in the augmented block.
    for (std::size_t p : red.pivots) {
        if (p >= m.cols()) return std::nullopt;
    }
    RationalMatrix x(m.cols(), rhs.cols());
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
        for (std::size_t j = 0; j < rhs.cols(); ++j) {
            x.at(red.pivots[i], j) = red.r.at(i, m.cols() + j);
        }
    }
    return x;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
    if (!m.is_square()) return std::nullopt;
    if (rank(m) != m.rows()) return std::nullopt;
    return solve(m, RationalMatrix::identity(m.rows()));
}

RealMatrix to_real(const RationalMatrix& m) {
    RealMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = to_double(m.at(i, j));
    return out;
}

RealVector to_real(const RationalVector& v) {
    RealVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
    return out;
}

RealVector operator*(const RealMatrix& m, const RealVector& v) {
    if (m.cols != v.size()) raise(errc::dimension_mismatch, "real matrix-vector size mismatch");
    RealVector out(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < m.cols; ++j) acc += m.at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

double inf_norm_diff(const RealVector& a, const RealVector& b) {
    if (a.size() != b.size()) raise(errc::dimension_mismatch, "inf_norm_diff: size mismatch");
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

}  // namespace deadbeat
