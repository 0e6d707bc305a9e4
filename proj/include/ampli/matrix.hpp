#pragma once

// Dense matrices over exact rationals, plus the handful of exact linear
// algebra routines everything else reduces to: determinant (fraction-free
// Bareiss over integers after clearing denominators), rank, and unique
// solution of linear systems.

#include "ampli/errors.hpp"
#include "ampli/rational.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace ampli {

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {
        if (rows < 0 || cols < 0) throw ContractError("negative matrix dimension");
    }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Rational& operator()(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& operator()(int i, int j) const {
        return a_[static_cast<size_t>(i) * cols_ + j];
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }

    void swap_rows(int i, int j) {
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    /// New matrix made of the given rows (0-based), in the given order.
    Matrix select_rows(const std::vector<int>& rows) const {
        Matrix out(static_cast<int>(rows.size()), cols_);
        for (size_t r = 0; r < rows.size(); ++r) {
            if (rows[r] < 0 || rows[r] >= rows_) throw ContractError("row index out of range");
            for (int c = 0; c < cols_; ++c) out(static_cast<int>(r), c) = (*this)(rows[r], c);
        }
        return out;
    }

    /// New matrix made of the given columns (0-based), in the given order.
    Matrix select_cols(const std::vector<int>& cols) const {
        Matrix out(rows_, static_cast<int>(cols.size()));
        for (int r = 0; r < rows_; ++r) {
            for (size_t c = 0; c < cols.size(); ++c) {
                if (cols[c] < 0 || cols[c] >= cols_) throw ContractError("column index out of range");
                out(r, static_cast<int>(c)) = (*this)(r, cols[c]);
            }
        }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw ContractError("dimension mismatch in matrix product");
    Matrix out(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (int j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
        }
    return out;
}

inline Matrix transpose(const Matrix& m) {
    Matrix out(m.cols(), m.rows());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
    return out;
}

inline Matrix stack_rows(const Matrix& top, const Matrix& bottom) {
    if (top.cols() != bottom.cols()) throw ContractError("dimension mismatch in row stack");
    Matrix out(top.rows() + bottom.rows(), top.cols());
    for (int i = 0; i < top.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(i, j) = top(i, j);
    for (int i = 0; i < bottom.rows(); ++i)
        for (int j = 0; j < top.cols(); ++j) out(top.rows() + i, j) = bottom(i, j);
    return out;
}

namespace detail {

/// Fraction-free Bareiss determinant of an integer matrix. Destroys `m`.
inline Integer bareiss_determinant(std::vector<std::vector<Integer>>& m) {
    const int n = static_cast<int>(m.size());
    if (n == 0) return 1;
    int sign = 1;
    Integer prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            int pivot_row = -1;
            for (int i = k + 1; i < n; ++i)
                if (m[i][k] != 0) {
                    pivot_row = i;
                    break;
                }
            if (pivot_row < 0) return 0;
            std::swap(m[k], m[pivot_row]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign > 0 ? m[n - 1][n - 1] : Integer(-m[n - 1][n - 1]);
}

}  // namespace detail

/// Exact determinant. Clears denominators row by row, then runs fraction-free
/// Bareiss over integers; exact-pivot, no rounding anywhere.
inline Rational determinant(const Matrix& m) {
    if (m.rows() != m.cols()) throw ContractError("determinant of non-square matrix");
    const int n = m.rows();
    if (n == 0) return 1;
    std::vector<std::vector<Integer>> w(n, std::vector<Integer>(n));
    Integer scale = 1;
    for (int i = 0; i < n; ++i) {
        Integer l = 1;
        for (int j = 0; j < n; ++j)
            l = boost::multiprecision::lcm(l, Integer(boost::multiprecision::denominator(m(i, j))));
        for (int j = 0; j < n; ++j) {
            Rational v = m(i, j) * l;
            w[i][j] = Integer(boost::multiprecision::numerator(v));
        }
        scale *= l;
    }
    Integer det = detail::bareiss_determinant(w);
    return Rational(det, scale);
}

/// Exact rank by Gaussian elimination over the rationals.
inline int rank(Matrix m) {
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        m.swap_rows(r, pivot);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m(i, c) == 0) continue;
            Rational f = m(i, c) / m(r, c);
            for (int j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        ++r;
    }
    return r;
}

/// Solves A x = b exactly. Returns the solution only when it exists and is
/// unique; returns nullopt for inconsistent or underdetermined systems.
inline std::optional<std::vector<Rational>> solve_unique(Matrix a, std::vector<Rational> b) {
    if (a.rows() != static_cast<int>(b.size())) throw ContractError("solve: dimension mismatch");
    const int nrows = a.rows();
    const int ncols = a.cols();
    std::vector<int> pivot_col_of_row;
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pivot = -1;
        for (int i = r; i < nrows; ++i)
            if (a(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        a.swap_rows(r, pivot);
        std::swap(b[r], b[pivot]);
        Rational inv = a(r, c);
        for (int i = 0; i < nrows; ++i) {
            if (i == r || a(i, c) == 0) continue;
            Rational f = a(i, c) / inv;
            for (int j = c; j < ncols; ++j) a(i, j) -= f * a(r, j);
            b[i] -= f * b[r];
        }
        pivot_col_of_row.push_back(c);
        ++r;
    }
    for (int i = r; i < nrows; ++i)
        if (b[i] != 0) return std::nullopt;  // inconsistent
    if (r < ncols) return std::nullopt;      // free variables
    std::vector<Rational> x(ncols);
    for (int i = 0; i < r; ++i) x[pivot_col_of_row[i]] = b[i] / a(i, pivot_col_of_row[i]);
    return x;
}

}  // namespace ampli
