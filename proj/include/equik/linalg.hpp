#pragma once

#include "equik/arith.hpp"
#include "equik/errors.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace equik::linalg {

using Vector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw dimension_mismatch("Matrix: ragged initializer");
            data_.insert(data_.end(), r.begin(), r.end());
        }
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t k = 0; k < n; ++k)
            m(k, k) = 1;
        return m;
    }

    static Matrix diagonal(const std::vector<int>& entries) {
        Matrix m(entries.size(), entries.size());
        for (std::size_t k = 0; k < entries.size(); ++k)
            m(k, k) = entries[k];
        return m;
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    static Matrix from_columns(std::size_t rows, const std::vector<Vector>& columns) {
        Matrix m(rows, columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != rows)
                throw dimension_mismatch("from_columns: column length mismatch");
            for (std::size_t r = 0; r < rows; ++r)
                m(r, c) = columns[c][r];
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector column(std::size_t c) const {
        Vector v(rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            v[r] = (*this)(r, c);
        return v;
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c)
                t(c, r) = (*this)(r, c);
        return t;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_)
            throw dimension_mismatch("Matrix product: inner dimensions differ");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Rational& x = a(r, k);
                if (x.is_zero())
                    continue;
                for (std::size_t c = 0; c < b.cols_; ++c)
                    if (!b(k, c).is_zero())
                        out(r, c) += x * b(k, c);
            }
        return out;
    }

    friend Vector operator*(const Matrix& a, const Vector& v) {
        if (a.cols_ != v.size())
            throw dimension_mismatch("Matrix-vector product: dimensions differ");
        Vector out(a.rows_, Rational(0));
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t c = 0; c < a.cols_; ++c)
                if (!a(r, c).is_zero() && !v[c].is_zero())
                    out[r] += a(r, c) * v[c];
        return out;
    }

    friend Matrix operator+(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("Matrix sum: shapes differ");
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] += b.data_[k];
        return a;
    }
    friend Matrix operator-(Matrix a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw dimension_mismatch("Matrix difference: shapes differ");
        for (std::size_t k = 0; k < a.data_.size(); ++k)
            a.data_[k] -= b.data_[k];
        return a;
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot column of each nonzero row.
inline std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            Rational f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= f * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

inline std::size_t rank(Matrix m) { return row_reduce(m, m.cols()).size(); }

/// A linear subspace of Q^n given by a basis of column vectors.
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim, std::vector<Vector> basis = {})
        : ambient_(ambient_dim), basis_(std::move(basis)) {
        for (const Vector& v : basis_)
            if (v.size() != ambient_)
                throw dimension_mismatch("Subspace: basis vector has wrong length");
        if (!basis_.empty() && rank(basis_matrix()) != basis_.size())
            throw invalid_basis("Subspace: basis vectors are linearly dependent");
    }

    static Subspace full(std::size_t n) {
        std::vector<Vector> basis;
        for (std::size_t k = 0; k < n; ++k) {
            Vector e(n, Rational(0));
            e[k] = 1;
            basis.push_back(std::move(e));
        }
        return Subspace(n, std::move(basis));
    }

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }

    /// n x dim matrix with the basis as columns.
    Matrix basis_matrix() const { return Matrix::from_columns(ambient_, basis_); }

    bool contains(const Vector& v) const {
        if (v.size() != ambient_)
            throw dimension_mismatch("Subspace::contains: wrong length");
        std::vector<Vector> cols = basis_;
        cols.push_back(v);
        return rank(Matrix::from_columns(ambient_, cols)) == basis_.size();
    }

    /// Reduced row echelon form of the basis (as rows): equal for equal subspaces.
    Matrix canonical_rows() const {
        Matrix m = basis_matrix().transpose();
        row_reduce(m, m.cols());
        return m;
    }

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.dim() == b.dim() && a.canonical_rows() == b.canonical_rows();
    }

private:
    std::size_t ambient_;
    std::vector<Vector> basis_;
};

/// Nullspace of a square matrix. The basis has one vector per free column of the
/// reduced row echelon form, with a 1 at that column and 0 at the other free columns.
inline Subspace kernel(const Matrix& m) {
    if (!m.square())
        throw dimension_mismatch("kernel: matrix must be square");
    Matrix r = m;
    std::vector<std::size_t> pivots = row_reduce(r, r.cols());
    std::vector<bool> is_pivot(r.cols(), false);
    for (std::size_t p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < r.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(r.cols(), Rational(0));
        v[free] = 1;
        for (std::size_t row = 0; row < pivots.size(); ++row)
            v[pivots[row]] = -r(row, free);
        basis.push_back(std::move(v));
    }
    return Subspace(r.cols(), std::move(basis));
}

/// Determinant by Bareiss elimination. The 0x0 determinant is 1.
inline Rational det(const Matrix& m) {
    if (!m.square())
        throw dimension_mismatch("det: matrix must be square");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    Matrix a = m;
    Rational prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t sel = k + 1;
            while (sel < n && a(sel, k).is_zero())
                ++sel;
            if (sel == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(sel, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

/// Exact inverse; throws invalid_basis for singular input.
inline Matrix inverse(const Matrix& m) {
    if (!m.square())
        throw dimension_mismatch("inverse: matrix must be square");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    if (row_reduce(aug, n).size() != n)
        throw invalid_basis("inverse: matrix is singular");
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            out(r, c) = aug(r, n + c);
    return out;
}

/// Matrix of m acting on the invariant subspace s, in the basis of s.
/// Throws not_invariant if m maps a basis vector outside s.
inline Matrix restrict(const Matrix& m, const Subspace& s) {
    if (!m.square() || m.rows() != s.ambient_dim())
        throw dimension_mismatch("restrict: matrix and subspace dimensions differ");
    const std::size_t n = s.ambient_dim();
    const std::size_t d = s.dim();
    if (d == 0)
        return Matrix(0, 0);
    Matrix basis = s.basis_matrix();
    Matrix images = m * basis;
    Matrix aug(n, 2 * d);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < d; ++c) {
            aug(r, c) = basis(r, c);
            aug(r, d + c) = images(r, c);
        }
    row_reduce(aug, d);
    for (std::size_t r = d; r < n; ++r)
        for (std::size_t c = d; c < 2 * d; ++c)
            if (!aug(r, c).is_zero())
                throw not_invariant("restrict: subspace is not invariant under the matrix");
    Matrix out(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            out(r, c) = aug(r, d + c);
    return out;
}

} // namespace equik::linalg
