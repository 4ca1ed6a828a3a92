#pragma once

// Row-major dense matrices over any kronlab scalar, plus the small amount of
// exact linear algebra the rest of the library needs (rank with a dependency
// witness, inverse, products).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/scalars.hpp"

namespace kronlab {

template <Field T>
class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, zero<T>()) {}
    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<T> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_)
            throw ShapeError("kronecker", "matrix data has " + std::to_string(data_.size()) + " entries, expected " +
                                              std::to_string(rows_ * cols_));
    }
    /// Nested row lists; all rows must have equal length.
    static DenseMatrix from_rows(const std::vector<std::vector<T>>& rows);
    static DenseMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t size() const { return data_.size(); }

    /// 0-based element access.
    T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    /// 1-based checked access, A(i,j) in the usual matrix notation.
    const T& at(std::size_t i, std::size_t j) const;

    std::span<const T> data() const { return data_; }
    std::span<T> data() { return data_; }
    std::span<const T> row(std::size_t r) const { return std::span<const T>(data_).subspan(r * cols_, cols_); }

    /// Optional lex labelings of rows/columns by composite indices, e.g. the
    /// μ and κ of a Kronecker product. They only annotate the storage.
    const std::optional<Shape>& row_labels() const { return row_labels_; }
    const std::optional<Shape>& col_labels() const { return col_labels_; }
    void set_labels(Shape rows, Shape cols);

    /// Entry at composite (μ, κ); requires labels.
    const T& at(const MultiIndex& mu, const MultiIndex& kappa) const;

    DenseMatrix transpose() const;

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<T> data_;
    std::optional<Shape> row_labels_;
    std::optional<Shape> col_labels_;
};

template <Field T>
DenseMatrix<T> DenseMatrix<T>::from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty())
        return {};
    std::size_t cols = rows.front().size();
    std::vector<T> data;
    data.reserve(rows.size() * cols);
    for (const auto& r : rows) {
        if (r.size() != cols)
            throw ShapeError("kronecker", "ragged matrix rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return DenseMatrix(rows.size(), cols, std::move(data));
}

template <Field T>
DenseMatrix<T> DenseMatrix<T>::identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = one<T>();
    return m;
}

template <Field T>
const T& DenseMatrix<T>::at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw RangeError("kronecker", "entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                                          std::to_string(rows_) + "x" + std::to_string(cols_));
    return (*this)(i - 1, j - 1);
}

template <Field T>
void DenseMatrix<T>::set_labels(Shape rows, Shape cols) {
    if (rows.size() != rows_ || cols.size() != cols_)
        throw ShapeError("kronecker", "labeling " + to_string(rows) + " x " + to_string(cols) +
                                          " does not fit a " + std::to_string(rows_) + "x" + std::to_string(cols_) +
                                          " matrix");
    row_labels_ = std::move(rows);
    col_labels_ = std::move(cols);
}

template <Field T>
const T& DenseMatrix<T>::at(const MultiIndex& mu, const MultiIndex& kappa) const {
    if (!row_labels_ || !col_labels_)
        throw ShapeError("kronecker", "matrix has no composite labels");
    return (*this)(offset(*row_labels_, mu), offset(*col_labels_, kappa));
}

template <Field T>
DenseMatrix<T> DenseMatrix<T>::transpose() const {
    DenseMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

template <Field T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("kronecker", "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                          " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    DenseMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (is_zero(a(i, k)))
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(i, j) += a(i, k) * b(k, j);
        }
    return c;
}

template <Field T>
DenseMatrix<T> operator+(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw ShapeError("kronecker", "matrix sum of different sizes");
    DenseMatrix<T> c = a;
    for (std::size_t k = 0; k < c.size(); ++k)
        c.data()[k] += b.data()[k];
    return c;
}

template <Field T>
DenseMatrix<T> operator*(const T& s, const DenseMatrix<T>& a) {
    DenseMatrix<T> c = a;
    for (auto& x : c.data())
        x = T(s * x);
    return c;
}

template <Field T>
std::vector<T> operator*(const DenseMatrix<T>& a, std::span<const T> x) {
    if (a.cols() != x.size())
        throw ShapeError("kronecker", "vector length " + std::to_string(x.size()) + " does not match " +
                                          std::to_string(a.cols()) + " columns");
    std::vector<T> y(a.rows(), zero<T>());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

template <Field T>
std::vector<T> operator*(const DenseMatrix<T>& a, const std::vector<T>& x) {
    return a * std::span<const T>(x);
}

// ---------------------------------------------------------------------------
// Exact elimination.

template <Field T>
struct RankResult {
    std::size_t rank = 0;
    /// Pivot column of each nonzero row of the echelon form.
    std::vector<std::size_t> pivots;
    /// When the columns are dependent: coefficients c, not all zero, with
    /// Σ_j c_j · column_j = 0.
    std::optional<std::vector<T>> column_dependency;
};

namespace detail {

inline bool pivot_ok(const Rational& x) { return !is_zero(x); }
inline bool pivot_ok(const Gaussian& x) { return !is_zero(x); }
inline bool pivot_ok(const Complex64& x) { return std::abs(x) > 1e-12; }

} // namespace detail

/// Gauss-Jordan reduction. Exact for Rational/Gaussian; Complex64 uses
/// partial pivoting with a 1e-12 pivot threshold.
template <Field T>
RankResult<T> column_rank(const DenseMatrix<T>& a) {
    DenseMatrix<T> m = a;
    RankResult<T> out;
    std::size_t row = 0;
    std::vector<std::size_t> free_cols;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t piv = m.rows();
        if constexpr (is_exact_v<T>) {
            for (std::size_t r = row; r < m.rows(); ++r)
                if (detail::pivot_ok(m(r, col))) {
                    piv = r;
                    break;
                }
        } else {
            double best = 0;
            for (std::size_t r = row; r < m.rows(); ++r)
                if (detail::pivot_ok(m(r, col)) && std::abs(m(r, col)) > best) {
                    best = std::abs(m(r, col));
                    piv = r;
                }
        }
        if (piv == m.rows()) {
            free_cols.push_back(col);
            continue;
        }
        if (piv != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(piv, c), m(row, c));
        T inv = checked_div(one<T>(), m(row, col));
        for (std::size_t c = col; c < m.cols(); ++c)
            m(row, c) = T(m(row, c) * inv);
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || is_zero(m(r, col)))
                continue;
            T f = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                m(r, c) -= f * m(row, c);
        }
        out.pivots.push_back(col);
        ++row;
        if (row == m.rows()) {
            for (std::size_t c = col + 1; c < m.cols(); ++c)
                free_cols.push_back(c);
            break;
        }
    }
    out.rank = out.pivots.size();
    if (!free_cols.empty()) {
        // Null vector from the first free column: x_free = 1, x_pivot_k = -R(k, free).
        std::size_t f = free_cols.front();
        std::vector<T> c(m.cols(), zero<T>());
        c[f] = one<T>();
        for (std::size_t k = 0; k < out.pivots.size(); ++k)
            c[out.pivots[k]] = T(-m(k, f));
        out.column_dependency = std::move(c);
    }
    return out;
}

/// Inverse of a square matrix; throws Error if singular.
template <Field T>
DenseMatrix<T> inverse(const DenseMatrix<T>& a) {
    if (a.rows() != a.cols())
        throw ShapeError("kronecker", "inverse of a non-square matrix");
    std::size_t n = a.rows();
    DenseMatrix<T> aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = a(i, j);
        aug(i, n + i) = one<T>();
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (detail::pivot_ok(aug(r, col))) {
                piv = r;
                break;
            }
        if (piv == n)
            throw Error("kronecker", "matrix is singular");
        if (piv != col)
            for (std::size_t c = 0; c < 2 * n; ++c)
                std::swap(aug(piv, c), aug(col, c));
        T inv = checked_div(one<T>(), aug(col, col));
        for (std::size_t c = 0; c < 2 * n; ++c)
            aug(col, c) = T(aug(col, c) * inv);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || is_zero(aug(r, col)))
                continue;
            T f = aug(r, col);
            for (std::size_t c = 0; c < 2 * n; ++c)
                aug(r, c) -= f * aug(col, c);
        }
    }
    DenseMatrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out(i, j) = aug(i, n + j);
    return out;
}

} // namespace kronlab
