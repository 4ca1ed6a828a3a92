#pragma once

// Kronecker products A_1 ⊗ ... ⊗ A_m of matrices A_i ∈ M_{p_i,q_i}.
//
// Rows are indexed by μ ∈ Γ(p_1,...,p_m), columns by κ ∈ Γ(q_1,...,q_m),
// both in lex order, and
//
//   (A_1 ⊗ ... ⊗ A_m)(μ, κ) = ∏_i A_i(μ(i), κ(i)).

#include <cstddef>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/kernels.hpp"
#include "kronlab/matrix.hpp"
#include "kronlab/multilinear.hpp"
#include "kronlab/scalars.hpp"
#include "kronlab/tensor.hpp"

namespace kronlab {

namespace detail {

inline Shape factor_shape(std::span<const std::size_t> dims) { return Shape(std::vector<std::size_t>(dims.begin(), dims.end())); }

// Block construction of a single pair: block (i, j) of the result is a(i,j)·b.
template <Field T>
DenseMatrix<T> kron_pair(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    DenseMatrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const T& s = a(i, j);
            if (is_zero(s))
                continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l)
                    out(i * b.rows() + k, j * b.cols() + l) = T(s * b(k, l));
        }
    return out;
}

} // namespace detail

/// Dense Kronecker product, rows/cols labelled by Γ(p_i) and Γ(q_i).
template <Field T>
DenseMatrix<T> kron(std::span<const DenseMatrix<T>> factors) {
    if (factors.empty())
        throw ShapeError("kronecker", "Kronecker product of zero factors");
    std::vector<std::size_t> p, q;
    for (const auto& f : factors) {
        if (f.rows() == 0 || f.cols() == 0)
            throw ShapeError("kronecker", "empty factor matrix");
        p.push_back(f.rows());
        q.push_back(f.cols());
    }
    DenseMatrix<T> out = factors[0];
    for (std::size_t i = 1; i < factors.size(); ++i)
        out = detail::kron_pair(out, factors[i]);
    out.set_labels(Shape(p), Shape(q));
    return out;
}

template <Field T>
DenseMatrix<T> kron(const std::vector<DenseMatrix<T>>& factors) {
    return kron(std::span<const DenseMatrix<T>>(factors));
}

template <Field T>
DenseMatrix<T> kron(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    return kron(std::vector<DenseMatrix<T>>{a, b});
}

/// Lazy A_1 ⊗ ... ⊗ A_m. Never forms the p x q product.
template <Field T>
class KroneckerOperator {
public:
    explicit KroneckerOperator(std::vector<DenseMatrix<T>> factors);

    std::size_t arity() const { return factors_.size(); }
    const std::vector<DenseMatrix<T>>& factors() const { return factors_; }
    /// Γ(p_1,...,p_m) and Γ(q_1,...,q_m).
    const Shape& row_shape() const { return row_shape_; }
    const Shape& col_shape() const { return col_shape_; }
    std::size_t rows() const { return row_shape_.size(); }
    std::size_t cols() const { return col_shape_.size(); }

    /// ∏_i A_i(μ(i), κ(i)).
    T entry(const MultiIndex& mu, const MultiIndex& kappa) const;

    /// K·x, contracting one factor at a time.
    std::vector<T> matvec(std::span<const T> x) const;
    std::vector<T> matvec(const std::vector<T>& x) const { return matvec(std::span<const T>(x)); }

    /// Same product on an explicit kernel variant (Complex64 only); used to
    /// check vector kernels against the scalar reference.
    std::vector<T> matvec_with(std::span<const T> x, kernels::Isa isa) const
        requires std::is_same_v<T, Complex64>;

    DenseMatrix<T> materialize() const { return kron<T>(factors_); }

private:
    template <class Axpy>
    std::vector<T> contract(std::span<const T> x, Axpy axpy) const;

    std::vector<DenseMatrix<T>> factors_;
    Shape row_shape_;
    Shape col_shape_;
};

template <Field T>
KroneckerOperator<T>::KroneckerOperator(std::vector<DenseMatrix<T>> factors) : factors_(std::move(factors)) {
    if (factors_.empty())
        throw ShapeError("kronecker", "Kronecker operator needs at least one factor");
    std::vector<std::size_t> p, q;
    for (const auto& f : factors_) {
        if (f.rows() == 0 || f.cols() == 0)
            throw ShapeError("kronecker", "empty factor matrix");
        p.push_back(f.rows());
        q.push_back(f.cols());
    }
    row_shape_ = Shape(p);
    col_shape_ = Shape(q);
}

template <Field T>
T KroneckerOperator<T>::entry(const MultiIndex& mu, const MultiIndex& kappa) const {
    require_contains(row_shape_, mu);
    require_contains(col_shape_, kappa);
    T acc = one<T>();
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        acc *= factors_[i](mu[i] - 1, kappa[i] - 1);
        if (is_zero(acc))
            break;
    }
    return acc;
}

// x is viewed as a tensor over (d_1, ..., d_m); axis i starts at q_i and
// becomes p_i once factor i has been applied:
//   y[l, a, r] = Σ_b A_i(a, b) · x[l, b, r]
// The innermost loop runs over the contiguous r block.
template <Field T>
template <class Axpy>
std::vector<T> KroneckerOperator<T>::contract(std::span<const T> x, Axpy axpy) const {
    if (x.size() != cols())
        throw ShapeError("kronecker", "vector length " + std::to_string(x.size()) + " does not match " +
                                          std::to_string(cols()) + " columns");
    std::vector<std::size_t> dims(col_shape_.dims().begin(), col_shape_.dims().end());
    std::vector<T> cur(x.begin(), x.end());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        const auto& a = factors_[i];
        std::size_t left = 1, right = 1;
        for (std::size_t j = 0; j < i; ++j)
            left *= dims[j];
        for (std::size_t j = i + 1; j < dims.size(); ++j)
            right *= dims[j];
        std::size_t pi = a.rows(), qi = a.cols();
        std::vector<T> next(left * pi * right, zero<T>());
        for (std::size_t l = 0; l < left; ++l)
            for (std::size_t r = 0; r < pi; ++r)
                for (std::size_t c = 0; c < qi; ++c) {
                    const T& s = a(r, c);
                    if (is_zero(s))
                        continue;
                    axpy(s, cur.data() + (l * qi + c) * right, next.data() + (l * pi + r) * right, right);
                }
        dims[i] = pi;
        cur = std::move(next);
    }
    return cur;
}

template <Field T>
std::vector<T> KroneckerOperator<T>::matvec(std::span<const T> x) const {
    if constexpr (std::is_same_v<T, Complex64>) {
        return contract(x, kernels::caxpy());
    } else {
        return contract(x, [](const T& s, const T* src, T* dst, std::size_t n) {
            for (std::size_t k = 0; k < n; ++k)
                dst[k] += s * src[k];
        });
    }
}

template <Field T>
std::vector<T> KroneckerOperator<T>::matvec_with(std::span<const T> x, kernels::Isa isa) const
    requires std::is_same_v<T, Complex64>
{
    return contract(x, kernels::caxpy_for(isa));
}

// ---------------------------------------------------------------------------
// h_φ(A ⊗ B) = AB.

/// Matrix multiplication φ(A, B) = AB as a bilinear map
/// M_{p,q} x M_{q,s} -> M_{p,s}, given on standard basis pairs by
/// E_cd E_ef = χ(d = e) E_cf. Matrices are coordinatized row-major.
template <Field T>
MultilinearMap<T> matrix_product_map(std::size_t p, std::size_t q, std::size_t s) {
    Shape left{p, q}, right{q, s}, out{p, s};
    return from_rule<T>(Shape{p * q, q * s}, p * s, [&](const MultiIndex& g) {
        MultiIndex cd = unrank(left, g[0]);
        MultiIndex ef = unrank(right, g[1]);
        std::vector<T> v(p * s, zero<T>());
        if (cd[1] == ef[0])
            v[offset(out, MultiIndex{cd[0], ef[1]})] = one<T>();
        return v;
    });
}

/// AB computed as h_φ applied to the coordinates of A ⊗ B, where h_φ is
/// assembled from the component functionals h_{φ^(i,j)}.
template <Field T>
DenseMatrix<T> factorized_matrix_product(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols() != b.rows())
        throw ShapeError("kronecker", "cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                          " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::size_t p = a.rows(), q = a.cols(), s = b.cols();
    auto model = build_model<T>(Shape{p * q, q * s});
    auto phi = matrix_product_map<T>(p, q, s);
    // h_φ = ⊕_{(i,j)} h_{φ^(i,j)}: one row per component functional.
    std::vector<T> rows;
    for (std::size_t j = 1; j <= p * s; ++j) {
        auto h_ij = universal_factor(model, component(phi, j));
        rows.insert(rows.end(), h_ij.matrix().data().begin(), h_ij.matrix().data().end());
    }
    LinearMap<T> h(DenseMatrix<T>(p * s, model.dim(), std::move(rows)));
    std::vector<VectorInBasis<T>> xs{std::vector<T>(a.data().begin(), a.data().end()),
                                     std::vector<T>(b.data().begin(), b.data().end())};
    auto coords = h.apply(pure(model, xs).coeffs);
    return DenseMatrix<T>(p, s, std::move(coords));
}

// ---------------------------------------------------------------------------
// Submatrices A[X|Y], A(X|Y) and the mixed forms.

enum class Select { retain, remove };

/// Rows X and columns Y are 1-based. `retain` keeps the listed indices,
/// `remove` keeps their complement; order is always preserved.
template <Field T>
DenseMatrix<T> submatrix(const DenseMatrix<T>& a, const std::vector<std::size_t>& rows, Select row_mode,
                         const std::vector<std::size_t>& cols, Select col_mode) {
    auto pick = [](std::size_t n, const std::vector<std::size_t>& idx, Select mode, const char* what) {
        std::vector<bool> listed(n, false);
        for (std::size_t k : idx) {
            if (k < 1 || k > n)
                throw RangeError("kronecker", std::string(what) + " index " + std::to_string(k) + " outside 1.." +
                                                  std::to_string(n));
            listed[k - 1] = true;
        }
        std::vector<std::size_t> keep;
        for (std::size_t k = 0; k < n; ++k)
            if (listed[k] == (mode == Select::retain))
                keep.push_back(k);
        return keep;
    };
    auto r = pick(a.rows(), rows, row_mode, "row");
    auto c = pick(a.cols(), cols, col_mode, "column");
    DenseMatrix<T> out(r.size(), c.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j)
            out(i, j) = a(r[i], c[j]);
    return out;
}

template <Field T>
DenseMatrix<T> submatrix(const DenseMatrix<T>& a, const std::vector<std::size_t>& rows,
                         const std::vector<std::size_t>& cols, Select mode) {
    return submatrix(a, rows, mode, cols, mode);
}

/// Same with composite row/column labels; requires a labelled matrix.
template <Field T>
DenseMatrix<T> submatrix(const DenseMatrix<T>& a, const std::vector<MultiIndex>& rows,
                         const std::vector<MultiIndex>& cols, Select mode) {
    if (!a.row_labels() || !a.col_labels())
        throw ShapeError("kronecker", "matrix has no composite labels");
    std::vector<std::size_t> r, c;
    for (const auto& mu : rows)
        r.push_back(rank(*a.row_labels(), mu));
    for (const auto& kappa : cols)
        c.push_back(rank(*a.col_labels(), kappa));
    return submatrix(a, r, mode, c, mode);
}

} // namespace kronlab
