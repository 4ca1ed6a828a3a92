#pragma once

// Conjugate bilinear forms φ: W x Ŵ -> F, linear in the first slot and
// conjugate-linear in the second, stored by their Gram table
// g(α, β) = φ(f_α, f̂_β) over lex-ordered bases.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/matrix.hpp"
#include "kronlab/scalars.hpp"

namespace kronlab {

template <Field T>
class ConjugateBilinearForm {
public:
    explicit ConjugateBilinearForm(DenseMatrix<T> gram) : gram_(std::move(gram)) {
        if (gram_.rows() == 0 || gram_.cols() == 0)
            throw ShapeError("inner_product", "Gram table must be nonempty");
    }

    std::size_t left_dim() const { return gram_.rows(); }
    std::size_t right_dim() const { return gram_.cols(); }
    const DenseMatrix<T>& gram() const { return gram_; }

    friend bool operator==(const ConjugateBilinearForm& a, const ConjugateBilinearForm& b) {
        return a.gram_ == b.gram_;
    }

private:
    DenseMatrix<T> gram_;
};

/// φ(a, b) = Σ_α Σ_β c_α conj(d_β) g(α, β).
template <Field T>
T eval_form(const ConjugateBilinearForm<T>& phi, std::span<const T> a, std::span<const T> b) {
    if (a.size() != phi.left_dim() || b.size() != phi.right_dim())
        throw ShapeError("inner_product", "form on " + std::to_string(phi.left_dim()) + " x " +
                                              std::to_string(phi.right_dim()) + " evaluated on vectors of length " +
                                              std::to_string(a.size()) + " and " + std::to_string(b.size()));
    T acc = zero<T>();
    for (std::size_t beta = 0; beta < b.size(); ++beta) {
        if (is_zero(b[beta]))
            continue;
        T inner = zero<T>();
        for (std::size_t alpha = 0; alpha < a.size(); ++alpha)
            inner += a[alpha] * phi.gram()(alpha, beta);
        acc += inner * conj(b[beta]);
    }
    return acc;
}

template <Field T>
T eval_form(const ConjugateBilinearForm<T>& phi, const std::vector<T>& a, const std::vector<T>& b) {
    return eval_form(phi, std::span<const T>(a), std::span<const T>(b));
}

/// The form on W = ⊗V_i, Ŵ = ⊗V̂_i with
/// g(α, β) = ∏_i φ_i(e_{iα(i)}, ê_{iβ(i)}), α ∈ Γ(left), β ∈ Γ(right).
template <Field T>
ConjugateBilinearForm<T> product_form(std::span<const ConjugateBilinearForm<T>> factors, const Shape& left,
                                      const Shape& right) {
    if (factors.size() != left.arity() || factors.size() != right.arity())
        throw ShapeError("inner_product", std::to_string(factors.size()) + " factor forms for shapes Γ" +
                                              to_string(left) + " and Γ" + to_string(right));
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i].left_dim() != left[i] || factors[i].right_dim() != right[i])
            throw ShapeError("inner_product", "factor " + std::to_string(i + 1) + " is a form on " +
                                                  std::to_string(factors[i].left_dim()) + " x " +
                                                  std::to_string(factors[i].right_dim()) + ", expected " +
                                                  std::to_string(left[i]) + " x " + std::to_string(right[i]));
    DenseMatrix<T> g(left.size(), right.size());
    for (IndexCounter a(left); !a.done(); a.next())
        for (IndexCounter b(right); !b.done(); b.next()) {
            T v = one<T>();
            for (std::size_t i = 0; i < factors.size(); ++i)
                v *= factors[i].gram()(a.digits()[i], b.digits()[i]);
            g(a.position(), b.position()) = std::move(v);
        }
    return ConjugateBilinearForm<T>(std::move(g));
}

template <Field T>
ConjugateBilinearForm<T> product_form(const std::vector<ConjugateBilinearForm<T>>& factors, const Shape& left,
                                      const Shape& right) {
    return product_form(std::span<const ConjugateBilinearForm<T>>(factors), left, right);
}

// ---------------------------------------------------------------------------

struct DefinitenessReport {
    bool square = false;
    bool conjugate_symmetric = false;
    bool positive_definite = false;
    /// First leading principal minor (1-based order) that is not a positive
    /// real, or 0.
    std::size_t failing_minor = 0;

    bool ok() const { return square && conjugate_symmetric && positive_definite; }
};

namespace detail {

/// Sign of the real part when the imaginary part vanishes (within tol for
/// Complex64); returns false if not real or not positive.
inline bool positive_real(const Rational& x, double) { return sgn(x) > 0; }
inline bool positive_real(const Gaussian& x, double) { return sgn(x.im) == 0 && sgn(x.re) > 0; }
inline bool positive_real(const Complex64& x, double tol) { return std::abs(x.imag()) <= tol && x.real() > tol; }

} // namespace detail

/// Checks g(α,β) = conj(g(β,α)) and that every leading principal minor is a
/// positive real. Elimination without row exchanges produces pivots
/// d_k = M_k / M_{k-1}, so all minors are positive iff all pivots are.
template <Field T>
DefinitenessReport check_inner_product(const DenseMatrix<T>& gram, double tol = 1e-12) {
    DefinitenessReport r;
    r.square = gram.rows() == gram.cols();
    if (!r.square)
        return r;
    std::size_t n = gram.rows();
    r.conjugate_symmetric = true;
    for (std::size_t i = 0; i < n && r.conjugate_symmetric; ++i)
        for (std::size_t j = i; j < n; ++j) {
            T c = conj(gram(j, i));
            bool same;
            if constexpr (is_exact_v<T>)
                same = gram(i, j) == c;
            else
                same = near(gram(i, j), c, tol);
            if (!same) {
                r.conjugate_symmetric = false;
                break;
            }
        }
    DenseMatrix<T> m = gram;
    r.positive_definite = true;
    for (std::size_t k = 0; k < n; ++k) {
        if (!detail::positive_real(m(k, k), tol)) {
            r.positive_definite = false;
            r.failing_minor = k + 1;
            break;
        }
        T inv = checked_div(one<T>(), m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (is_zero(m(i, k)))
                continue;
            T f = m(i, k) * inv;
            for (std::size_t j = k; j < n; ++j)
                m(i, j) -= f * m(k, j);
        }
    }
    return r;
}

/// A conjugate bilinear form on W x W that passed check_inner_product.
template <Field T>
class InnerProductForm {
public:
    explicit InnerProductForm(ConjugateBilinearForm<T> form) : form_(std::move(form)) {
        auto rep = check_inner_product(form_.gram());
        if (!rep.square)
            throw Error("inner_product", "inner product needs a square Gram table");
        if (!rep.conjugate_symmetric)
            throw Error("inner_product", "Gram table is not conjugate symmetric");
        if (!rep.positive_definite)
            throw Error("inner_product", "Gram table is not positive definite (leading minor " +
                                             std::to_string(rep.failing_minor) + ")");
    }

    const ConjugateBilinearForm<T>& form() const { return form_; }
    std::size_t dim() const { return form_.left_dim(); }

    T operator()(std::span<const T> a, std::span<const T> b) const { return eval_form(form_, a, b); }
    T operator()(const std::vector<T>& a, const std::vector<T>& b) const { return eval_form(form_, a, b); }

private:
    ConjugateBilinearForm<T> form_;
};

template <Field T>
ConjugateBilinearForm<T> standard_form(std::size_t n) {
    return ConjugateBilinearForm<T>(DenseMatrix<T>::identity(n));
}

/// The inner product on ⊗V_i making {e_α^⊗} orthonormal when each E_i is
/// orthonormal: the product of the standard forms of the factors.
template <Field T>
InnerProductForm<T> induced_inner_product(const Shape& shape) {
    std::vector<ConjugateBilinearForm<T>> factors;
    for (std::size_t n : shape.dims())
        factors.push_back(standard_form<T>(n));
    return InnerProductForm<T>(product_form<T>(factors, shape, shape));
}

} // namespace kronlab
