#pragma once

// Multilinear maps V_1 x ... x V_m -> U given by their values s_γ on basis
// tuples (e_{1γ(1)}, ..., e_{mγ(m)}) and extended multilinearly:
//
//   f(x_1, ..., x_m) = Σ_γ ( ∏_i c_{iγ(i)} ) s_γ
//
// Vectors are coefficient sequences relative to fixed ordered bases.

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/scalars.hpp"

namespace kronlab {

/// Coordinates (c_1, ..., c_n) relative to an ordered basis.
template <Field T>
using VectorInBasis = std::vector<T>;

template <Field T>
class MultilinearMap {
public:
    /// Table of s_γ, one row per γ in lex order.
    MultilinearMap(Shape shape, std::size_t target_dim, std::vector<T> flat_values);

    const Shape& shape() const { return shape_; }
    std::size_t target_dim() const { return target_dim_; }

    /// s_γ for 0-based position k of γ.
    std::span<const T> value_at(std::size_t k) const {
        return std::span<const T>(values_).subspan(k * target_dim_, target_dim_);
    }
    std::span<const T> value(const MultiIndex& g) const { return value_at(offset(shape_, g)); }
    std::span<const T> flat_values() const { return values_; }

    friend bool operator==(const MultilinearMap& a, const MultilinearMap& b) {
        return a.shape_ == b.shape_ && a.target_dim_ == b.target_dim_ && a.values_ == b.values_;
    }

private:
    Shape shape_;
    std::size_t target_dim_;
    std::vector<T> values_;
};

template <Field T>
MultilinearMap<T>::MultilinearMap(Shape shape, std::size_t target_dim, std::vector<T> flat_values)
    : shape_(std::move(shape)), target_dim_(target_dim), values_(std::move(flat_values)) {
    if (target_dim_ == 0)
        throw ShapeError("multilinear", "target dimension must be positive");
    if (values_.size() != shape_.size() * target_dim_)
        throw ShapeError("multilinear", "value table has " + std::to_string(values_.size()) + " scalars, expected " +
                                            std::to_string(shape_.size()) + " x " + std::to_string(target_dim_));
}

/// Builds the map from a list of s_γ in lex order of γ. Exactly one value per
/// γ is required.
template <Field T>
MultilinearMap<T> from_values(const Shape& shape, std::size_t target_dim, const std::vector<std::vector<T>>& values) {
    if (values.size() != shape.size())
        throw ShapeError("multilinear", "expected " + std::to_string(shape.size()) + " values s_γ over Γ" +
                                            to_string(shape) + ", got " + std::to_string(values.size()));
    std::vector<T> flat;
    flat.reserve(shape.size() * target_dim);
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (values[k].size() != target_dim)
            throw ShapeError("multilinear", "value at " + to_string(unrank(shape, k + 1)) + " has length " +
                                                std::to_string(values[k].size()) + ", expected " +
                                                std::to_string(target_dim));
        flat.insert(flat.end(), values[k].begin(), values[k].end());
    }
    return MultilinearMap<T>(shape, target_dim, std::move(flat));
}

/// Builds the map from a rule γ ↦ s_γ.
template <Field T, class Rule>
MultilinearMap<T> from_rule(const Shape& shape, std::size_t target_dim, Rule rule) {
    std::vector<std::vector<T>> values;
    values.reserve(shape.size());
    for (IndexCounter c(shape); !c.done(); c.next())
        values.push_back(rule(c.current()));
    return from_values<T>(shape, target_dim, values);
}

template <Field T>
void require_slots(const Shape& shape, std::span<const VectorInBasis<T>> xs, const char* module = "multilinear") {
    if (xs.size() != shape.arity())
        throw ShapeError(module, "expected " + std::to_string(shape.arity()) + " arguments, got " +
                                     std::to_string(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i].size() != shape[i])
            throw ShapeError(module, "argument " + std::to_string(i + 1) + " has length " +
                                         std::to_string(xs[i].size()) + ", expected " + std::to_string(shape[i]));
}

/// Multilinear expansion: Σ_γ (∏_i c_{iγ(i)}) s_γ, summed directly over Γ.
template <Field T>
std::vector<T> evaluate(const MultilinearMap<T>& f, std::span<const VectorInBasis<T>> xs) {
    require_slots<T>(f.shape(), xs);
    std::vector<T> out(f.target_dim(), zero<T>());
    for (IndexCounter c(f.shape()); !c.done(); c.next()) {
        T coeff = one<T>();
        for (std::size_t i = 0; i < xs.size(); ++i)
            coeff *= xs[i][c.digits()[i]];
        if (is_zero(coeff))
            continue;
        auto s = f.value_at(c.position());
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += coeff * s[j];
    }
    return out;
}

template <Field T>
std::vector<T> evaluate(const MultilinearMap<T>& f, const std::vector<VectorInBasis<T>>& xs) {
    return evaluate(f, std::span<const VectorInBasis<T>>(xs));
}

/// Same value as evaluate(), contracting the last slot first (Horner-like).
/// Costs Σ_k ∏_{i≤k} n_i · n instead of |Γ|·(m+n).
template <Field T>
std::vector<T> evaluate_factored(const MultilinearMap<T>& f, std::span<const VectorInBasis<T>> xs) {
    require_slots<T>(f.shape(), xs);
    std::size_t n = f.target_dim();
    std::vector<T> acc(f.flat_values().begin(), f.flat_values().end());
    std::size_t outer = f.shape().size();
    for (std::size_t i = xs.size(); i-- > 0;) {
        std::size_t ni = f.shape()[i];
        outer /= ni;
        std::vector<T> next(outer * n, zero<T>());
        for (std::size_t o = 0; o < outer; ++o)
            for (std::size_t t = 0; t < ni; ++t) {
                const T& c = xs[i][t];
                if (is_zero(c))
                    continue;
                for (std::size_t j = 0; j < n; ++j)
                    next[o * n + j] += c * acc[(o * ni + t) * n + j];
            }
        acc = std::move(next);
    }
    return acc;
}

template <Field T>
std::vector<T> evaluate_factored(const MultilinearMap<T>& f, const std::vector<VectorInBasis<T>>& xs) {
    return evaluate_factored(f, std::span<const VectorInBasis<T>>(xs));
}

/// Indicator (standard basis) vector e_k of length n, k 1-based.
template <Field T>
VectorInBasis<T> unit_vector(std::size_t n, std::size_t k) {
    if (k < 1 || k > n)
        throw RangeError("multilinear", "basis index " + std::to_string(k) + " outside 1.." + std::to_string(n));
    VectorInBasis<T> v(n, zero<T>());
    v[k - 1] = one<T>();
    return v;
}

/// The basis tuple (e_{1γ(1)}, ..., e_{mγ(m)}).
template <Field T>
std::vector<VectorInBasis<T>> basis_tuple(const Shape& shape, const MultiIndex& g) {
    require_contains(shape, g);
    std::vector<VectorInBasis<T>> xs;
    for (std::size_t i = 0; i < shape.arity(); ++i)
        xs.push_back(unit_vector<T>(shape[i], g[i]));
    return xs;
}

/// φ_α: scalar-valued, 1 on the basis tuple α and 0 on every other one.
template <Field T>
MultilinearMap<T> basis_functional(const Shape& shape, const MultiIndex& alpha) {
    std::size_t k = offset(shape, alpha);
    std::vector<T> values(shape.size(), zero<T>());
    values[k] = one<T>();
    return MultilinearMap<T>(shape, 1, std::move(values));
}

/// Values f(e-tuple γ) for every γ; f = Σ_α f(e-tuple α) φ_α.
template <Field T>
std::vector<std::vector<T>> expand_in_basis(const MultilinearMap<T>& f) {
    std::vector<std::vector<T>> table;
    table.reserve(f.shape().size());
    for (IndexCounter c(f.shape()); !c.done(); c.next()) {
        auto xs = basis_tuple<T>(f.shape(), c.current());
        table.push_back(evaluate(f, xs));
    }
    return table;
}

/// Σ_α table_α · φ_α, assembled from the basis functionals.
template <Field T>
MultilinearMap<T> reconstruct_from_basis(const Shape& shape, const std::vector<std::vector<T>>& table) {
    if (table.size() != shape.size() || table.empty())
        throw ShapeError("multilinear", "coefficient table does not match Γ" + to_string(shape));
    std::size_t n = table.front().size();
    std::vector<T> flat(shape.size() * n, zero<T>());
    for (IndexCounter c(shape); !c.done(); c.next()) {
        const auto& coeff = table[c.position()];
        if (coeff.size() != n)
            throw ShapeError("multilinear", "ragged coefficient table");
        auto phi = basis_functional<T>(shape, c.current());
        for (std::size_t k = 0; k < shape.size(); ++k) {
            const T& d = phi.value_at(k)[0];
            if (is_zero(d))
                continue;
            for (std::size_t j = 0; j < n; ++j)
                flat[k * n + j] += d * coeff[j];
        }
    }
    return MultilinearMap<T>(shape, n, std::move(flat));
}

/// Component function f^{(j)}, j 1-based: the j-th coordinate of f.
template <Field T>
MultilinearMap<T> component(const MultilinearMap<T>& f, std::size_t j) {
    if (j < 1 || j > f.target_dim())
        throw RangeError("multilinear", "component " + std::to_string(j) + " outside 1.." +
                                            std::to_string(f.target_dim()));
    std::vector<T> values;
    values.reserve(f.shape().size());
    for (std::size_t k = 0; k < f.shape().size(); ++k)
        values.push_back(f.value_at(k)[j - 1]);
    return MultilinearMap<T>(f.shape(), 1, std::move(values));
}

template <Field T>
struct InterchangeReport {
    T product_of_sums;
    T sum_of_products;
    bool holds;
};

/// Computes ∏_i (Σ_k a_{ik}) and Σ_γ ∏_i a_{iγ(i)} independently.
template <Field T>
InterchangeReport<T> product_sum_interchange(const std::vector<std::vector<T>>& rows) {
    if (rows.empty())
        throw ShapeError("multilinear", "need at least one row");
    std::vector<std::size_t> dims;
    T lhs = one<T>();
    for (const auto& r : rows) {
        dims.push_back(r.size());
        T s = zero<T>();
        for (const auto& a : r)
            s += a;
        lhs *= s;
    }
    T rhs = zero<T>();
    Shape shape(dims);
    for (IndexCounter c(shape); !c.done(); c.next()) {
        T p = one<T>();
        for (std::size_t i = 0; i < rows.size(); ++i)
            p *= rows[i][c.digits()[i]];
        rhs += p;
    }
    bool holds;
    if constexpr (is_exact_v<T>)
        holds = lhs == rhs;
    else
        holds = near(lhs, rhs, 1e-12);
    return {lhs, rhs, holds};
}

template <Field T>
bool check_product_sum_interchange(const std::vector<std::vector<T>>& rows) {
    return product_sum_interchange(rows).holds;
}

} // namespace kronlab
