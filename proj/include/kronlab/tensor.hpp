#pragma once

// Tensor-product models (P, ν) of V_1, ..., V_m.
//
// The canonical model is the coordinate space F^N, N = ∏ n_i, with
// p_γ = ν(e_{1γ(1)}, ..., e_{mγ(m)}) the standard basis vector at rank(γ).
// Other models are described by a basis matrix whose columns are the p_γ in
// some ambient coordinates.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/matrix.hpp"
#include "kronlab/multilinear.hpp"
#include "kronlab/scalars.hpp"

namespace kronlab {

/// A linear map with its matrix [T]_v^w (codomain x domain).
template <Field T>
class LinearMap {
public:
    explicit LinearMap(DenseMatrix<T> matrix) : matrix_(std::move(matrix)) {}

    std::size_t domain_dim() const { return matrix_.cols(); }
    std::size_t codomain_dim() const { return matrix_.rows(); }
    const DenseMatrix<T>& matrix() const { return matrix_; }

    std::vector<T> apply(std::span<const T> x) const { return matrix_ * x; }
    std::vector<T> apply(const std::vector<T>& x) const { return matrix_ * x; }

    /// this ∘ inner
    LinearMap compose(const LinearMap& inner) const { return LinearMap(matrix_ * inner.matrix_); }

    friend bool operator==(const LinearMap& a, const LinearMap& b) { return a.matrix_ == b.matrix_; }

private:
    DenseMatrix<T> matrix_;
};

/// Matrix of T with respect to a base pair: column j holds the coordinates of
/// T(v_j) in the codomain basis. `images[j]` are those coordinates.
template <Field T>
DenseMatrix<T> matrix_of(const std::vector<std::vector<T>>& images, std::size_t domain_dim, std::size_t codomain_dim) {
    if (images.size() != domain_dim)
        throw ShapeError("tensor", "expected " + std::to_string(domain_dim) + " images, got " +
                                       std::to_string(images.size()));
    DenseMatrix<T> a(codomain_dim, domain_dim);
    for (std::size_t j = 0; j < domain_dim; ++j) {
        if (images[j].size() != codomain_dim)
            throw ShapeError("tensor", "image of v_" + std::to_string(j + 1) + " has " +
                                           std::to_string(images[j].size()) + " coordinates, expected " +
                                           std::to_string(codomain_dim));
        for (std::size_t i = 0; i < codomain_dim; ++i)
            a(i, j) = images[j][i];
    }
    return a;
}

/// Coordinates of `v` relative to the basis formed by the columns of `basis`.
/// Throws if `v` is outside their span or the columns are dependent.
template <Field T>
std::vector<T> coordinates_in(const DenseMatrix<T>& basis, std::span<const T> v) {
    if (basis.rows() != v.size())
        throw ShapeError("tensor", "vector length does not match basis ambient dimension");
    std::size_t r = basis.rows(), n = basis.cols();
    DenseMatrix<T> aug(r, n + 1);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug(i, j) = basis(i, j);
        aug(i, n) = v[i];
    }
    auto red = column_rank(aug);
    if (red.rank != n || (!red.pivots.empty() && red.pivots.back() == n))
        throw Error("tensor", "vector is not a unique combination of the basis");
    // The dependency on the last column gives -coordinates.
    const auto& dep = *red.column_dependency;
    std::vector<T> c(n);
    for (std::size_t j = 0; j < n; ++j)
        c[j] = T(-dep[j]);
    return c;
}

/// Matrix of T given images in ambient coordinates of the codomain, expressed
/// in the codomain basis `w` (columns).
template <Field T>
DenseMatrix<T> matrix_of(const std::vector<std::vector<T>>& ambient_images, const DenseMatrix<T>& codomain_basis) {
    std::vector<std::vector<T>> coords;
    for (const auto& img : ambient_images)
        coords.push_back(coordinates_in<T>(codomain_basis, img));
    return matrix_of<T>(coords, ambient_images.size(), codomain_basis.cols());
}

// ---------------------------------------------------------------------------

template <Field T>
class TensorModel {
public:
    /// Coordinate model over Γ(shape).
    explicit TensorModel(Shape shape) : shape_(std::move(shape)) {}
    /// Model whose basis vector p_γ is column rank(γ) of `basis`.
    TensorModel(Shape shape, DenseMatrix<T> basis);

    const Shape& shape() const { return shape_; }
    std::size_t dim() const { return shape_.size(); }
    std::size_t ambient_dim() const { return basis_ ? basis_->rows() : dim(); }
    bool is_coordinate_model() const { return !basis_.has_value(); }

    /// Basis label of γ: its 1-based lex position.
    std::size_t label(const MultiIndex& g) const { return rank(shape_, g); }
    /// Columns p_γ in ambient coordinates (identity for the coordinate model).
    DenseMatrix<T> basis_matrix() const { return basis_ ? *basis_ : DenseMatrix<T>::identity(dim()); }

private:
    Shape shape_;
    std::optional<DenseMatrix<T>> basis_;
};

template <Field T>
TensorModel<T>::TensorModel(Shape shape, DenseMatrix<T> basis) : shape_(std::move(shape)), basis_(std::move(basis)) {
    if (basis_->cols() != shape_.size() || basis_->rows() != shape_.size())
        throw ShapeError("tensor", "basis matrix must be " + std::to_string(shape_.size()) + "x" +
                                       std::to_string(shape_.size()));
    if (column_rank(*basis_).rank != shape_.size())
        throw Error("tensor", "basis vectors are linearly dependent");
}

template <Field T>
TensorModel<T> build_model(const Shape& shape) {
    return TensorModel<T>(shape);
}

/// Element of a model, stored by its coordinates relative to {p_γ}.
template <Field T>
struct Tensor {
    Shape shape;
    std::vector<T> coeffs;

    const T& at(const MultiIndex& g) const { return coeffs[offset(shape, g)]; }
    friend bool operator==(const Tensor&, const Tensor&) = default;
};

template <Field T>
Tensor<T> make_tensor(const Shape& shape, std::vector<T> coeffs) {
    if (coeffs.size() != shape.size())
        throw ShapeError("tensor", "tensor over Γ" + to_string(shape) + " needs " + std::to_string(shape.size()) +
                                       " coefficients, got " + std::to_string(coeffs.size()));
    return {shape, std::move(coeffs)};
}

/// Coordinate tensor p_γ.
template <Field T>
Tensor<T> basis_tensor(const Shape& shape, const MultiIndex& g) {
    std::vector<T> c(shape.size(), zero<T>());
    c[offset(shape, g)] = one<T>();
    return {shape, std::move(c)};
}

/// Homogeneous tensor x_1 ⊗ ... ⊗ x_m: coefficient at γ is ∏_i c_{iγ(i)}.
template <Field T>
Tensor<T> pure(const Shape& shape, std::span<const VectorInBasis<T>> xs) {
    require_slots<T>(shape, xs, "tensor");
    std::vector<T> c;
    c.reserve(shape.size());
    for (IndexCounter it(shape); !it.done(); it.next()) {
        T p = one<T>();
        for (std::size_t i = 0; i < xs.size(); ++i)
            p *= xs[i][it.digits()[i]];
        c.push_back(std::move(p));
    }
    return {shape, std::move(c)};
}

template <Field T>
Tensor<T> pure(const TensorModel<T>& model, const std::vector<VectorInBasis<T>>& xs) {
    return pure<T>(model.shape(), std::span<const VectorInBasis<T>>(xs));
}

template <Field T>
Tensor<T> pure(const Shape& shape, const std::vector<VectorInBasis<T>>& xs) {
    return pure<T>(shape, std::span<const VectorInBasis<T>>(xs));
}

// ---------------------------------------------------------------------------
// Checking a candidate (P, ν).

/// Candidate ν given on basis tuples: ν(e-tuple γ) as a vector of length
/// `ambient` for every γ, in lex order.
template <Field T>
class NuTable {
public:
    NuTable(Shape shape, std::size_t ambient, std::vector<std::vector<T>> images);

    const Shape& shape() const { return shape_; }
    std::size_t ambient() const { return ambient_; }
    const std::vector<std::vector<T>>& images() const { return images_; }
    const std::vector<T>& image(const MultiIndex& g) const { return images_[offset(shape_, g)]; }

    /// Ambient x |Γ| matrix with column rank(γ) = ν(e-tuple γ).
    DenseMatrix<T> as_columns() const;

private:
    Shape shape_;
    std::size_t ambient_;
    std::vector<std::vector<T>> images_;
};

template <Field T>
NuTable<T>::NuTable(Shape shape, std::size_t ambient, std::vector<std::vector<T>> images)
    : shape_(std::move(shape)), ambient_(ambient), images_(std::move(images)) {
    if (images_.size() != shape_.size())
        throw ShapeError("tensor", "ν table needs one image per γ in Γ" + to_string(shape_) + " (" +
                                       std::to_string(shape_.size()) + "), got " + std::to_string(images_.size()));
    for (const auto& v : images_)
        if (v.size() != ambient_)
            throw ShapeError("tensor", "ν image of length " + std::to_string(v.size()) + " in ambient dimension " +
                                           std::to_string(ambient_));
}

template <Field T>
DenseMatrix<T> NuTable<T>::as_columns() const {
    DenseMatrix<T> m(ambient_, images_.size());
    for (std::size_t j = 0; j < images_.size(); ++j)
        for (std::size_t i = 0; i < ambient_; ++i)
            m(i, j) = images_[j][i];
    return m;
}

enum class Criterion { none, span, dimension };

std::string_view criterion_name(Criterion c);

template <Field T>
struct TensorProductVerdict {
    bool is_tensor_product = false;
    /// First criterion that failed: span (⟨Im ν⟩ ≠ P) or dimension
    /// (dim P ≠ ∏ n_i); `none` on success.
    Criterion failed = Criterion::none;
    bool span_ok = false;
    bool dimension_ok = false;
    std::size_t rank = 0;
    /// Nonzero (γ, d_γ) with Σ d_γ ν(e-tuple γ) = 0 whenever the basis images
    /// are dependent.
    std::vector<std::pair<MultiIndex, T>> witness;
};

/// Basis criterion: (P, ν) is a tensor product iff the |Γ| images of basis
/// tuples form a basis of P, i.e. they are independent and dim P = |Γ|.
template <Field T>
TensorProductVerdict<T> verify_tensor_product(const NuTable<T>& nu, std::size_t ambient_dim) {
    if (ambient_dim != nu.ambient())
        throw ShapeError("tensor", "ambient dimension " + std::to_string(ambient_dim) + " does not match ν images of length " +
                                       std::to_string(nu.ambient()));
    TensorProductVerdict<T> v;
    auto red = column_rank(nu.as_columns());
    v.rank = red.rank;
    v.span_ok = red.rank == ambient_dim;
    v.dimension_ok = ambient_dim == nu.shape().size();
    v.is_tensor_product = v.span_ok && v.dimension_ok;
    if (!v.dimension_ok)
        v.failed = Criterion::dimension;
    else if (!v.span_ok)
        v.failed = Criterion::span;
    if (red.column_dependency) {
        const auto& d = *red.column_dependency;
        for (std::size_t k = 0; k < d.size(); ++k)
            if (!is_zero(d[k]))
                v.witness.emplace_back(unrank(nu.shape(), k + 1), d[k]);
    }
    return v;
}

/// The model defined by a verified ν table.
template <Field T>
TensorModel<T> model_from_nu(const NuTable<T>& nu) {
    auto verdict = verify_tensor_product(nu, nu.ambient());
    if (!verdict.is_tensor_product)
        throw Error("tensor", std::string("ν does not define a tensor product (") +
                                  std::string(criterion_name(verdict.failed)) + " criterion fails)");
    return TensorModel<T>(nu.shape(), nu.as_columns());
}

// ---------------------------------------------------------------------------

/// h_φ with h_φ(p_γ) = φ(e-tuple γ). Its matrix relative to {p_γ} and the
/// target basis has column rank(γ) = s_γ.
template <Field T>
LinearMap<T> universal_factor(const TensorModel<T>& model, const MultilinearMap<T>& phi) {
    if (!(phi.shape() == model.shape()))
        throw ShapeError("tensor", "φ over Γ" + to_string(phi.shape()) + " does not match model Γ" +
                                       to_string(model.shape()));
    DenseMatrix<T> h(phi.target_dim(), model.dim());
    for (std::size_t k = 0; k < model.dim(); ++k) {
        auto s = phi.value_at(k);
        for (std::size_t j = 0; j < s.size(); ++j)
            h(j, k) = s[j];
    }
    return LinearMap<T>(std::move(h));
}

/// The isomorphism T: P -> Q with T(ν(e-tuple γ)) = μ(e-tuple γ), as a matrix
/// in ambient coordinates: B_Q · B_P^{-1}. Relative to the two lex-ordered
/// model bases its matrix is I_N.
template <Field T>
LinearMap<T> canonical_isomorphism(const TensorModel<T>& from, const TensorModel<T>& to) {
    if (!(from.shape() == to.shape()))
        throw ShapeError("tensor", "models over Γ" + to_string(from.shape()) + " and Γ" + to_string(to.shape()) +
                                       " are not tensor products of the same spaces");
    if (from.is_coordinate_model() && to.is_coordinate_model())
        return LinearMap<T>(DenseMatrix<T>::identity(from.dim()));
    return LinearMap<T>(to.basis_matrix() * inverse(from.basis_matrix()));
}

/// Matrix of a map P -> Q between models relative to their {p_γ} bases.
template <Field T>
DenseMatrix<T> matrix_in_model_bases(const LinearMap<T>& map, const TensorModel<T>& from, const TensorModel<T>& to) {
    DenseMatrix<T> src = from.basis_matrix();
    std::vector<std::vector<T>> images;
    for (std::size_t j = 0; j < from.dim(); ++j) {
        std::vector<T> col(src.rows());
        for (std::size_t i = 0; i < src.rows(); ++i)
            col[i] = src(i, j);
        images.push_back(map.apply(col));
    }
    return matrix_of<T>(images, to.basis_matrix());
}

template <Field T>
struct SubspaceProduct {
    TensorModel<T> sub_model;
    /// Parent-dimension x sub-dimension map sending sub p_γ' to parent p_γ.
    LinearMap<T> embedding;
    /// Sorted D_i, one per axis.
    std::vector<std::vector<std::size_t>> subsets;

    /// Parent index for a sub-model index γ'.
    MultiIndex parent_index(const MultiIndex& sub) const;
};

template <Field T>
MultiIndex SubspaceProduct<T>::parent_index(const MultiIndex& sub) const {
    require_contains(sub_model.shape(), sub);
    std::vector<std::size_t> g(sub.arity());
    for (std::size_t i = 0; i < g.size(); ++i)
        g[i] = subsets[i][sub[i] - 1];
    return MultiIndex(std::move(g));
}

/// Restriction to W_i = ⟨e_{it} : t ∈ D_i⟩: the sub-model over
/// Γ(|D_1|, ..., |D_m|) and its embedding into the parent.
template <Field T>
SubspaceProduct<T> subspace_product(const TensorModel<T>& model, std::vector<std::vector<std::size_t>> subsets) {
    const Shape& shape = model.shape();
    if (subsets.size() != shape.arity())
        throw ShapeError("tensor", "need one subset per axis (" + std::to_string(shape.arity()) + "), got " +
                                       std::to_string(subsets.size()));
    std::vector<std::size_t> dims;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
        auto& d = subsets[i];
        if (d.empty())
            throw ShapeError("tensor", "subset for axis " + std::to_string(i + 1) + " is empty");
        std::sort(d.begin(), d.end());
        if (std::adjacent_find(d.begin(), d.end()) != d.end())
            throw ShapeError("tensor", "subset for axis " + std::to_string(i + 1) + " repeats an element");
        if (d.front() < 1 || d.back() > shape[i])
            throw RangeError("tensor", "subset for axis " + std::to_string(i + 1) + " leaves 1.." +
                                           std::to_string(shape[i]));
        dims.push_back(d.size());
    }
    Shape sub_shape(dims);
    DenseMatrix<T> emb(model.dim(), sub_shape.size());
    SubspaceProduct<T> out{TensorModel<T>(sub_shape), LinearMap<T>(DenseMatrix<T>()), std::move(subsets)};
    for (IndexCounter c(sub_shape); !c.done(); c.next())
        emb(offset(shape, out.parent_index(c.current())), c.position()) = one<T>();
    out.embedding = LinearMap<T>(std::move(emb));
    return out;
}

/// Pairing of a tensor with a scalar-valued multilinear φ in the dual model:
/// Σ_γ t_γ φ(e-tuple γ). For t = x_1⊗...⊗x_m this is φ(x_1, ..., x_m).
template <Field T>
T dual_eval(const Tensor<T>& t, const MultilinearMap<T>& phi) {
    if (!(t.shape == phi.shape()))
        throw ShapeError("tensor", "tensor over Γ" + to_string(t.shape) + " paired with φ over Γ" +
                                       to_string(phi.shape()));
    if (phi.target_dim() != 1)
        throw ShapeError("tensor", "dual pairing needs a scalar-valued φ");
    T acc = zero<T>();
    for (std::size_t k = 0; k < t.coeffs.size(); ++k)
        acc += t.coeffs[k] * phi.value_at(k)[0];
    return acc;
}

template <Field T>
T dual_eval(const TensorModel<T>& model, const Tensor<T>& t, const MultilinearMap<T>& phi) {
    if (!(t.shape == model.shape()))
        throw ShapeError("tensor", "tensor does not belong to the model");
    return dual_eval(t, phi);
}

/// Γ(n_1..n_m) ≅ Γ(n_1..n_p) x Γ(n_{p+1}..n_m) via concatenation.
class Regrouping {
public:
    Regrouping(const Shape& shape, std::size_t p);

    const Shape& whole() const { return whole_; }
    const Shape& left() const { return left_; }
    const Shape& right() const { return right_; }

    std::pair<MultiIndex, MultiIndex> split(const MultiIndex& g) const;
    MultiIndex join(const MultiIndex& a, const MultiIndex& b) const;

    /// Coefficients of t viewed in the two-factor product over
    /// Γ(|Γ_left|, |Γ_right|): entry (rank a, rank b) = t(concat(a, b)).
    template <Field T>
    Tensor<T> group(const Tensor<T>& t) const;
    template <Field T>
    Tensor<T> ungroup(const Tensor<T>& t) const;

private:
    Shape whole_, left_, right_;
};

template <Field T>
Tensor<T> Regrouping::group(const Tensor<T>& t) const {
    if (!(t.shape == whole_))
        throw ShapeError("tensor", "tensor does not live on Γ" + to_string(whole_));
    Shape grouped{left_.size(), right_.size()};
    std::vector<T> c(grouped.size(), zero<T>());
    for (IndexCounter it(whole_); !it.done(); it.next()) {
        auto [a, b] = split(it.current());
        c[offset(grouped, MultiIndex{rank(left_, a), rank(right_, b)})] = t.coeffs[it.position()];
    }
    return {grouped, std::move(c)};
}

template <Field T>
Tensor<T> Regrouping::ungroup(const Tensor<T>& t) const {
    Shape grouped{left_.size(), right_.size()};
    if (!(t.shape == grouped))
        throw ShapeError("tensor", "tensor does not live on Γ" + to_string(grouped));
    std::vector<T> c(whole_.size(), zero<T>());
    for (IndexCounter it(grouped); !it.done(); it.next()) {
        MultiIndex g = join(unrank(left_, it.current()[0]), unrank(right_, it.current()[1]));
        c[offset(whole_, g)] = t.coeffs[it.position()];
    }
    return {whole_, std::move(c)};
}

inline Regrouping regroup(const Shape& shape, std::size_t p) { return Regrouping(shape, p); }

} // namespace kronlab
