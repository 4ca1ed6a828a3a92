#pragma once

// Direct-sum decompositions ⊗V_i = ⊕_α P_α induced by ordered partitions
// D_i = {D_i1, ..., D_ir_i} of each axis. P_α is the subspace tensor product
// of W_{iα(i)} = ⟨e_it : t ∈ D_{iα(i)}⟩, with basis {p_γ : γ ∈ D_α}.

#include <cstddef>
#include <string>
#include <vector>

#include "kronlab/index_space.hpp"
#include "kronlab/scalars.hpp"
#include "kronlab/tensor.hpp"

namespace kronlab {

template <Field T>
struct Summand {
    MultiIndex alpha;
    SubspaceProduct<T> product;

    std::size_t dim() const { return product.sub_model.dim(); }
};

template <Field T>
class Decomposition {
public:
    Decomposition(TensorModel<T> parent, std::vector<OrderedSetPartition> parts);

    const TensorModel<T>& parent() const { return parent_; }
    const BlockPartition& blocks() const { return blocks_; }
    /// Summands in lex order of α.
    const std::vector<Summand<T>>& summands() const { return summands_; }
    const Summand<T>& summand(const MultiIndex& alpha) const {
        return summands_[offset(blocks_.block_shape(), alpha)];
    }

    /// Coordinates of t's component in P_α, in the sub-model's basis.
    Tensor<T> project(const Tensor<T>& t, const MultiIndex& alpha) const;
    /// Image of a sub-model tensor in the parent.
    Tensor<T> embed(const MultiIndex& alpha, const Tensor<T>& sub) const;
    /// Σ_α embed(project(t, α)).
    Tensor<T> reassemble(const Tensor<T>& t) const;

private:
    TensorModel<T> parent_;
    BlockPartition blocks_;
    std::vector<Summand<T>> summands_;
};

template <Field T>
Decomposition<T>::Decomposition(TensorModel<T> parent, std::vector<OrderedSetPartition> parts)
    : parent_(std::move(parent)), blocks_(induced_partition(std::move(parts))) {
    if (!(blocks_.source() == parent_.shape()))
        throw PartitionError("direct_sum", "partitions of Γ" + to_string(blocks_.source()) +
                                               " do not match the model over Γ" + to_string(parent_.shape()));
    for (IndexCounter c(blocks_.block_shape()); !c.done(); c.next()) {
        MultiIndex alpha = c.current();
        std::vector<std::vector<std::size_t>> subsets;
        for (std::size_t i = 0; i < alpha.arity(); ++i)
            subsets.push_back(blocks_.parts()[i].block(alpha[i]));
        summands_.push_back({alpha, subspace_product(parent_, std::move(subsets))});
    }
}

template <Field T>
Tensor<T> Decomposition<T>::project(const Tensor<T>& t, const MultiIndex& alpha) const {
    if (!(t.shape == parent_.shape()))
        throw ShapeError("direct_sum", "tensor over Γ" + to_string(t.shape) + " projected in a decomposition of Γ" +
                                           to_string(parent_.shape()));
    require_contains(blocks_.block_shape(), alpha);
    const auto& sp = summand(alpha).product;
    const Shape& sub = sp.sub_model.shape();
    std::vector<T> c;
    c.reserve(sub.size());
    for (IndexCounter it(sub); !it.done(); it.next())
        c.push_back(t.at(sp.parent_index(it.current())));
    return {sub, std::move(c)};
}

template <Field T>
Tensor<T> Decomposition<T>::embed(const MultiIndex& alpha, const Tensor<T>& sub) const {
    require_contains(blocks_.block_shape(), alpha);
    const auto& sp = summand(alpha).product;
    if (!(sub.shape == sp.sub_model.shape()))
        throw ShapeError("direct_sum", "tensor does not belong to summand " + to_string(alpha));
    return {parent_.shape(), sp.embedding.apply(sub.coeffs)};
}

template <Field T>
Tensor<T> Decomposition<T>::reassemble(const Tensor<T>& t) const {
    std::vector<T> acc(parent_.dim(), zero<T>());
    for (const auto& s : summands_) {
        auto part = embed(s.alpha, project(t, s.alpha));
        for (std::size_t k = 0; k < acc.size(); ++k)
            acc[k] += part.coeffs[k];
    }
    return {parent_.shape(), std::move(acc)};
}

template <Field T>
Decomposition<T> decompose(const TensorModel<T>& model, std::vector<OrderedSetPartition> parts) {
    if (parts.size() != model.shape().arity())
        throw PartitionError("direct_sum", "need " + std::to_string(model.shape().arity()) + " partitions, got " +
                                               std::to_string(parts.size()));
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].ground() != model.shape()[i])
            throw PartitionError("direct_sum", "partition " + std::to_string(i + 1) + " is of 1.." +
                                                   std::to_string(parts[i].ground()) + ", axis has " +
                                                   std::to_string(model.shape()[i]) + " elements");
    return Decomposition<T>(model, std::move(parts));
}

// ---------------------------------------------------------------------------
// Block labels of a Kronecker matrix.

/// Labels each (μ, κ) of a Γ_r x Γ_c matrix with its block pair
/// (block_of(μ), block_of(κ)). Pairs are numbered in lex order of (α, β) and
/// rendered as a, b, c, ...
class BlockLabelMatrix {
public:
    BlockLabelMatrix(std::vector<OrderedSetPartition> row_parts, std::vector<OrderedSetPartition> col_parts);

    const Shape& row_shape() const { return rows_.source(); }
    const Shape& col_shape() const { return cols_.source(); }
    const BlockPartition& row_blocks() const { return rows_; }
    const BlockPartition& col_blocks() const { return cols_; }

    /// 0-based label number of the block pair containing (μ, κ).
    std::size_t label(const MultiIndex& mu, const MultiIndex& kappa) const;
    /// Label number for the block pair (α, β).
    std::size_t pair_label(const MultiIndex& alpha, const MultiIndex& beta) const;
    std::size_t label_count() const { return rows_.block_shape().size() * cols_.block_shape().size(); }

    static std::string label_text(std::size_t label);

    /// Table with a header of column labels and one row per μ, e.g.
    ///
    ///          1111 1112 ...
    ///     1111    a    a ...
    std::string render() const;

private:
    BlockPartition rows_;
    BlockPartition cols_;
};

BlockLabelMatrix block_label_matrix(const Shape& row_shape, const Shape& col_shape,
                                    std::vector<OrderedSetPartition> row_parts,
                                    std::vector<OrderedSetPartition> col_parts);

/// Compact text of a multi-index: digits run together ("1212") when every
/// entry is a single digit, comma-separated otherwise.
std::string index_label(const MultiIndex& g);

/// Configuration of the four-factor example with factors of sizes 2x1, 2x2,
/// 1x2, 2x2: rows split by the first factor, columns by the third.
BlockLabelMatrix rows_cols_lex_example();

} // namespace kronlab
