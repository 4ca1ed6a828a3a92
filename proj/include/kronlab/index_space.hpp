#pragma once

// Multi-index spaces Γ(n1,...,nm) in lexicographic order.
//
// Indices are 1-based at this interface. `offset()` gives the 0-based
// position used for flat storage; it is the only place where the two
// conventions meet.

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "kronlab/error.hpp"

namespace kronlab {

class Shape {
public:
    Shape() = default;
    explicit Shape(std::vector<std::size_t> dims);
    Shape(std::initializer_list<std::size_t> dims) : Shape(std::vector<std::size_t>(dims)) {}

    std::size_t arity() const { return dims_.size(); }
    std::size_t operator[](std::size_t axis) const { return dims_[axis]; }
    std::span<const std::size_t> dims() const { return dims_; }

    /// Number of multi-indices, the product of the dims.
    std::size_t size() const { return size_; }

    friend bool operator==(const Shape&, const Shape&) = default;

private:
    std::vector<std::size_t> dims_;
    std::size_t size_ = 0;
};

class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<std::size_t> entries) : entries_(std::move(entries)) {}
    MultiIndex(std::initializer_list<std::size_t> entries) : entries_(entries) {}

    std::size_t arity() const { return entries_.size(); }
    /// 1-based entry γ(i+1) for 0-based axis i.
    std::size_t operator[](std::size_t axis) const { return entries_[axis]; }
    std::span<const std::size_t> entries() const { return entries_; }

    friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

private:
    std::vector<std::size_t> entries_;
};

std::string to_string(const MultiIndex& g);
std::string to_string(const Shape& s);
std::ostream& operator<<(std::ostream& os, const MultiIndex& g);
std::ostream& operator<<(std::ostream& os, const Shape& s);

/// True iff g has the shape's arity and 1 <= g(i) <= n_i.
bool contains(const Shape& shape, const MultiIndex& g);
void require_contains(const Shape& shape, const MultiIndex& g);

/// Lexicographic comparison. Throws ShapeError if the arities differ.
std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b);
/// Same, additionally checking that both indices lie in `shape`.
std::strong_ordering lex_compare(const Shape& shape, const MultiIndex& a, const MultiIndex& b);

/// 1-based position of g in the lex listing of Γ(shape).
std::size_t rank(const Shape& shape, const MultiIndex& g);
/// 0-based offset, rank - 1.
std::size_t offset(const Shape& shape, const MultiIndex& g);
/// Inverse of rank; k in [1, |Γ|].
MultiIndex unrank(const Shape& shape, std::size_t k);

std::vector<MultiIndex> enumerate(const Shape& shape);

MultiIndex concat(const MultiIndex& a, const MultiIndex& b);
Shape concat(const Shape& a, const Shape& b);

/// Odometer over Γ(shape) in lex order without allocating a MultiIndex per
/// step. `digits()` holds 0-based coordinates.
class IndexCounter {
public:
    explicit IndexCounter(const Shape& shape);

    bool done() const { return done_; }
    std::span<const std::size_t> digits() const { return digits_; }
    /// 0-based position of the current index.
    std::size_t position() const { return position_; }
    MultiIndex current() const;
    void next();

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> digits_;
    std::size_t position_ = 0;
    bool done_ = false;
};

// ---------------------------------------------------------------------------
// Partitions of each axis and the partition of Γ they induce.

/// Ordered partition {D_1,...,D_r} of {1,...,n}. Each block is stored sorted;
/// block order is as given.
class OrderedSetPartition {
public:
    OrderedSetPartition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks);

    static OrderedSetPartition unit(std::size_t n);
    static OrderedSetPartition discrete(std::size_t n);

    std::size_t ground() const { return ground_; }
    std::size_t block_count() const { return blocks_.size(); }
    /// Block j, 1-based.
    const std::vector<std::size_t>& block(std::size_t j) const { return blocks_.at(j - 1); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    /// 1-based index of the block containing x.
    std::size_t block_of(std::size_t x) const;

    friend bool operator==(const OrderedSetPartition& a, const OrderedSetPartition& b) {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }

private:
    std::size_t ground_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> owner_;
};

/// The partition D_Γ = { ×_i D_{iα(i)} : α ∈ Γ(r_1,...,r_m) } of Γ(n_1,...,n_m).
class BlockPartition {
public:
    explicit BlockPartition(std::vector<OrderedSetPartition> parts);

    const Shape& source() const { return source_; }
    /// Γ(r_1,...,r_m), the index set of the blocks.
    const Shape& block_shape() const { return block_shape_; }
    const std::vector<OrderedSetPartition>& parts() const { return parts_; }

    /// Members of D_α in lex order.
    std::vector<MultiIndex> block(const MultiIndex& alpha) const;
    /// |D_α| = ∏ |D_{iα(i)}|.
    std::size_t block_size(const MultiIndex& alpha) const;
    /// Shape (|D_{1α(1)}|,...,|D_{mα(m)}|) of the block as a sub-grid.
    Shape block_grid(const MultiIndex& alpha) const;
    /// Unique α with g ∈ D_α.
    MultiIndex block_of(const MultiIndex& g) const;

private:
    std::vector<OrderedSetPartition> parts_;
    Shape source_;
    Shape block_shape_;
};

BlockPartition induced_partition(std::vector<OrderedSetPartition> parts);
MultiIndex block_of(const MultiIndex& g, std::span<const OrderedSetPartition> parts);

} // namespace kronlab
