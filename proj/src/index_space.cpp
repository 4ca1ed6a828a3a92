#include "kronlab/index_space.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace kronlab {

Shape::Shape(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty())
        throw ShapeError("index_space", "shape needs at least one axis");
    size_ = 1;
    for (std::size_t n : dims_) {
        if (n == 0)
            throw ShapeError("index_space", "shape dimensions must be positive");
        size_ *= n;
    }
}

std::string to_string(const MultiIndex& g) {
    std::ostringstream os;
    os << g;
    return os.str();
}

std::string to_string(const Shape& s) {
    std::ostringstream os;
    os << s;
    return os.str();
}

namespace {

std::ostream& print_tuple(std::ostream& os, std::span<const std::size_t> xs) {
    os << '(';
    for (std::size_t i = 0; i < xs.size(); ++i)
        os << (i ? "," : "") << xs[i];
    return os << ')';
}

} // namespace

std::ostream& operator<<(std::ostream& os, const MultiIndex& g) { return print_tuple(os, g.entries()); }
std::ostream& operator<<(std::ostream& os, const Shape& s) { return print_tuple(os, s.dims()); }

bool contains(const Shape& shape, const MultiIndex& g) {
    if (g.arity() != shape.arity())
        return false;
    for (std::size_t i = 0; i < g.arity(); ++i)
        if (g[i] < 1 || g[i] > shape[i])
            return false;
    return true;
}

void require_contains(const Shape& shape, const MultiIndex& g) {
    if (g.arity() != shape.arity())
        throw ShapeError("index_space", "index " + to_string(g) + " has arity " + std::to_string(g.arity()) +
                                            ", shape " + to_string(shape) + " has arity " +
                                            std::to_string(shape.arity()));
    if (!contains(shape, g))
        throw RangeError("index_space", "index " + to_string(g) + " outside Γ" + to_string(shape));
}

std::strong_ordering lex_compare(const MultiIndex& a, const MultiIndex& b) {
    if (a.arity() != b.arity())
        throw ShapeError("index_space", "cannot compare " + to_string(a) + " with " + to_string(b));
    for (std::size_t i = 0; i < a.arity(); ++i) {
        if (a[i] != b[i])
            return a[i] <=> b[i];
    }
    return std::strong_ordering::equal;
}

std::strong_ordering lex_compare(const Shape& shape, const MultiIndex& a, const MultiIndex& b) {
    require_contains(shape, a);
    require_contains(shape, b);
    return lex_compare(a, b);
}

std::size_t offset(const Shape& shape, const MultiIndex& g) {
    require_contains(shape, g);
    std::size_t k = 0;
    for (std::size_t i = 0; i < g.arity(); ++i)
        k = k * shape[i] + (g[i] - 1);
    return k;
}

std::size_t rank(const Shape& shape, const MultiIndex& g) { return offset(shape, g) + 1; }

MultiIndex unrank(const Shape& shape, std::size_t k) {
    if (k < 1 || k > shape.size())
        throw RangeError("index_space", "position " + std::to_string(k) + " outside 1.." +
                                            std::to_string(shape.size()));
    std::size_t rest = k - 1;
    std::vector<std::size_t> out(shape.arity());
    for (std::size_t i = shape.arity(); i-- > 0;) {
        out[i] = rest % shape[i] + 1;
        rest /= shape[i];
    }
    return MultiIndex(std::move(out));
}

std::vector<MultiIndex> enumerate(const Shape& shape) {
    std::vector<MultiIndex> out;
    out.reserve(shape.size());
    for (IndexCounter c(shape); !c.done(); c.next())
        out.push_back(c.current());
    return out;
}

MultiIndex concat(const MultiIndex& a, const MultiIndex& b) {
    std::vector<std::size_t> e(a.entries().begin(), a.entries().end());
    e.insert(e.end(), b.entries().begin(), b.entries().end());
    return MultiIndex(std::move(e));
}

Shape concat(const Shape& a, const Shape& b) {
    std::vector<std::size_t> d(a.dims().begin(), a.dims().end());
    d.insert(d.end(), b.dims().begin(), b.dims().end());
    return Shape(std::move(d));
}

IndexCounter::IndexCounter(const Shape& shape)
    : dims_(shape.dims().begin(), shape.dims().end()), digits_(shape.arity(), 0), done_(shape.size() == 0) {}

MultiIndex IndexCounter::current() const {
    std::vector<std::size_t> e(digits_.size());
    for (std::size_t i = 0; i < e.size(); ++i)
        e[i] = digits_[i] + 1;
    return MultiIndex(std::move(e));
}

void IndexCounter::next() {
    ++position_;
    for (std::size_t i = digits_.size(); i-- > 0;) {
        if (++digits_[i] < dims_[i])
            return;
        digits_[i] = 0;
    }
    done_ = true;
}

// ---------------------------------------------------------------------------

OrderedSetPartition::OrderedSetPartition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks)
    : ground_(ground), blocks_(std::move(blocks)), owner_(ground, 0) {
    if (ground_ == 0)
        throw PartitionError("index_space", "partition ground set must be nonempty");
    for (std::size_t j = 0; j < blocks_.size(); ++j) {
        auto& blk = blocks_[j];
        if (blk.empty())
            throw PartitionError("index_space", "partition block " + std::to_string(j + 1) + " is empty");
        std::sort(blk.begin(), blk.end());
        for (std::size_t x : blk) {
            if (x < 1 || x > ground_)
                throw PartitionError("index_space", "element " + std::to_string(x) + " outside 1.." +
                                                        std::to_string(ground_));
            if (owner_[x - 1] != 0)
                throw PartitionError("index_space", "element " + std::to_string(x) + " appears in two blocks");
            owner_[x - 1] = j + 1;
        }
    }
    for (std::size_t x = 0; x < ground_; ++x)
        if (owner_[x] == 0)
            throw PartitionError("index_space", "element " + std::to_string(x + 1) + " not covered");
}

OrderedSetPartition OrderedSetPartition::unit(std::size_t n) {
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i)
        all[i] = i + 1;
    return OrderedSetPartition(n, {std::move(all)});
}

OrderedSetPartition OrderedSetPartition::discrete(std::size_t n) {
    std::vector<std::vector<std::size_t>> blocks(n);
    for (std::size_t i = 0; i < n; ++i)
        blocks[i] = {i + 1};
    return OrderedSetPartition(n, std::move(blocks));
}

std::size_t OrderedSetPartition::block_of(std::size_t x) const {
    if (x < 1 || x > ground_)
        throw RangeError("index_space", "element " + std::to_string(x) + " outside 1.." + std::to_string(ground_));
    return owner_[x - 1];
}

namespace {

Shape ground_shape(const std::vector<OrderedSetPartition>& parts) {
    std::vector<std::size_t> d;
    for (const auto& p : parts)
        d.push_back(p.ground());
    return Shape(std::move(d));
}

Shape count_shape(const std::vector<OrderedSetPartition>& parts) {
    std::vector<std::size_t> d;
    for (const auto& p : parts)
        d.push_back(p.block_count());
    return Shape(std::move(d));
}

} // namespace

BlockPartition::BlockPartition(std::vector<OrderedSetPartition> parts)
    : parts_(std::move(parts)), source_(ground_shape(parts_)), block_shape_(count_shape(parts_)) {}

Shape BlockPartition::block_grid(const MultiIndex& alpha) const {
    require_contains(block_shape_, alpha);
    std::vector<std::size_t> d(alpha.arity());
    for (std::size_t i = 0; i < alpha.arity(); ++i)
        d[i] = parts_[i].block(alpha[i]).size();
    return Shape(std::move(d));
}

std::size_t BlockPartition::block_size(const MultiIndex& alpha) const { return block_grid(alpha).size(); }

std::vector<MultiIndex> BlockPartition::block(const MultiIndex& alpha) const {
    Shape grid = block_grid(alpha);
    std::vector<MultiIndex> out;
    out.reserve(grid.size());
    // Blocks are sorted, so walking the sub-grid in lex order yields lex order in Γ.
    for (IndexCounter c(grid); !c.done(); c.next()) {
        std::vector<std::size_t> g(alpha.arity());
        for (std::size_t i = 0; i < g.size(); ++i)
            g[i] = parts_[i].block(alpha[i])[c.digits()[i]];
        out.emplace_back(std::move(g));
    }
    return out;
}

MultiIndex BlockPartition::block_of(const MultiIndex& g) const {
    return kronlab::block_of(g, parts_);
}

BlockPartition induced_partition(std::vector<OrderedSetPartition> parts) {
    if (parts.empty())
        throw PartitionError("index_space", "need one partition per axis");
    return BlockPartition(std::move(parts));
}

MultiIndex block_of(const MultiIndex& g, std::span<const OrderedSetPartition> parts) {
    if (g.arity() != parts.size())
        throw ShapeError("index_space", "index " + to_string(g) + " does not match " +
                                            std::to_string(parts.size()) + " partitions");
    std::vector<std::size_t> alpha(g.arity());
    for (std::size_t i = 0; i < g.arity(); ++i)
        alpha[i] = parts[i].block_of(g[i]);
    return MultiIndex(std::move(alpha));
}

} // namespace kronlab
