#pragma once

// Set partitions, coimages, the refinement order, and the function classes
// SNC / WNC / INJ / PER used to index bases.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kronlab/error.hpp"

namespace kronlab {

/// Unordered partition of {1,...,n}; blocks are sorted and ordered by least
/// element, so equal partitions compare equal.
class SetPartition {
public:
    SetPartition(std::size_t ground, std::vector<std::vector<std::size_t>> blocks);

    /// From a restricted-growth string a_1..a_n (a_1 = 0, a_{k+1} <= max + 1).
    static SetPartition from_rgs(const std::vector<std::size_t>& rgs);
    static SetPartition unit(std::size_t n);
    static SetPartition discrete(std::size_t n);

    std::size_t ground() const { return ground_; }
    std::size_t block_count() const { return blocks_.size(); }
    const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }
    /// 0-based block number of x.
    std::size_t block_of(std::size_t x) const { return owner_.at(x - 1); }

    /// One element per block (the least one).
    std::vector<std::size_t> canonical_sdr() const;

    std::string to_string() const;

    friend bool operator==(const SetPartition& a, const SetPartition& b) {
        return a.ground_ == b.ground_ && a.blocks_ == b.blocks_;
    }
    friend bool operator<(const SetPartition& a, const SetPartition& b) { return a.blocks_ < b.blocks_; }

private:
    std::size_t ground_;
    std::vector<std::vector<std::size_t>> blocks_;
    std::vector<std::size_t> owner_;
};

/// f: {1..n} -> {1..p} in one-line notation.
class FiniteFunction {
public:
    FiniteFunction(std::size_t range, std::vector<std::size_t> values);

    std::size_t domain() const { return values_.size(); }
    std::size_t range() const { return range_; }
    std::size_t operator()(std::size_t x) const { return values_.at(x - 1); }
    const std::vector<std::size_t>& values() const { return values_; }

    friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
    std::size_t range_;
    std::vector<std::size_t> values_;
};

/// All partitions of {1..n}, or those with exactly k blocks, in
/// restricted-growth-string order.
std::vector<SetPartition> enumerate_partitions(std::size_t n, std::optional<std::size_t> k = std::nullopt);

/// S(n,k) and B(n) from the recurrences (independent of enumeration).
std::uint64_t stirling2(std::size_t n, std::size_t k);
std::uint64_t bell(std::size_t n);

/// Nonempty fibres f^{-1}(y).
SetPartition coimage(const FiniteFunction& f);

/// Every block of `finer` lies inside a block of `coarser`.
bool refines(const SetPartition& finer, const SetPartition& coarser);

struct HasseDiagram {
    std::vector<SetPartition> vertices;
    /// (x, y) with x covered by y, as vertex numbers.
    std::vector<std::pair<std::size_t, std::size_t>> covers;

    /// DOT digraph with an edge y -> x for each covering x ≺_c y.
    std::string to_dot() const;
};

inline constexpr std::size_t max_hasse_ground = 6;

/// Covering relation of the refinement order on Π(n), n <= 6.
HasseDiagram covering_edges(std::size_t n);

enum class FunctionClass { snc, wnc, inj, per };

FunctionClass parse_function_class(const std::string& name);
std::string function_class_name(FunctionClass cls);

/// Closed forms C(p,n), C(p+n-1,n), (p)_n, n!. PER ignores p unless p != n,
/// in which case the class is empty.
std::uint64_t count_functions(FunctionClass cls, std::size_t n, std::size_t p);
/// Members in lex order of their one-line notation.
std::vector<FiniteFunction> enumerate_functions(FunctionClass cls, std::size_t n, std::size_t p);

struct PositionRank {
    std::size_t position;   // |{t ∈ S : t <= x}|
    std::size_t rank;       // |{t ∈ S : t < x}|
};

/// Position and rank of x relative to S ⊆ Λ = {1..lambda}.
PositionRank position_rank(std::size_t lambda, const std::vector<std::size_t>& subset, std::size_t x);

} // namespace kronlab
