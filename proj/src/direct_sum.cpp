#include "kronlab/direct_sum.hpp"

#include <algorithm>
#include <sstream>

namespace kronlab {

BlockLabelMatrix::BlockLabelMatrix(std::vector<OrderedSetPartition> row_parts,
                                   std::vector<OrderedSetPartition> col_parts)
    : rows_(induced_partition(std::move(row_parts))), cols_(induced_partition(std::move(col_parts))) {}

std::size_t BlockLabelMatrix::pair_label(const MultiIndex& alpha, const MultiIndex& beta) const {
    return offset(rows_.block_shape(), alpha) * cols_.block_shape().size() + offset(cols_.block_shape(), beta);
}

std::size_t BlockLabelMatrix::label(const MultiIndex& mu, const MultiIndex& kappa) const {
    require_contains(rows_.source(), mu);
    require_contains(cols_.source(), kappa);
    return pair_label(rows_.block_of(mu), cols_.block_of(kappa));
}

std::string BlockLabelMatrix::label_text(std::size_t label) {
    if (label < 26)
        return std::string(1, static_cast<char>('a' + label));
    if (label < 52)
        return std::string(1, static_cast<char>('A' + (label - 26)));
    return "#" + std::to_string(label);
}

std::string index_label(const MultiIndex& g) {
    auto e = g.entries();
    bool compact = std::all_of(e.begin(), e.end(), [](std::size_t x) { return x < 10; });
    std::string out;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (!compact && i)
            out += ',';
        out += std::to_string(e[i]);
    }
    return out;
}

std::string BlockLabelMatrix::render() const {
    auto row_ids = enumerate(rows_.source());
    auto col_ids = enumerate(cols_.source());
    std::vector<std::string> rl, cl;
    std::size_t rw = 0, cw = 0;
    for (const auto& mu : row_ids) {
        rl.push_back(index_label(mu));
        rw = std::max(rw, rl.back().size());
    }
    for (const auto& kappa : col_ids) {
        cl.push_back(index_label(kappa));
        cw = std::max(cw, cl.back().size());
    }
    for (std::size_t l = 0; l < label_count(); ++l)
        cw = std::max(cw, label_text(l).size());

    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - s.size(), ' ') + s; };
    std::ostringstream os;
    os << std::string(rw, ' ');
    for (const auto& c : cl)
        os << ' ' << pad(c, cw);
    os << '\n';
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
        os << pad(rl[r], rw);
        for (const auto& kappa : col_ids)
            os << ' ' << pad(label_text(label(row_ids[r], kappa)), cw);
        os << '\n';
    }
    return os.str();
}

BlockLabelMatrix block_label_matrix(const Shape& row_shape, const Shape& col_shape,
                                    std::vector<OrderedSetPartition> row_parts,
                                    std::vector<OrderedSetPartition> col_parts) {
    auto check = [](const Shape& s, const std::vector<OrderedSetPartition>& parts, const char* what) {
        if (parts.size() != s.arity())
            throw PartitionError("direct_sum", std::string(what) + ": need " + std::to_string(s.arity()) +
                                                   " partitions, got " + std::to_string(parts.size()));
        for (std::size_t i = 0; i < parts.size(); ++i)
            if (parts[i].ground() != s[i])
                throw PartitionError("direct_sum", std::string(what) + " partition " + std::to_string(i + 1) +
                                                       " is of 1.." + std::to_string(parts[i].ground()) +
                                                       ", axis has " + std::to_string(s[i]) + " elements");
    };
    check(row_shape, row_parts, "row");
    check(col_shape, col_parts, "column");
    return BlockLabelMatrix(std::move(row_parts), std::move(col_parts));
}

BlockLabelMatrix rows_cols_lex_example() {
    // Factors M_{2,1}, M_{2,2}, M_{1,2}, M_{2,2}. The splits of V_1 and V_3
    // into ⟨E_11⟩ ⊕ ⟨E_21⟩ and ⟨E_11⟩ ⊕ ⟨E_12⟩ only touch rows of factor 1
    // and columns of factor 3.
    using P = OrderedSetPartition;
    Shape rows{2, 2, 1, 2};
    Shape cols{1, 2, 2, 2};
    return block_label_matrix(rows, cols, {P::discrete(2), P::unit(2), P::unit(1), P::unit(2)},
                              {P::unit(1), P::unit(2), P::discrete(2), P::unit(2)});
}

} // namespace kronlab
