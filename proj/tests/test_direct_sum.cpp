#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "kronlab/direct_sum.hpp"
#include "kronlab/oracle.hpp"

using namespace kronlab;
using Q = Rational;
using P = OrderedSetPartition;

TEST(Decompose, FourSummandsOfSixteen) {
    auto d = decompose(build_model<Q>(Shape{2, 4, 2, 4}), {P::discrete(2), P::unit(4), P::discrete(2), P::unit(4)});
    ASSERT_EQ(d.summands().size(), 4u);
    std::size_t total = 0;
    for (const auto& s : d.summands()) {
        EXPECT_EQ(s.dim(), 16u);
        total += s.dim();
    }
    EXPECT_EQ(total, 64u);
    EXPECT_EQ(d.summands()[1].alpha, (MultiIndex{1, 1, 2, 1}));
}

TEST(Decompose, Validation) {
    auto m = build_model<Q>(Shape{2, 3});
    EXPECT_THROW(decompose(m, {P::unit(2)}), PartitionError);
    EXPECT_THROW(decompose(m, {P::unit(2), P::unit(2)}), PartitionError);
}

TEST(Decompose, ProjectAndEmbed) {
    auto d = decompose(build_model<Q>(Shape{3, 4}), {P(3, {{1, 3}, {2}}), P(4, {{2, 4}, {1, 3}})});
    std::vector<Q> c(12);
    for (std::size_t k = 0; k < 12; ++k)
        c[k] = Q(static_cast<long>(k + 1));
    auto t = make_tensor<Q>(Shape{3, 4}, c);
    auto p = d.project(t, MultiIndex{2, 1});
    // D_(2,1) = {(2,2),(2,4)} at flat positions 5 and 7.
    EXPECT_EQ(p.coeffs, (std::vector<Q>{6, 8}));
    auto e = d.embed(MultiIndex{2, 1}, p);
    EXPECT_EQ(e.at(MultiIndex{2, 4}), Q(8));
    EXPECT_EQ(e.at(MultiIndex{1, 1}), Q(0));
    EXPECT_THROW(d.project(make_tensor<Q>(Shape{4, 3}, c), MultiIndex{1, 1}), ShapeError);
    EXPECT_THROW(d.embed(MultiIndex{1, 1}, p), ShapeError);
}

TEST(Decompose, Reassembly) { EXPECT_TRUE(oracle::run_suite("direct_sum.reassembly", 1).ok()); }

TEST(Decompose, PureTensorsStayInTheirBlock) { EXPECT_TRUE(oracle::run_suite("direct_sum.pure_projection", 2).ok()); }

TEST(BlockLabels, RowsColsLexTable) {
    std::ifstream in(KRONLAB_GOLDEN_DIR "/rwsclmslex.txt");
    ASSERT_TRUE(in);
    std::stringstream want;
    want << in.rdbuf();
    EXPECT_EQ(rows_cols_lex_example().render(), want.str());
}

TEST(BlockLabels, LabelNumbering) {
    auto m = rows_cols_lex_example();
    EXPECT_EQ(m.label_count(), 4u);
    EXPECT_EQ(m.label(MultiIndex{2, 1, 1, 1}, MultiIndex{1, 1, 2, 1}), 3u);
    EXPECT_EQ(BlockLabelMatrix::label_text(0), "a");
    EXPECT_EQ(BlockLabelMatrix::label_text(26), "A");
    EXPECT_EQ(BlockLabelMatrix::label_text(52), "#52");
    EXPECT_THROW(m.label(MultiIndex{3, 1, 1, 1}, MultiIndex{1, 1, 1, 1}), RangeError);
}

TEST(BlockLabels, SupportStaysInFirstRegion) { EXPECT_TRUE(oracle::run_suite("direct_sum.support", 3).ok()); }

TEST(BlockLabels, Validation) {
    EXPECT_THROW(block_label_matrix(Shape{2}, Shape{2}, {P::unit(3)}, {P::unit(2)}), PartitionError);
    EXPECT_THROW(block_label_matrix(Shape{2}, Shape{2}, {P::unit(2)}, {}), PartitionError);
}

TEST(BlockLabels, WideIndicesAreCommaSeparated) {
    EXPECT_EQ(index_label(MultiIndex{1, 2}), "12");
    EXPECT_EQ(index_label(MultiIndex{10, 2}), "10,2");
}
