#include <gtest/gtest.h>

#include "kronlab/index_space.hpp"
#include "kronlab/oracle.hpp"

using namespace kronlab;

TEST(Shape, RejectsEmptyAxes) {
    EXPECT_THROW(Shape({2, 0}), ShapeError);
    EXPECT_THROW(Shape(std::vector<std::size_t>{}), ShapeError);
    EXPECT_EQ(Shape({3, 4}).size(), 12u);
}

TEST(LexOrder, ListingOfThreeByFour) {
    auto all = enumerate(Shape{3, 4});
    ASSERT_EQ(all.size(), 12u);
    std::vector<MultiIndex> head{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}};
    for (std::size_t k = 0; k < head.size(); ++k)
        EXPECT_EQ(all[k], head[k]);
}

TEST(LexOrder, TwoByTwoMatchesBasisPairOrder) {
    EXPECT_EQ(enumerate(Shape{2, 2}), (std::vector<MultiIndex>{{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST(LexOrder, Compare) {
    EXPECT_TRUE(lex_compare(MultiIndex{1, 2}, MultiIndex{2, 1}) < 0);
    EXPECT_TRUE(lex_compare(MultiIndex{2, 1}, MultiIndex{2, 1}) == 0);
    EXPECT_TRUE(lex_compare(MultiIndex{2, 2}, MultiIndex{2, 1}) > 0);
    EXPECT_THROW(lex_compare(MultiIndex{1}, MultiIndex{1, 1}), ShapeError);
    EXPECT_THROW(lex_compare(Shape{2, 2}, MultiIndex{1, 3}, MultiIndex{1, 1}), RangeError);
}

TEST(Rank, AgainstEnumeration) {
    EXPECT_EQ(rank(Shape{2, 3}, MultiIndex{2, 1}), 4u);
    EXPECT_EQ(unrank(Shape{3, 4}, 12), (MultiIndex{3, 4}));
    EXPECT_THROW(unrank(Shape{3, 4}, 13), RangeError);
    EXPECT_THROW(unrank(Shape{3, 4}, 0), RangeError);
    EXPECT_THROW(rank(Shape{3, 4}, MultiIndex{4, 1}), RangeError);
    EXPECT_TRUE(oracle::run_suite("index_space.rank_unrank", 3).ok());
}

TEST(Rank, RoundTripOnRandomShapes) {
    oracle::Rng rng(5);
    std::uniform_int_distribution<std::size_t> dim(1, 5), arity(1, 5);
    for (int t = 0; t < 50; ++t) {
        std::vector<std::size_t> d(arity(rng));
        for (auto& x : d)
            x = dim(rng);
        Shape s(d);
        std::uniform_int_distribution<std::size_t> k(1, s.size());
        std::size_t r = k(rng);
        EXPECT_EQ(rank(s, unrank(s, r)), r);
    }
}

TEST(Counter, MatchesEnumerate) {
    Shape s{2, 1, 3};
    auto all = enumerate(s);
    std::size_t k = 0;
    for (IndexCounter c(s); !c.done(); c.next(), ++k) {
        EXPECT_EQ(c.current(), all[k]);
        EXPECT_EQ(c.position(), k);
    }
    EXPECT_EQ(k, all.size());
}

TEST(Concat, JoinsIndicesAndShapes) {
    EXPECT_EQ(concat(MultiIndex{1, 2}, MultiIndex{3}), (MultiIndex{1, 2, 3}));
    EXPECT_EQ(concat(Shape{2, 2}, Shape{3}), (Shape{2, 2, 3}));
    EXPECT_TRUE(oracle::run_suite("index_space.concat_monotone", 0).ok());
}

TEST(OrderedPartition, Validation) {
    EXPECT_THROW(OrderedSetPartition(3, {{1, 2}}), PartitionError);
    EXPECT_THROW(OrderedSetPartition(3, {{1, 2}, {2, 3}}), PartitionError);
    EXPECT_THROW(OrderedSetPartition(3, {{1, 2}, {}, {3}}), PartitionError);
    EXPECT_THROW(OrderedSetPartition(3, {{1, 4}, {2, 3}}), PartitionError);
    OrderedSetPartition p(4, {{4, 2}, {3, 1}});
    EXPECT_EQ(p.block(1), (std::vector<std::size_t>{2, 4}));
    EXPECT_EQ(p.block_of(3), 2u);
}

TEST(InducedPartition, BlocksOfThreeByFour) {
    std::vector<OrderedSetPartition> parts{OrderedSetPartition(3, {{1, 3}, {2}}),
                                           OrderedSetPartition(4, {{2, 4}, {1, 3}})};
    auto bp = induced_partition(parts);
    EXPECT_EQ(bp.block_shape(), (Shape{2, 2}));
    EXPECT_EQ(bp.block(MultiIndex{1, 1}), (std::vector<MultiIndex>{{1, 2}, {1, 4}, {3, 2}, {3, 4}}));
    EXPECT_EQ(bp.block(MultiIndex{1, 2}), (std::vector<MultiIndex>{{1, 1}, {1, 3}, {3, 1}, {3, 3}}));
    EXPECT_EQ(bp.block(MultiIndex{2, 1}), (std::vector<MultiIndex>{{2, 2}, {2, 4}}));
    EXPECT_EQ(bp.block(MultiIndex{2, 2}), (std::vector<MultiIndex>{{2, 1}, {2, 3}}));
    EXPECT_EQ(block_of(MultiIndex{3, 4}, parts), (MultiIndex{1, 1}));
    EXPECT_EQ(block_of(MultiIndex{2, 1}, parts), (MultiIndex{2, 2}));
    EXPECT_EQ(bp.block_grid(MultiIndex{2, 1}), (Shape{1, 2}));
}

TEST(InducedPartition, BlocksCoverEveryIndexOnce) {
    std::vector<OrderedSetPartition> parts{OrderedSetPartition(3, {{2}, {1, 3}}),
                                           OrderedSetPartition(2, {{1, 2}}), OrderedSetPartition(4, {{4}, {1, 2}, {3}})};
    auto bp = induced_partition(parts);
    std::vector<int> seen(bp.source().size(), 0);
    for (const auto& alpha : enumerate(bp.block_shape()))
        for (const auto& g : bp.block(alpha)) {
            ++seen[offset(bp.source(), g)];
            EXPECT_EQ(bp.block_of(g), alpha);
        }
    for (int s : seen)
        EXPECT_EQ(s, 1);
}
