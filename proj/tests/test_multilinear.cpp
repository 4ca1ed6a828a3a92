#include <gtest/gtest.h>

#include "kronlab/multilinear.hpp"
#include "kronlab/oracle.hpp"

using namespace kronlab;
using Q = Rational;

namespace {

// γ ↦ the 2x3 matrix unit at `cell`, stored row-major.
std::vector<Q> matrix_unit(std::size_t r, std::size_t c) {
    std::vector<Q> v(6, Q(0));
    v[(r - 1) * 3 + (c - 1)] = 1;
    return v;
}

MultilinearMap<Q> nu_b1() {
    return from_rule<Q>(Shape{2, 3}, 6, [](const MultiIndex& g) { return matrix_unit(g[0], g[1]); });
}

// Same basis with the images of (1,3) and (2,1) exchanged.
MultilinearMap<Q> nu_b2() {
    return from_values<Q>(Shape{2, 3}, 6,
                          {matrix_unit(1, 1), matrix_unit(1, 2), matrix_unit(2, 1), matrix_unit(1, 3),
                           matrix_unit(2, 2), matrix_unit(2, 3)});
}

} // namespace

TEST(FromValues, RequiresOneValuePerIndex) {
    EXPECT_THROW(from_values<Q>(Shape{2, 3}, 6, {matrix_unit(1, 1)}), ShapeError);
    EXPECT_THROW(from_values<Q>(Shape{1, 1}, 6, {std::vector<Q>(5)}), ShapeError);
    EXPECT_THROW(MultilinearMap<Q>(Shape{2}, 0, {}), ShapeError);
}

TEST(Evaluate, RowLayoutOfMatrixUnitBasis) {
    std::vector<Q> x1{2, 3}, x2{5, 7, 11};
    auto v = evaluate(nu_b1(), std::vector<std::vector<Q>>{x1, x2});
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            Q want = x1[i] * x2[j];
            EXPECT_EQ(v[i * 3 + j], want);
        }
}

TEST(Evaluate, PermutedBasisBreaksTheRowPattern) {
    std::vector<Q> x1{2, 3}, x2{5, 7, 11};
    auto v = evaluate(nu_b2(), std::vector<std::vector<Q>>{x1, x2});
    // Entry (1,3) now carries c12·c21 and entry (2,1) carries c11·c23.
    EXPECT_EQ(v[2], Q(15));
    EXPECT_EQ(v[3], Q(22));
    EXPECT_NE(v, evaluate(nu_b1(), std::vector<std::vector<Q>>{x1, x2}));
}

TEST(Evaluate, ArgumentChecks) {
    auto f = nu_b1();
    EXPECT_THROW(evaluate(f, std::vector<std::vector<Q>>{{1, 2}}), ShapeError);
    EXPECT_THROW(evaluate(f, std::vector<std::vector<Q>>{{1, 2}, {1, 2}}), ShapeError);
}

TEST(Evaluate, AgreesWithDirectSummation) {
    EXPECT_TRUE(oracle::run_suite("multilinear.evaluate", 2).ok());
}

TEST(Evaluate, LinearInEachSlot) {
    oracle::Rng rng(17);
    auto f = from_values<Q>(Shape{2, 3, 2}, 2,
                            [&] {
                                std::vector<std::vector<Q>> t;
                                for (int k = 0; k < 12; ++k)
                                    t.push_back(oracle::random_vector<Q>(rng, 2));
                                return t;
                            }());
    for (std::size_t slot = 0; slot < 3; ++slot) {
        std::vector<std::vector<Q>> xs{oracle::random_vector<Q>(rng, 2), oracle::random_vector<Q>(rng, 3),
                                       oracle::random_vector<Q>(rng, 2)};
        auto ys = xs;
        ys[slot] = oracle::random_vector<Q>(rng, xs[slot].size());
        Q r = oracle::random_rational(rng), s = oracle::random_rational(rng);
        auto zs = xs;
        for (std::size_t k = 0; k < zs[slot].size(); ++k)
            zs[slot][k] = r * xs[slot][k] + s * ys[slot][k];
        auto fx = evaluate(f, xs), fy = evaluate(f, ys), fz = evaluate(f, zs);
        for (std::size_t j = 0; j < 2; ++j) {
            Q want = r * fx[j] + s * fy[j];
            EXPECT_EQ(fz[j], want);
        }
    }
}

TEST(BasisFunctional, ProductOfSelectedCoordinates) {
    EXPECT_TRUE(oracle::run_suite("multilinear.basis_functional", 4).ok());
    auto phi = basis_functional<Q>(Shape{2, 2}, MultiIndex{2, 1});
    EXPECT_EQ(evaluate(phi, std::vector<std::vector<Q>>{{1, 2}, {3, 4}})[0], Q(6));
}

TEST(ExpandInBasis, ReconstructsTheMap) {
    EXPECT_TRUE(oracle::run_suite("multilinear.reconstruction", 5).ok());
}

TEST(Component, FirstComponentOfMatrixUnitMap) {
    auto c1 = component(nu_b1(), 1);
    EXPECT_EQ(c1.target_dim(), 1u);
    for (std::size_t k = 0; k < 6; ++k)
        EXPECT_EQ(c1.value_at(k)[0], Q(k == 0 ? 1 : 0));
    EXPECT_THROW(component(nu_b1(), 7), RangeError);
    EXPECT_THROW(component(nu_b1(), 0), RangeError);
    EXPECT_TRUE(oracle::run_suite("multilinear.component_recombination", 6).ok());
}

TEST(ProductSumInterchange, SmallTable) {
    auto rep = product_sum_interchange<Q>({{1, 2}, {3, 4}});
    EXPECT_EQ(rep.product_of_sums, Q(21));
    EXPECT_EQ(rep.sum_of_products, Q(21));
    EXPECT_TRUE(rep.holds);
    EXPECT_TRUE(oracle::run_suite("multilinear.product_sum_interchange", 8).ok());
}
