#include <gtest/gtest.h>

#include "kronlab/oracle.hpp"
#include "kronlab/tensor.hpp"

using namespace kronlab;
using Q = Rational;

namespace {

// ν(e_1i, e_2j) = e_1i e_2j for column e_1i and row e_2j, as row-major 2x2.
NuTable<Q> outer_product_table() {
    return NuTable<Q>(Shape{2, 2}, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
}

} // namespace

TEST(Model, DimensionIsProductOfDims) {
    auto m = build_model<Q>(Shape{2, 2});
    EXPECT_EQ(m.dim(), 4u);
    EXPECT_TRUE(m.is_coordinate_model());
    EXPECT_EQ(m.label(MultiIndex{2, 1}), 3u);
}

TEST(Model, RejectsDependentBasis) {
    DenseMatrix<Q> b = DenseMatrix<Q>::from_rows({{1, 2}, {2, 4}});
    EXPECT_THROW(TensorModel<Q>(Shape{2}, b), Error);
    EXPECT_THROW(TensorModel<Q>(Shape{3}, DenseMatrix<Q>::identity(2)), ShapeError);
}

TEST(Pure, OuterProductCoefficients) {
    auto t = pure<Q>(Shape{2, 2}, std::vector<std::vector<Q>>{{1, 2}, {3, 4}});
    EXPECT_EQ(t.coeffs, (std::vector<Q>{3, 4, 6, 8}));
    EXPECT_TRUE(oracle::run_suite("tensor.pure", 1).ok());
    EXPECT_THROW(pure<Q>(Shape{2, 2}, std::vector<std::vector<Q>>{{1, 2}}), ShapeError);
}

TEST(Verify, AcceptsOuterProductTable) {
    auto v = verify_tensor_product(outer_product_table(), 4);
    EXPECT_TRUE(v.is_tensor_product);
    EXPECT_EQ(v.failed, Criterion::none);
    EXPECT_TRUE(v.witness.empty());
    EXPECT_EQ(model_from_nu(outer_product_table()).dim(), 4u);
}

TEST(Verify, DuplicateImageGivesWitness) {
    NuTable<Q> nu(Shape{2, 2}, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}});
    auto v = verify_tensor_product(nu, 4);
    EXPECT_FALSE(v.is_tensor_product);
    EXPECT_EQ(v.failed, Criterion::span);
    EXPECT_EQ(v.rank, 3u);
    ASSERT_EQ(v.witness.size(), 2u);
    EXPECT_EQ(v.witness[0].first, (MultiIndex{1, 2}));
    EXPECT_EQ(v.witness[1].first, (MultiIndex{2, 1}));
    Q sum = v.witness[0].second + v.witness[1].second;
    EXPECT_EQ(sum, Q(0));
    EXPECT_THROW(model_from_nu(nu), Error);
}

TEST(Verify, WrongAmbientDimension) {
    // Four independent images in a 5-dimensional P cannot span it.
    NuTable<Q> nu(Shape{2, 2}, 5, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}});
    auto v = verify_tensor_product(nu, 5);
    EXPECT_FALSE(v.is_tensor_product);
    EXPECT_EQ(v.failed, Criterion::dimension);
    EXPECT_FALSE(v.span_ok);
    EXPECT_THROW(verify_tensor_product(nu, 4), ShapeError);
}

TEST(Verify, RandomTables) { EXPECT_TRUE(oracle::run_suite("tensor.verify", 2).ok()); }

TEST(UniversalFactor, AgreesWithEvaluate) {
    EXPECT_TRUE(oracle::run_suite("tensor.universal_factor", 3).ok());
    auto model = build_model<Q>(Shape{2, 2});
    EXPECT_THROW(universal_factor(model, basis_functional<Q>(Shape{2, 3}, MultiIndex{1, 1})), ShapeError);
}

TEST(UniversalFactor, FactorIsUniqueOnTheBasis) {
    // Any linear h with h(p_γ) = s_γ for all γ has the same matrix.
    oracle::Rng rng(9);
    Shape s{2, 3};
    std::vector<std::vector<Q>> values;
    for (int k = 0; k < 6; ++k)
        values.push_back(oracle::random_vector<Q>(rng, 2));
    auto phi = from_values<Q>(s, 2, values);
    auto h = universal_factor(build_model<Q>(s), phi);
    for (const auto& g : enumerate(s)) {
        auto img = h.apply(basis_tensor<Q>(s, g).coeffs);
        auto want = phi.value(g);
        EXPECT_TRUE(std::equal(img.begin(), img.end(), want.begin()));
    }
}

TEST(CanonicalIsomorphism, CoordinateModelsGiveIdentity) {
    auto m = build_model<Q>(Shape{2, 2});
    EXPECT_EQ(canonical_isomorphism(m, m).matrix(), DenseMatrix<Q>::identity(4));
    EXPECT_THROW(canonical_isomorphism(m, build_model<Q>(Shape{4})), ShapeError);
    EXPECT_TRUE(oracle::run_suite("tensor.canonical_isomorphism", 4).ok());
}

TEST(SubspaceProduct, BlockOfThreeByFour) {
    auto sp = subspace_product(build_model<Q>(Shape{3, 4}), {{1, 3}, {2, 4}});
    EXPECT_EQ(sp.sub_model.dim(), 4u);
    std::vector<MultiIndex> images;
    for (const auto& g : enumerate(sp.sub_model.shape()))
        images.push_back(sp.parent_index(g));
    EXPECT_EQ(images, (std::vector<MultiIndex>{{1, 2}, {1, 4}, {3, 2}, {3, 4}}));
    const auto& e = sp.embedding.matrix();
    EXPECT_EQ(e(offset(Shape{3, 4}, MultiIndex{3, 2}), 2), Q(1));
    EXPECT_TRUE(oracle::run_suite("tensor.subspace_product", 5).ok());
}

TEST(SubspaceProduct, RejectsBadSubsets) {
    auto m = build_model<Q>(Shape{3, 4});
    EXPECT_THROW(subspace_product(m, {{1}, {}}), ShapeError);
    EXPECT_THROW(subspace_product(m, {{1, 1}, {2}}), ShapeError);
    EXPECT_THROW(subspace_product(m, {{4}, {2}}), RangeError);
    EXPECT_THROW(subspace_product(m, {{1}}), ShapeError);
}

TEST(DualEval, PairsPureTensorWithFunctional) {
    auto model = build_model<Q>(Shape{2, 2});
    auto t = pure(model, std::vector<std::vector<Q>>{{1, 2}, {3, 4}});
    EXPECT_EQ(dual_eval(model, t, basis_functional<Q>(Shape{2, 2}, MultiIndex{2, 1})), Q(6));
    EXPECT_TRUE(oracle::run_suite("tensor.dual_eval", 6).ok());
    auto vec_valued = from_values<Q>(Shape{2, 2}, 2, std::vector<std::vector<Q>>(4, {1, 1}));
    EXPECT_THROW(dual_eval(t, vec_valued), ShapeError);
}

TEST(Regroup, ConcatenationIdentification) {
    Regrouping r(Shape{2, 2, 2}, 1);
    EXPECT_EQ(r.left(), (Shape{2}));
    EXPECT_EQ(r.right(), (Shape{2, 2}));
    auto [a, b] = r.split(MultiIndex{2, 1, 2});
    EXPECT_EQ(a, (MultiIndex{2}));
    EXPECT_EQ(b, (MultiIndex{1, 2}));
    EXPECT_THROW(Regrouping(Shape{2, 2}, 2), RangeError);
    EXPECT_THROW(Regrouping(Shape{2, 2}, 0), RangeError);
    EXPECT_TRUE(oracle::run_suite("tensor.regroup", 7).ok());
}

TEST(MatrixOf, BasePairExample) {
    // T(v1) = 2w1 + 3w2 - w3, T(v2) = w1 + 5w2 + w3
    auto a = matrix_of<Q>({{2, 3, -1}, {1, 5, 1}}, 2, 3);
    EXPECT_EQ(a, DenseMatrix<Q>::from_rows({{2, 1}, {3, 5}, {-1, 1}}));
    EXPECT_THROW(matrix_of<Q>({{2, 3, -1}}, 2, 3), ShapeError);
}

TEST(MatrixOf, NonStandardCodomainBasis) {
    // w1 = (1,1), w2 = (0,1); T(v1) = (2,5) = 2w1 + 3w2.
    auto w = DenseMatrix<Q>::from_rows({{1, 0}, {1, 1}});
    auto a = matrix_of<Q>(std::vector<std::vector<Q>>{{2, 5}}, w);
    EXPECT_EQ(a, DenseMatrix<Q>::from_rows({{2}, {3}}));
    EXPECT_TRUE(oracle::run_suite("tensor.matrix_of", 8).ok());
}
