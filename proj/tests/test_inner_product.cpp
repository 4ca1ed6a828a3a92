#include <gtest/gtest.h>

#include "kronlab/inner_product.hpp"
#include "kronlab/oracle.hpp"
#include "kronlab/tensor.hpp"

using namespace kronlab;
using G = Gaussian;

namespace {

G gi(long re, long im) { return G(Rational(re), Rational(im)); }

} // namespace

TEST(EvalForm, OrthonormalGramIsStandardSum) {
    auto phi = standard_form<G>(3);
    std::vector<G> a{gi(1, 2), gi(0, -1), gi(3, 0)}, b{gi(2, 0), gi(1, 1), gi(0, 4)};
    G want = zero<G>();
    for (std::size_t k = 0; k < 3; ++k)
        want += a[k] * conj(b[k]);
    EXPECT_EQ(eval_form(phi, a, b), want);
    EXPECT_THROW(eval_form(phi, a, std::vector<G>{gi(1, 0)}), ShapeError);
}

TEST(EvalForm, ConjugateLinearInSecondSlot) {
    EXPECT_TRUE(oracle::run_suite("inner_product.conjugate_homogeneity", 1).ok());
}

TEST(ProductForm, IdentityFactorsGiveIdentityGram) {
    Shape s{2, 3};
    std::vector<ConjugateBilinearForm<G>> f{standard_form<G>(2), standard_form<G>(3)};
    auto phi = product_form<G>(f, s, s);
    EXPECT_EQ(phi.gram(), DenseMatrix<G>::identity(6));
    for (const auto& a : enumerate(s))
        for (const auto& b : enumerate(s))
            EXPECT_EQ(eval_form(phi, basis_tensor<G>(s, a).coeffs, basis_tensor<G>(s, b).coeffs),
                      a == b ? one<G>() : zero<G>());
}

TEST(ProductForm, FactorsThroughPureTensors) {
    EXPECT_TRUE(oracle::run_suite("inner_product.product_form", 2).ok());
}

TEST(ProductForm, RejectsMismatchedFactors) {
    std::vector<ConjugateBilinearForm<G>> f{standard_form<G>(2), standard_form<G>(2)};
    EXPECT_THROW(product_form<G>(f, Shape{2, 3}, Shape{2, 3}), ShapeError);
    EXPECT_THROW(product_form<G>(f, Shape{2}, Shape{2}), ShapeError);
}

TEST(InducedInnerProduct, ProductOfFactorProducts) { EXPECT_TRUE(oracle::run_suite("inner_product.induced", 3).ok()); }

TEST(InducedInnerProduct, PositiveDefinite) {
    EXPECT_TRUE(oracle::run_suite("inner_product.positive_definite", 4).ok());
}

TEST(CheckInnerProduct, RejectsNonHermitian) {
    auto g = DenseMatrix<G>::from_rows({{gi(2, 0), gi(1, 1)}, {gi(1, 1), gi(2, 0)}});
    auto rep = check_inner_product(g);
    EXPECT_FALSE(rep.conjugate_symmetric);
    EXPECT_FALSE(rep.ok());
    EXPECT_THROW(InnerProductForm<G>(ConjugateBilinearForm<G>(g)), Error);
}

TEST(CheckInnerProduct, RejectsIndefinite) {
    auto g = DenseMatrix<G>::from_rows({{gi(1, 0), gi(2, 0)}, {gi(2, 0), gi(1, 0)}});
    auto rep = check_inner_product(g);
    EXPECT_TRUE(rep.conjugate_symmetric);
    EXPECT_FALSE(rep.positive_definite);
    EXPECT_EQ(rep.failing_minor, 2u);
}

TEST(CheckInnerProduct, AcceptsHermitianPositive) {
    auto g = DenseMatrix<G>::from_rows({{gi(2, 0), gi(0, 1)}, {gi(0, -1), gi(2, 0)}});
    EXPECT_TRUE(check_inner_product(g).ok());
    EXPECT_FALSE(check_inner_product(DenseMatrix<G>(2, 3)).square);
}

TEST(CheckInnerProduct, ComplexToleranceOnGram) {
    auto g = DenseMatrix<Complex64>::from_rows({{{2, 0}, {0, 1}}, {{0, -1}, {2, 1e-15}}});
    EXPECT_TRUE(check_inner_product(g).ok());
}
