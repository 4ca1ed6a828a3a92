#include <gtest/gtest.h>

#include "kronlab/json_io.hpp"
#include "kronlab/oracle.hpp"

using namespace kronlab;
using namespace kronlab::json_io;

TEST(JsonScalars, ExactForms) {
    EXPECT_EQ(scalar_from<Rational>(parse_text("\"1/2\"")), make_rational(1, 2));
    EXPECT_EQ(scalar_from<Rational>(parse_text("3")), Rational(3));
    EXPECT_EQ(scalar_to<Rational>(Rational(3)).dump(), "3");
    EXPECT_EQ(scalar_to<Rational>(make_rational(-1, 2)).dump(), "\"-1/2\"");
    EXPECT_EQ(scalar_from<Gaussian>(parse_text("\"1-2i\"")), Gaussian(Rational(1), Rational(-2)));
    EXPECT_EQ(scalar_from<Gaussian>(parse_text("[\"1/2\", 3]")), Gaussian(make_rational(1, 2), Rational(3)));
    EXPECT_THROW(scalar_from<Rational>(parse_text("[1]")), ParseError);
}

TEST(JsonScalars, ComplexForms) {
    EXPECT_EQ(scalar_from<Complex64>(parse_text("[1.5, -2]")), Complex64(1.5, -2));
    EXPECT_EQ(scalar_from<Complex64>(parse_text("0.25")), Complex64(0.25, 0));
    EXPECT_THROW(scalar_from<Complex64>(parse_text("{}")), ParseError);
}

TEST(JsonMatrix, FlatAndNested) {
    auto want = DenseMatrix<Rational>::from_rows({{1, 2, 3}, {4, 5, 6}});
    EXPECT_EQ(matrix_from<Rational>(parse_text(R"({"rows":2,"cols":3,"data":[1,2,3,4,5,6]})")), want);
    EXPECT_EQ(matrix_from<Rational>(parse_text(R"({"rows":2,"cols":3,"data":[[1,2,3],[4,5,6]]})")), want);
    EXPECT_EQ(matrix_from<Rational>(parse_text(R"([[1,2,3],[4,5,6]])")), want);
    EXPECT_THROW(matrix_from<Rational>(parse_text(R"({"rows":2,"cols":3,"data":[1,2]})")), Error);
    EXPECT_THROW(matrix_from<Rational>(parse_text(R"({"rows":2})")), ParseError);
}

TEST(JsonMatrix, ComplexFlatUsesPairs) {
    auto m = matrix_from<Complex64>(parse_text(R"({"rows":1,"cols":2,"data":[[1,2],[3,4]]})"));
    EXPECT_EQ(m(0, 1), Complex64(3, 4));
}

TEST(JsonRoundTrip, EveryWriterIsReadable) {
    oracle::Rng rng(21);
    auto m = oracle::random_matrix<Gaussian>(rng, 3, 2);
    EXPECT_EQ(matrix_from<Gaussian>(parse_text(matrix_to(m).dump())), m);

    auto t = make_tensor<Rational>(Shape{2, 3}, oracle::random_vector<Rational>(rng, 6));
    EXPECT_EQ(tensor_from<Rational>(parse_text(tensor_to(t).dump())), t);

    std::vector<std::vector<Rational>> values;
    for (int k = 0; k < 4; ++k)
        values.push_back(oracle::random_vector<Rational>(rng, 2));
    auto f = from_values<Rational>(Shape{2, 2}, 2, values);
    EXPECT_EQ(multilinear_from<Rational>(parse_text(multilinear_to(f).dump())), f);

    NuTable<Rational> nu(Shape{2}, 2, {{1, 0}, {0, 1}});
    auto back = nu_from<Rational>(parse_text(nu_to(nu).dump()));
    EXPECT_EQ(back.images(), nu.images());

    auto c = oracle::random_vector<Complex64>(rng, 5);
    EXPECT_EQ(vector_from<Complex64>(parse_text(vector_to(c).dump())), c);
}

TEST(JsonShapes, Validation) {
    EXPECT_EQ(shape_from(parse_text("[2,3]")), (Shape{2, 3}));
    EXPECT_THROW(shape_from(parse_text("[2,0]")), ParseError);
    EXPECT_THROW(shape_from(parse_text("\"2,3\"")), ParseError);
    EXPECT_THROW(tensor_from<Rational>(parse_text(R"({"shape":[2],"coeffs":[1]})")), ShapeError);
    EXPECT_THROW(parse_text("{"), ParseError);
    EXPECT_THROW(read_file("/nonexistent/file.json"), ParseError);
}
