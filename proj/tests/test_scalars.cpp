#include <gtest/gtest.h>

#include "kronlab/oracle.hpp"
#include "kronlab/scalars.hpp"

using namespace kronlab;

TEST(Rational, SumInLowestTerms) {
    Rational s = make_rational(1, 2) + make_rational(1, 3);
    EXPECT_EQ(s, make_rational(5, 6));
    EXPECT_EQ(to_string(s), "5/6");
}

TEST(Rational, CanonicalForm) {
    Rational r = make_rational(6, -4);
    EXPECT_EQ(r.get_num(), -3);
    EXPECT_EQ(r.get_den(), 2);
    EXPECT_THROW(make_rational(1, 0), DivisionByZero);
}

TEST(Rational, ParseForms) {
    EXPECT_EQ(parse_rational("-3/6"), make_rational(-1, 2));
    EXPECT_EQ(parse_rational("7"), make_rational(7));
    EXPECT_EQ(parse_rational("0.25"), make_rational(1, 4));
    EXPECT_EQ(parse_rational("-1.5"), make_rational(-3, 2));
    EXPECT_THROW(parse_rational("1/0"), DivisionByZero);
    EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Gaussian, NormOfConjugatePair) {
    Gaussian z(make_rational(1), make_rational(2));
    Gaussian w = z * conj(z);
    EXPECT_EQ(w, Gaussian(make_rational(5)));
    EXPECT_EQ(to_string(conj(z)), "1-2i");
}

TEST(Gaussian, ParseAndPrintRoundTrip) {
    for (const char* text : {"1+2i", "1-2i", "3/4", "-i", "i", "2i", "-1/2+3/5i", "0"}) {
        Gaussian g = parse_gaussian(text);
        EXPECT_EQ(parse_gaussian(to_string(g)), g) << text;
    }
    EXPECT_EQ(parse_gaussian("-2i"), Gaussian(Rational(0), Rational(-2)));
    EXPECT_THROW(parse_gaussian("1+2j"), ParseError);
}

TEST(Gaussian, DivisionInverts) {
    oracle::Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        Gaussian a = oracle::random_scalar<Gaussian>(rng), b = oracle::random_scalar<Gaussian>(rng);
        if (is_zero(b))
            continue;
        EXPECT_EQ(checked_div(a, b) * b, a);
    }
    EXPECT_THROW(checked_div(Gaussian(1), Gaussian(0)), DivisionByZero);
}

TEST(Conj, IdentityOnRationals) {
    EXPECT_EQ(conj(make_rational(3, 4)), make_rational(3, 4));
}

TEST(Complex, NearUsesRelativeTolerance) {
    EXPECT_TRUE(near(Complex64(1e6, 0), Complex64(1e6 + 1e-7, 0), 1e-12));
    EXPECT_FALSE(near(Complex64(1, 0), Complex64(1.001, 0), 1e-12));
    EXPECT_THROW(checked_div(Complex64(1, 0), Complex64(0, 0)), DivisionByZero);
}

TEST(ScalarValue, ArithmeticWithinBackend) {
    Scalar a = Scalar::parse(Backend::rational, "1/2");
    Scalar b = Scalar::parse(Backend::rational, "1/3");
    EXPECT_EQ(add(a, b).to_string(), "5/6");
    EXPECT_EQ(sub(a, b).to_string(), "1/6");
    EXPECT_EQ(mul(a, b).to_string(), "1/6");
    EXPECT_EQ(div(a, b).to_string(), "3/2");
    Scalar z = Scalar::parse(Backend::gaussian, "1+2i");
    EXPECT_EQ(mul(z, conj(z)).to_string(), "5");
}

TEST(ScalarValue, ErrorsAreReported) {
    Scalar one_q = Scalar::parse(Backend::rational, "1");
    Scalar zero_q = Scalar::parse(Backend::rational, "0");
    EXPECT_THROW(div(one_q, zero_q), DivisionByZero);
    EXPECT_THROW(add(one_q, Scalar::parse(Backend::gaussian, "1")), BackendMismatch);
    EXPECT_THROW((void)one_q.as<Gaussian>(), BackendMismatch);
    try {
        add(one_q, Scalar::parse(Backend::complex64, "1"));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.module(), "scalars");
    }
}

TEST(ScalarValue, ExplicitConversions) {
    Scalar q = Scalar::parse(Backend::rational, "3/4");
    EXPECT_EQ(convert(q, Backend::gaussian).backend(), Backend::gaussian);
    EXPECT_EQ(convert(q, Backend::complex64).as<Complex64>(), Complex64(0.75, 0));
    EXPECT_THROW(convert(Scalar::parse(Backend::complex64, "1,0"), Backend::rational), Error);
    EXPECT_THROW(convert(Scalar::parse(Backend::gaussian, "1+i"), Backend::rational), Error);
    EXPECT_EQ(convert(Scalar::parse(Backend::gaussian, "5/2"), Backend::rational).to_string(), "5/2");
}

TEST(Backend, Names) {
    for (auto b : {Backend::rational, Backend::gaussian, Backend::complex64})
        EXPECT_EQ(parse_backend(backend_name(b)), b);
    EXPECT_THROW(parse_backend("quaternion"), ParseError);
}

TEST(FieldProperties, RandomTriples) {
    EXPECT_TRUE(oracle::run_suite("scalars.field_axioms", 1).ok());
    EXPECT_TRUE(oracle::run_suite("scalars.conj_involution", 1).ok());
}
