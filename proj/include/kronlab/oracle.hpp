#pragma once

// Brute-force reference computations and randomized check suites.
//
// The references here deliberately avoid the library's own indexing and
// contraction code: multi-indices come from a recursive product, Kronecker
// entries from digit decoding, products from triple loops.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kronlab/matrix.hpp"
#include "kronlab/scalars.hpp"

namespace kronlab::oracle {

using Rng = std::mt19937_64;

Rational random_rational(Rng& rng, long range = 9, long max_den = 5);

template <Field T>
T random_scalar(Rng& rng);

template <>
inline Rational random_scalar<Rational>(Rng& rng) {
    return random_rational(rng);
}

template <>
inline Gaussian random_scalar<Gaussian>(Rng& rng) {
    Rational re = random_rational(rng);
    Rational im = random_rational(rng);
    return {re, im};
}

template <>
inline Complex64 random_scalar<Complex64>(Rng& rng) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    double re = u(rng);
    double im = u(rng);
    return {re, im};
}

template <Field T>
std::vector<T> random_vector(Rng& rng, std::size_t n) {
    std::vector<T> v;
    v.reserve(n);
    for (std::size_t k = 0; k < n; ++k)
        v.push_back(random_scalar<T>(rng));
    return v;
}

template <Field T>
DenseMatrix<T> random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
    return DenseMatrix<T>(rows, cols, random_vector<T>(rng, rows * cols));
}

/// Invertible by construction: unit lower triangular times upper triangular
/// with nonzero diagonal.
template <Field T>
DenseMatrix<T> random_invertible(Rng& rng, std::size_t n) {
    DenseMatrix<T> l(n, n), u(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i > j)
                l(i, j) = random_scalar<T>(rng);
            else if (i == j)
                l(i, j) = one<T>();
            if (i < j)
                u(i, j) = random_scalar<T>(rng);
            else if (i == j) {
                T d = random_scalar<T>(rng);
                while (is_zero(d))
                    d = random_scalar<T>(rng);
                u(i, j) = d;
            }
        }
    DenseMatrix<T> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                out(i, j) += l(i, k) * u(k, j);
    return out;
}

/// Every tuple (g_1..g_m), 1 <= g_i <= dims[i], built by recursive product
/// with the last position varying fastest.
std::vector<std::vector<std::size_t>> brute_enumerate(const std::vector<std::size_t>& dims);

template <Field T>
DenseMatrix<T> naive_matmul(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    DenseMatrix<T> c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            T s = zero<T>();
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    return c;
}

template <Field T>
std::vector<T> naive_matvec(const DenseMatrix<T>& a, const std::vector<T>& x) {
    std::vector<T> y(a.rows(), zero<T>());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            y[i] += a(i, j) * x[j];
    return y;
}

/// Kronecker entry at 0-based flat (row, col): decode both into per-factor
/// digits (last factor least significant) and multiply.
template <Field T>
T kron_entry_by_digits(const std::vector<DenseMatrix<T>>& factors, std::size_t row, std::size_t col) {
    T acc = one<T>();
    for (std::size_t i = factors.size(); i-- > 0;) {
        std::size_t r = row % factors[i].rows(), c = col % factors[i].cols();
        row /= factors[i].rows();
        col /= factors[i].cols();
        acc *= factors[i](r, c);
    }
    return acc;
}

template <Field T>
DenseMatrix<T> kron_by_digits(const std::vector<DenseMatrix<T>>& factors) {
    std::size_t p = 1, q = 1;
    for (const auto& f : factors) {
        p *= f.rows();
        q *= f.cols();
    }
    DenseMatrix<T> out(p, q);
    for (std::size_t r = 0; r < p; ++r)
        for (std::size_t c = 0; c < q; ++c)
            out(r, c) = kron_entry_by_digits(factors, r, c);
    return out;
}

/// Σ_γ ∏_i xs[i][γ(i)] · values[γ], with γ from brute_enumerate.
template <Field T>
std::vector<T> brute_evaluate(const std::vector<std::size_t>& dims, const std::vector<std::vector<T>>& values,
                              const std::vector<std::vector<T>>& xs) {
    auto all = brute_enumerate(dims);
    std::vector<T> out(values.front().size(), zero<T>());
    for (std::size_t k = 0; k < all.size(); ++k) {
        T c = one<T>();
        for (std::size_t i = 0; i < dims.size(); ++i)
            c *= xs[i][all[k][i] - 1];
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] += c * values[k][j];
    }
    return out;
}

template <Field T>
std::vector<T> brute_pure(const std::vector<std::size_t>& dims, const std::vector<std::vector<T>>& xs) {
    std::vector<T> out;
    for (const auto& g : brute_enumerate(dims)) {
        T c = one<T>();
        for (std::size_t i = 0; i < dims.size(); ++i)
            c *= xs[i][g[i] - 1];
        out.push_back(c);
    }
    return out;
}

struct SuiteResult {
    std::string name;
    std::size_t cases = 0;
    std::size_t passed = 0;

    bool ok() const { return cases > 0 && passed == cases; }
};

std::vector<std::string> suite_names();
/// Throws RangeError for an unknown name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);
std::vector<SuiteResult> run_all(std::uint64_t seed);

} // namespace kronlab::oracle
