#pragma once

// Scalar fields used throughout kronlab.
//
// Three concrete backends are provided:
//   Rational   exact rationals (GMP), always in lowest terms
//   Gaussian   exact Gaussian rationals re + im*i
//   Complex64  IEEE double-precision complex numbers
//
// Generic algorithms are templates over the scalar type and rely only on the
// free functions declared here (zero/one/conj/is_zero/...). `Scalar` is a
// runtime-tagged value for the CLI and JSON layers; it never promotes between
// backends implicitly.

#include <complex>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

#include "kronlab/error.hpp"

namespace kronlab {

using Rational = mpq_class;
using Complex64 = std::complex<double>;

/// Builds p/q in canonical form. Throws DivisionByZero when q == 0.
Rational make_rational(long p, long q = 1);

struct Gaussian {
    Rational re;
    Rational im;

    Gaussian() = default;
    Gaussian(Rational r) : re(std::move(r)) {}            // NOLINT: implicit embedding of the reals
    Gaussian(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
    Gaussian(long r) : re(r) {}                            // NOLINT

    Gaussian& operator+=(const Gaussian& o) {
        re += o.re;
        im += o.im;
        return *this;
    }
    Gaussian& operator-=(const Gaussian& o) {
        re -= o.re;
        im -= o.im;
        return *this;
    }
    Gaussian& operator*=(const Gaussian& o) {
        Rational r = re * o.re - im * o.im;
        Rational i = re * o.im + im * o.re;
        re = std::move(r);
        im = std::move(i);
        return *this;
    }
    Gaussian& operator/=(const Gaussian& o);

    friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
    friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
    friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
    friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
    friend Gaussian operator-(const Gaussian& a) { return {-a.re, -a.im}; }
    friend bool operator==(const Gaussian& a, const Gaussian& b) { return a.re == b.re && a.im == b.im; }
};

// ---------------------------------------------------------------------------
// Field interface used by the generic code.

template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "rational";
};

template <>
struct ScalarTraits<Gaussian> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "gaussian";
};

template <>
struct ScalarTraits<Complex64> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "complex64";
};

template <class T>
concept Field = requires { ScalarTraits<T>::exact; } && requires(T a, T b) {
    { a + b } -> std::convertible_to<T>;
    { a - b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
};

template <class T>
inline constexpr bool is_exact_v = ScalarTraits<T>::exact;

template <Field T>
T zero() {
    return T(0);
}

template <Field T>
T one() {
    return T(1);
}

template <Field T>
T from_int(long v) {
    return T(v);
}

inline Rational conj(const Rational& a) { return a; }
inline Gaussian conj(const Gaussian& a) { return {a.re, -a.im}; }
inline Complex64 conj(const Complex64& a) { return std::conj(a); }

inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(const Gaussian& a) { return sgn(a.re) == 0 && sgn(a.im) == 0; }
inline bool is_zero(const Complex64& a) { return a == Complex64{}; }

/// Field division; throws DivisionByZero instead of trapping.
Rational checked_div(const Rational& a, const Rational& b);
Gaussian checked_div(const Gaussian& a, const Gaussian& b);
Complex64 checked_div(const Complex64& a, const Complex64& b);

/// Approximate equality. Exact backends ignore `tol` and compare exactly;
/// Complex64 uses |a-b| <= tol * max(1, |a|, |b|).
bool near(const Rational& a, const Rational& b, double tol = 0.0);
bool near(const Gaussian& a, const Gaussian& b, double tol = 0.0);
bool near(const Complex64& a, const Complex64& b, double tol);

/// Real and imaginary parts projected to double (used for float comparisons
/// and reporting only).
Complex64 to_complex(const Rational& a);
Complex64 to_complex(const Gaussian& a);
inline Complex64 to_complex(const Complex64& a) { return a; }

// Text forms: "p/q" (or "p"), "a+bi" with rational parts, "re,im" decimals.
std::string to_string(const Rational& a);
std::string to_string(const Gaussian& a);
std::string to_string(const Complex64& a);

Rational parse_rational(std::string_view text);
Gaussian parse_gaussian(std::string_view text);
Complex64 parse_complex(std::string_view text);

// ---------------------------------------------------------------------------
// Runtime-tagged scalar.

enum class Backend { rational, gaussian, complex64 };

std::string_view backend_name(Backend b);
Backend parse_backend(std::string_view name);

template <class T>
constexpr Backend backend_of();
template <>
constexpr Backend backend_of<Rational>() { return Backend::rational; }
template <>
constexpr Backend backend_of<Gaussian>() { return Backend::gaussian; }
template <>
constexpr Backend backend_of<Complex64>() { return Backend::complex64; }

class Scalar {
public:
    using Storage = std::variant<Rational, Gaussian, Complex64>;

    Scalar() : value_(Rational(0)) {}
    Scalar(Rational v) : value_(std::move(v)) {}   // NOLINT
    Scalar(Gaussian v) : value_(std::move(v)) {}   // NOLINT
    Scalar(Complex64 v) : value_(v) {}             // NOLINT

    Backend backend() const { return static_cast<Backend>(value_.index()); }
    const Storage& storage() const { return value_; }

    template <class T>
    const T& as() const;

    /// Parses `text` in the text form of backend `b`.
    static Scalar parse(Backend b, std::string_view text);
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b) { return a.value_ == b.value_; }

private:
    Storage value_;
};

Scalar add(const Scalar& a, const Scalar& b);
Scalar sub(const Scalar& a, const Scalar& b);
Scalar mul(const Scalar& a, const Scalar& b);
Scalar div(const Scalar& a, const Scalar& b);
Scalar conj(const Scalar& a);

/// Explicit conversions. Rational embeds exactly into Gaussian; exact values
/// round to Complex64. No conversion narrows Complex64 back to exact.
Scalar convert(const Scalar& a, Backend target);

template <class T>
const T& Scalar::as() const {
    if (!std::holds_alternative<T>(value_))
        throw BackendMismatch(std::string(backend_name(backend())),
                              std::string(ScalarTraits<T>::name));
    return std::get<T>(value_);
}

} // namespace kronlab
