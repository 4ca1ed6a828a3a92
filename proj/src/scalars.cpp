#include "kronlab/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace kronlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
        s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.remove_suffix(1);
    return s;
}

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Parses an optionally signed decimal integer, e.g. "-12".
mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s))
        throw ParseError("scalars", "malformed rational '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

// Decimal literal such as "-1.25" converted exactly.
Rational parse_decimal(std::string_view s, std::string_view whole) {
    auto dot = s.find('.');
    std::string_view ip = s.substr(0, dot);
    std::string_view fp = s.substr(dot + 1);
    bool neg = !ip.empty() && ip.front() == '-';
    if (!ip.empty() && (ip.front() == '-' || ip.front() == '+'))
        ip.remove_prefix(1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw ParseError("scalars", "malformed rational '" + std::string(whole) + "'");
    std::string digits = std::string(ip) + std::string(fp);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, fp.size());
    Rational r(neg ? mpz_class(-num) : num, den);
    r.canonicalize();
    return r;
}

// Splits "a+bi" / "a-bi" at the sign that starts the imaginary part.
std::size_t imaginary_split(std::string_view s) {
    for (std::size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E')
            return i;
    }
    return std::string_view::npos;
}

} // namespace

Rational make_rational(long p, long q) {
    if (q == 0)
        throw DivisionByZero();
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
    Rational n = o.re * o.re + o.im * o.im;
    if (sgn(n) == 0)
        throw DivisionByZero();
    Rational r = (re * o.re + im * o.im) / n;
    Rational i = (im * o.re - re * o.im) / n;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

Rational checked_div(const Rational& a, const Rational& b) {
    if (sgn(b) == 0)
        throw DivisionByZero();
    return a / b;
}

Gaussian checked_div(const Gaussian& a, const Gaussian& b) { return a / b; }

Complex64 checked_div(const Complex64& a, const Complex64& b) {
    if (b == Complex64{})
        throw DivisionByZero();
    return a / b;
}

bool near(const Rational& a, const Rational& b, double) { return a == b; }
bool near(const Gaussian& a, const Gaussian& b, double) { return a == b; }

bool near(const Complex64& a, const Complex64& b, double tol) {
    double scale = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) <= tol * scale;
}

Complex64 to_complex(const Rational& a) { return {a.get_d(), 0.0}; }
Complex64 to_complex(const Gaussian& a) { return {a.re.get_d(), a.im.get_d()}; }

std::string to_string(const Rational& a) { return a.get_str(); }

std::string to_string(const Gaussian& a) {
    if (sgn(a.im) == 0)
        return a.re.get_str();
    std::string out = sgn(a.re) == 0 ? std::string() : a.re.get_str();
    if (sgn(a.im) > 0 && !out.empty())
        out += '+';
    if (a.im == 1)
        out += 'i';
    else if (a.im == -1)
        out += "-i";
    else
        out += a.im.get_str() + 'i';
    return out;
}

std::string to_string(const Complex64& a) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", a.real(), a.imag());
    return buf;
}

Rational parse_rational(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("scalars", "empty rational");
    if (s.find('.') != std::string_view::npos)
        return parse_decimal(s, text);
    auto slash = s.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_integer(s, text));
    mpz_class num = parse_integer(s.substr(0, slash), text);
    mpz_class den = parse_integer(s.substr(slash + 1), text);
    if (den == 0)
        throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Gaussian parse_gaussian(std::string_view text) {
    std::string_view s = trim(text);
    if (s.empty())
        throw ParseError("scalars", "empty gaussian rational");
    if (s.back() != 'i')
        return Gaussian(parse_rational(s));
    s.remove_suffix(1);
    std::size_t split = imaginary_split(s);
    std::string_view re_part = split == std::string_view::npos ? std::string_view() : s.substr(0, split);
    std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
    Rational im;
    if (im_part.empty() || im_part == "+")
        im = 1;
    else if (im_part == "-")
        im = -1;
    else
        im = parse_rational(im_part.front() == '+' ? im_part.substr(1) : im_part);
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part);
    return {re, im};
}

Complex64 parse_complex(std::string_view text) {
    std::string s(trim(text));
    auto comma = s.find(',');
    try {
        std::size_t used = 0;
        if (comma == std::string::npos) {
            double re = std::stod(s, &used);
            if (used != s.size())
                throw std::invalid_argument("trailing");
            return {re, 0.0};
        }
        std::string a = s.substr(0, comma), b = s.substr(comma + 1);
        double re = std::stod(a, &used);
        if (trim(a.substr(used)) != "")
            throw std::invalid_argument("trailing");
        double im = std::stod(b, &used);
        if (trim(b.substr(used)) != "")
            throw std::invalid_argument("trailing");
        return {re, im};
    } catch (const std::logic_error&) {
        throw ParseError("scalars", "malformed complex '" + s + "'");
    }
}

std::string_view backend_name(Backend b) {
    switch (b) {
    case Backend::rational: return "rational";
    case Backend::gaussian: return "gaussian";
    case Backend::complex64: return "complex64";
    }
    return "?";
}

Backend parse_backend(std::string_view name) {
    if (name == "rational")
        return Backend::rational;
    if (name == "gaussian")
        return Backend::gaussian;
    if (name == "complex64" || name == "complex")
        return Backend::complex64;
    throw ParseError("scalars", "unknown backend '" + std::string(name) + "'");
}

Scalar Scalar::parse(Backend b, std::string_view text) {
    switch (b) {
    case Backend::rational: return parse_rational(text);
    case Backend::gaussian: return parse_gaussian(text);
    case Backend::complex64: return parse_complex(text);
    }
    throw ParseError("scalars", "unknown backend");
}

std::string Scalar::to_string() const {
    return std::visit([](const auto& v) { return kronlab::to_string(v); }, value_);
}

namespace {

template <class Op>
Scalar binary(const Scalar& a, const Scalar& b, Op op) {
    if (a.backend() != b.backend())
        throw BackendMismatch(std::string(backend_name(a.backend())), std::string(backend_name(b.backend())));
    return std::visit(
        [&](const auto& x) -> Scalar {
            using T = std::decay_t<decltype(x)>;
            return Scalar(T(op(x, std::get<T>(b.storage()))));
        },
        a.storage());
}

} // namespace

Scalar add(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x + y; });
}
Scalar sub(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x - y; });
}
Scalar mul(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return x * y; });
}
Scalar div(const Scalar& a, const Scalar& b) {
    return binary(a, b, [](const auto& x, const auto& y) { return checked_div(x, y); });
}

Scalar conj(const Scalar& a) {
    return std::visit([](const auto& v) { return Scalar(conj(v)); }, a.storage());
}

Scalar convert(const Scalar& a, Backend target) {
    if (a.backend() == target)
        return a;
    switch (target) {
    case Backend::rational:
        if (a.backend() == Backend::gaussian && is_zero(a.as<Gaussian>().im))
            return a.as<Gaussian>().re;
        break;
    case Backend::gaussian:
        if (a.backend() == Backend::rational)
            return Gaussian(a.as<Rational>());
        break;
    case Backend::complex64:
        return std::visit([](const auto& v) { return Scalar(to_complex(v)); }, a.storage());
    }
    throw Error("scalars", "no exact conversion from " + std::string(backend_name(a.backend())) + " to " +
                               std::string(backend_name(target)));
}

} // namespace kronlab
