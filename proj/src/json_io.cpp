#include "kronlab/json_io.hpp"

#include <fstream>
#include <sstream>

namespace kronlab::json_io {

Json read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("json", "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    try {
        return Json::parse(ss.str());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("json", path + ": " + e.what());
    }
}

Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("json", e.what());
    }
}

namespace {

std::string exact_text(const Json& j) {
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    if (j.is_number_unsigned())
        return std::to_string(j.get<unsigned long long>());
    if (j.is_number_float()) {
        std::ostringstream os;
        os.precision(17);
        os << j.get<double>();
        return os.str();
    }
    throw ParseError("json", "expected an exact scalar (string or integer), got " + j.dump());
}

} // namespace

template <>
Rational scalar_from<Rational>(const Json& j) {
    return parse_rational(exact_text(j));
}

template <>
Gaussian scalar_from<Gaussian>(const Json& j) {
    if (j.is_array() && j.size() == 2)
        return {parse_rational(exact_text(j[0])), parse_rational(exact_text(j[1]))};
    return parse_gaussian(exact_text(j));
}

template <>
Complex64 scalar_from<Complex64>(const Json& j) {
    if (j.is_number())
        return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    if (j.is_string())
        return parse_complex(j.get<std::string>());
    throw ParseError("json", "expected a complex scalar [re, im], got " + j.dump());
}

template <>
Json scalar_to<Rational>(const Rational& v) {
    if (v.get_den() == 1 && v.get_num().fits_slong_p())
        return v.get_num().get_si();
    return to_string(v);
}

template <>
Json scalar_to<Gaussian>(const Gaussian& v) {
    if (sgn(v.im) == 0)
        return scalar_to<Rational>(v.re);
    return to_string(v);
}

template <>
Json scalar_to<Complex64>(const Complex64& v) {
    return Json::array({v.real(), v.imag()});
}

std::size_t count_from(const Json& j, const char* key) {
    if (!j.contains(key))
        throw ParseError("json", std::string("missing \"") + key + "\"");
    const Json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError("json", std::string("\"") + key + "\" must be a nonnegative integer");
    return v.get<std::size_t>();
}

Shape shape_from(const Json& j) {
    if (!j.is_array())
        throw ParseError("json", "shape must be an array of positive integers");
    std::vector<std::size_t> dims;
    for (const auto& d : j) {
        if (!d.is_number_integer() || d.get<long long>() < 1)
            throw ParseError("json", "shape must be an array of positive integers");
        dims.push_back(d.get<std::size_t>());
    }
    return Shape(std::move(dims));
}

Json shape_to(const Shape& s) {
    return Json(std::vector<std::size_t>(s.dims().begin(), s.dims().end()));
}

MultiIndex index_from(const Json& j) {
    if (!j.is_array())
        throw ParseError("json", "multi-index must be an array of positive integers");
    std::vector<std::size_t> e;
    for (const auto& d : j) {
        if (!d.is_number_integer() || d.get<long long>() < 1)
            throw ParseError("json", "multi-index must be an array of positive integers");
        e.push_back(d.get<std::size_t>());
    }
    return MultiIndex(std::move(e));
}

Json index_to(const MultiIndex& g) {
    return Json(std::vector<std::size_t>(g.entries().begin(), g.entries().end()));
}

} // namespace kronlab::json_io
